#pragma once

#include <memory>
#include <stdexcept>
#include <string>
#include <vector>

#include "charp/field.hpp"

namespace charp {

/// Ambient polynomial ring descriptor: a prime field plus ordered variable
/// names. Rings compare by value, so independently constructed descriptors of
/// the same ring are interchangeable.
struct Ring {
    PrimeField field;
    std::vector<std::string> vars;

    Ring(PrimeField f, std::vector<std::string> v) : field(f), vars(std::move(v)) {
        for (std::size_t i = 0; i < vars.size(); ++i) {
            if (vars[i].empty())
                throw std::invalid_argument("Ring: empty variable name");
            for (std::size_t j = i + 1; j < vars.size(); ++j)
                if (vars[i] == vars[j])
                    throw std::invalid_argument("Ring: duplicate variable " + vars[i]);
        }
    }

    std::size_t nvars() const { return vars.size(); }

    std::int64_t p() const { return field.p(); }

    /// Index of a variable name, or npos.
    static constexpr std::size_t npos = static_cast<std::size_t>(-1);
    std::size_t var_index(const std::string& name) const {
        for (std::size_t i = 0; i < vars.size(); ++i)
            if (vars[i] == name) return i;
        return npos;
    }

    friend bool operator==(const Ring& a, const Ring& b) {
        return a.field == b.field && a.vars == b.vars;
    }
    friend bool operator!=(const Ring& a, const Ring& b) { return !(a == b); }
};

using RingPtr = std::shared_ptr<const Ring>;

inline RingPtr make_ring(std::int64_t p, std::vector<std::string> vars) {
    return std::make_shared<const Ring>(PrimeField(p), std::move(vars));
}

inline bool same_ring(const RingPtr& a, const RingPtr& b) {
    if (a == b) return true;
    if (!a || !b) return false;
    return *a == *b;
}

inline void require_same_ring(const RingPtr& a, const RingPtr& b) {
    if (!same_ring(a, b)) throw std::invalid_argument("ambient ring mismatch");
}

/// Ring with extra variables appended after the existing ones.
inline RingPtr extend_ring(const RingPtr& r, const std::vector<std::string>& extra) {
    std::vector<std::string> vars = r->vars;
    for (const auto& v : extra) {
        if (r->var_index(v) != Ring::npos)
            throw std::invalid_argument("extend_ring: variable " + v + " already present");
        vars.push_back(v);
    }
    return std::make_shared<const Ring>(r->field, std::move(vars));
}

/// Ring with one fresh variable prepended (tag variable for elimination).
/// Returns the ring and the chosen name.
inline std::pair<RingPtr, std::string> prepend_tag_ring(const RingPtr& r) {
    std::string name = "t_";
    while (r->var_index(name) != Ring::npos) name += "_";
    std::vector<std::string> vars;
    vars.reserve(r->nvars() + 1);
    vars.push_back(name);
    for (const auto& v : r->vars) vars.push_back(v);
    return {std::make_shared<const Ring>(r->field, std::move(vars)), name};
}

} // namespace charp
