#pragma once

#include <cstdint>
#include <functional>
#include <map>
#include <memory>
#include <mutex>
#include <set>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "charp/budget.hpp"
#include "charp/parse.hpp"
#include "charp/poly.hpp"

namespace charp {

struct GroebnerBasis;

namespace detail {
struct GbCache {
    std::mutex mu;
    std::shared_ptr<const GroebnerBasis> grevlex;
};
} // namespace detail

/// Finitely generated ideal of the ambient polynomial ring. Generators are
/// nonzero; an empty list is the zero ideal. The cached Groebner basis is
/// filled once under a lock, so concurrent readers see either absence or the
/// completed basis.
class Ideal {
public:
    explicit Ideal(RingPtr ring, std::vector<Poly> gens = {})
        : ring_(std::move(ring)),
          gens_(std::move(gens)),
          cache_(std::make_shared<detail::GbCache>()) {
        for (const auto& g : gens_) {
            require_same_ring(ring_, g.ring());
            if (g.is_zero())
                throw std::invalid_argument("Ideal: zero polynomial cannot be a generator");
        }
    }

    static Ideal unit(const RingPtr& ring) {
        return Ideal(ring, {Poly::constant(ring, 1)});
    }

    const RingPtr& ring() const { return ring_; }
    const std::vector<Poly>& gens() const { return gens_; }
    bool is_zero_ideal() const { return gens_.empty(); }

    /// Cheap sufficient check: some generator is a nonzero constant.
    bool has_unit_generator() const {
        for (const auto& g : gens_)
            if (!g.is_zero() && g.is_constant()) return true;
        return false;
    }

    detail::GbCache& gb_cache() const { return *cache_; }

private:
    RingPtr ring_;
    std::vector<Poly> gens_;
    std::shared_ptr<detail::GbCache> cache_;
};

inline Ideal ideal_from_strings(const RingPtr& ring, const std::vector<std::string>& gens) {
    std::vector<Poly> ps;
    ps.reserve(gens.size());
    for (const auto& s : gens) ps.push_back(parse_poly(s, ring));
    return Ideal(ring, std::move(ps));
}

/// The origin (v : v variable of the ring) -- the maximal ideal every local
/// threshold in this toolkit is computed at.
inline Ideal origin_maximal_ideal(const RingPtr& ring) {
    if (ring->nvars() == 0) throw input_error("origin_maximal_ideal: ring has no variables");
    std::vector<Poly> gens;
    gens.reserve(ring->nvars());
    for (std::size_t i = 0; i < ring->nvars(); ++i) gens.push_back(Poly::variable(ring, i));
    return Ideal(ring, std::move(gens));
}

/// Mask of the variables generating a maximal ideal of the form (v_i, ...).
inline VarMask mask_from_maximal_ideal(const Ideal& m) {
    const RingPtr& ring = m.ring();
    VarMask mask(ring->nvars(), 0);
    for (const auto& g : m.gens()) {
        if (g.nterms() != 1 || g.terms()[0].mono.degree() != 1)
            throw input_error("expected a variable-generated maximal ideal");
        for (std::size_t i = 0; i < ring->nvars(); ++i)
            if (g.terms()[0].mono[i] == 1) mask[i] = 1;
    }
    return mask;
}

/// I is inside the monomial maximal ideal described by mask iff every term of
/// every generator involves a masked variable.
inline bool contained_in_locus(const Ideal& I, const VarMask& mask) {
    for (const auto& g : I.gens()) {
        for (const auto& t : g.terms()) {
            bool touched = false;
            for (std::size_t i = 0; i < t.mono.nvars() && !touched; ++i) {
                if (!mask.empty() && !mask[i]) continue;
                touched = t.mono[i] > 0;
            }
            if (!touched) return false;
        }
    }
    return true;
}

inline std::uint64_t multiset_count(std::uint64_t g, std::uint64_t n) {
    // C(n + g - 1, g - 1), saturating
    if (g == 0) return n == 0 ? 1 : 0;
    __uint128_t acc = 1;
    for (std::uint64_t i = 1; i < g; ++i) {
        acc = acc * (n + i) / i;
        if (acc > UINT64_MAX / 2) return UINT64_MAX / 2;
    }
    return static_cast<std::uint64_t>(acc);
}

/// Reduce a generating set without changing the ideal: monic normalization,
/// duplicate removal, collapse to (1) on a unit generator, and a monomial
/// divisibility pre-filter (a generator all of whose terms are divisible by a
/// kept monomial generator is redundant).
inline std::vector<Poly> interreduce_generators(std::vector<Poly> gens, const RingPtr& ring) {
    MonomialOrder g = MonomialOrder::grevlex();
    std::set<Poly> seen;
    std::vector<Poly> monos, rest;
    for (auto& f : gens) {
        if (f.is_zero()) continue;
        Poly m = f.monic(g);
        if (m.is_constant()) return {Poly::constant(ring, 1)};
        if (!seen.insert(m).second) continue;
        (m.nterms() == 1 ? monos : rest).push_back(std::move(m));
    }
    // minimal monomial generators
    std::vector<Poly> kept;
    for (std::size_t i = 0; i < monos.size(); ++i) {
        bool redundant = false;
        for (std::size_t j = 0; j < monos.size() && !redundant; ++j) {
            if (i == j) continue;
            const Monomial &mi = monos[i].terms()[0].mono, &mj = monos[j].terms()[0].mono;
            if (mj.divides(mi) && (mi != mj || j < i)) redundant = true;
        }
        if (!redundant) kept.push_back(monos[i]);
    }
    for (auto& f : rest) {
        bool covered = false;
        for (const auto& m : kept) {
            const Monomial& mm = m.terms()[0].mono;
            bool all = true;
            for (const auto& t : f.terms())
                if (!mm.divides(t.mono)) {
                    all = false;
                    break;
                }
            if (all) {
                covered = true;
                break;
            }
        }
        if (!covered) kept.push_back(std::move(f));
    }
    std::sort(kept.begin(), kept.end(), [&](const Poly& a, const Poly& b) {
        int c = g.cmp(a.terms()[0].mono, b.terms()[0].mono);
        if (c != 0) return c > 0;
        return a < b;
    });
    return kept;
}

/// Stream every product of exactly n generators (with repetition), computed
/// exactly. Deterministic DFS order; the callback may not mutate state shared
/// with other enumerations.
inline void for_each_power_product(const std::vector<Poly>& gens, std::int64_t n,
                                   const RingPtr& ring, const Budgets& budgets,
                                   const std::function<void(const Poly&)>& fn) {
    if (n < 0) throw std::invalid_argument("power exponent must be >= 0");
    budgets.check_generators(multiset_count(gens.size(), static_cast<std::uint64_t>(n)));
    if (n == 0) {
        fn(Poly::constant(ring, 1));
        return;
    }
    if (gens.empty()) return; // zero ideal: no products
    std::function<void(std::size_t, std::int64_t, const Poly&)> rec =
        [&](std::size_t idx, std::int64_t rem, const Poly& cur) {
            if (idx + 1 == gens.size()) {
                Poly prod = cur;
                for (std::int64_t i = 0; i < rem; ++i) prod = prod * gens[idx];
                fn(prod);
                return;
            }
            Poly acc = cur;
            for (std::int64_t e = 0; e <= rem; ++e) {
                rec(idx + 1, rem - e, acc);
                if (e < rem) acc = acc * gens[idx];
            }
        };
    rec(0, n, Poly::constant(ring, 1));
}

/// Ordinary ideal power I^n with an exact, deduplicated generator list.
inline Ideal ideal_power(const Ideal& I, std::int64_t n, const Budgets& budgets = default_budgets()) {
    if (n < 0) throw std::invalid_argument("ideal_power: negative exponent");
    if (n == 0) return Ideal::unit(I.ring());
    std::set<Poly> out;
    for_each_power_product(I.gens(), n, I.ring(), budgets,
                           [&](const Poly& f) { out.insert(f.monic(MonomialOrder::grevlex())); });
    std::vector<Poly> gens(out.begin(), out.end());
    return Ideal(I.ring(), interreduce_generators(std::move(gens), I.ring()));
}

inline Ideal ideal_product(const Ideal& I, const Ideal& J, const Budgets& budgets = default_budgets()) {
    require_same_ring(I.ring(), J.ring());
    budgets.check_generators(static_cast<std::uint64_t>(I.gens().size()) * J.gens().size());
    std::set<Poly> out;
    for (const auto& a : I.gens())
        for (const auto& b : J.gens()) out.insert((a * b).monic(MonomialOrder::grevlex()));
    std::vector<Poly> gens(out.begin(), out.end());
    return Ideal(I.ring(), interreduce_generators(std::move(gens), I.ring()));
}

inline Ideal ideal_sum(const Ideal& I, const Ideal& J) {
    require_same_ring(I.ring(), J.ring());
    std::vector<Poly> gens = I.gens();
    gens.insert(gens.end(), J.gens().begin(), J.gens().end());
    return Ideal(I.ring(), interreduce_generators(std::move(gens), I.ring()));
}

/// Distinct nonzero products of exactly r generators modulo the bracket ideal
/// (v^q : v masked). Levels are built incrementally with deduplication; an
/// empty level at r proves I^r lies inside the bracket ideal, and conversely.
class TruncatedPowerLevels {
public:
    TruncatedPowerLevels(const std::vector<Poly>& gens, std::int64_t q, const VarMask& mask,
                         const RingPtr& ring, const Budgets& budgets)
        : q_(q), mask_(mask), budgets_(budgets) {
        for (const auto& f : gens) {
            Poly t = truncate_bracket(f, q, mask);
            if (!t.is_zero()) gens_.push_back(std::move(t));
        }
        level_.insert(Poly::constant(ring, 1));
    }

    std::int64_t level_index() const { return r_; }
    bool level_nonempty() const { return !level_.empty(); }

    /// Advance one level; returns whether the new level is nonempty.
    bool advance() {
        std::set<Poly> next;
        for (const auto& v : level_) {
            for (const auto& gp : gens_) {
                Poly w = truncate_bracket(v * gp, q_, mask_);
                if (!w.is_zero()) next.insert(w.monic(MonomialOrder::grevlex()));
                budgets_.check_generators(next.size());
            }
        }
        level_ = std::move(next);
        ++r_;
        return !level_.empty();
    }

private:
    std::int64_t q_;
    VarMask mask_;
    const Budgets& budgets_;
    std::vector<Poly> gens_;
    std::set<Poly> level_;
    std::int64_t r_ = 0;
};

/// max { r in [0, r_max] : I^r escapes the bracket ideal (v^q : v masked) }.
/// Escape levels form a prefix of 0..r_max because I^{r+1} is inside I^r.
inline std::int64_t max_escaping_power(const std::vector<Poly>& gens, const RingPtr& ring,
                                       std::int64_t q, const VarMask& mask, std::int64_t r_max,
                                       const Budgets& budgets) {
    TruncatedPowerLevels walk(gens, q, mask, ring, budgets);
    while (walk.level_index() < r_max && walk.advance()) {
    }
    return walk.level_nonempty() ? walk.level_index() : walk.level_index() - 1;
}

} // namespace charp
