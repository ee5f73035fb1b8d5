#pragma once

#include <algorithm>
#include <cstdint>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

#include "charp/monomial.hpp"
#include "charp/order.hpp"
#include "charp/ring.hpp"

namespace charp {

struct Term {
    Monomial mono;
    std::int64_t coeff; // canonical representative in [0, p)

    friend bool operator==(const Term& a, const Term& b) {
        return a.coeff == b.coeff && a.mono == b.mono;
    }
};

/// Variable subset of the ambient ring; empty means "all variables".
using VarMask = std::vector<char>;

/// Sparse multivariate polynomial over F_p. Terms are stored canonically:
/// descending grevlex, no zero coefficients, no duplicate monomials. Values
/// are immutable after construction.
class Poly {
public:
    Poly() = default;

    explicit Poly(RingPtr ring) : ring_(std::move(ring)) {}

    Poly(RingPtr ring, std::vector<Term> terms) : ring_(std::move(ring)) {
        normalize(std::move(terms));
    }

    static Poly zero(const RingPtr& ring) { return Poly(ring); }

    static Poly constant(const RingPtr& ring, std::int64_t c) {
        Poly f(ring);
        c = ring->field.reduce(c);
        if (c != 0) f.terms_.push_back({Monomial(ring->nvars()), c});
        return f;
    }

    static Poly variable(const RingPtr& ring, std::size_t i) {
        if (i >= ring->nvars()) throw std::invalid_argument("Poly::variable: index out of range");
        std::vector<Exp> e(ring->nvars(), 0);
        e[i] = 1;
        Poly f(ring);
        f.terms_.push_back({Monomial(std::move(e)), 1});
        return f;
    }

    static Poly term(const RingPtr& ring, Monomial m, std::int64_t c) {
        Poly f(ring);
        c = ring->field.reduce(c);
        if (c != 0) f.terms_.push_back({std::move(m), c});
        return f;
    }

    const RingPtr& ring() const { return ring_; }
    const std::vector<Term>& terms() const { return terms_; }
    std::size_t nterms() const { return terms_.size(); }
    bool is_zero() const { return terms_.empty(); }

    bool is_constant() const {
        return terms_.empty() || (terms_.size() == 1 && terms_[0].mono.is_one());
    }

    bool has_constant_term() const {
        return !terms_.empty() && terms_.back().mono.is_one();
    }

    Exp degree() const { // -1 for the zero polynomial
        Exp d = -1;
        for (const auto& t : terms_) d = std::max(d, t.mono.degree());
        return d;
    }

    Poly operator-() const {
        Poly r(ring_);
        r.terms_.reserve(terms_.size());
        for (const auto& t : terms_) r.terms_.push_back({t.mono, ring_->field.neg(t.coeff)});
        return r;
    }

    Poly operator+(const Poly& o) const {
        require_same_ring(ring_, o.ring_);
        Poly r(ring_);
        r.terms_.reserve(terms_.size() + o.terms_.size());
        // merge of two canonically sorted term lists
        MonomialOrder g = MonomialOrder::grevlex();
        std::size_t i = 0, j = 0;
        while (i < terms_.size() && j < o.terms_.size()) {
            int c = g.cmp(terms_[i].mono, o.terms_[j].mono);
            if (c > 0) {
                r.terms_.push_back(terms_[i++]);
            } else if (c < 0) {
                r.terms_.push_back(o.terms_[j++]);
            } else {
                std::int64_t s = ring_->field.add(terms_[i].coeff, o.terms_[j].coeff);
                if (s != 0) r.terms_.push_back({terms_[i].mono, s});
                ++i, ++j;
            }
        }
        for (; i < terms_.size(); ++i) r.terms_.push_back(terms_[i]);
        for (; j < o.terms_.size(); ++j) r.terms_.push_back(o.terms_[j]);
        return r;
    }

    Poly operator-(const Poly& o) const { return *this + (-o); }

    Poly operator*(const Poly& o) const {
        require_same_ring(ring_, o.ring_);
        if (is_zero() || o.is_zero()) return Poly(ring_);
        std::vector<Term> prod;
        prod.reserve(terms_.size() * o.terms_.size());
        for (const auto& a : terms_)
            for (const auto& b : o.terms_)
                prod.push_back({a.mono * b.mono, ring_->field.mul(a.coeff, b.coeff)});
        Poly r(ring_);
        r.normalize(std::move(prod));
        return r;
    }

    Poly scaled(std::int64_t c) const {
        c = ring_->field.reduce(c);
        Poly r(ring_);
        if (c == 0) return r;
        r.terms_.reserve(terms_.size());
        for (const auto& t : terms_) r.terms_.push_back({t.mono, ring_->field.mul(t.coeff, c)});
        return r;
    }

    Poly times_term(const Monomial& m, std::int64_t c) const {
        c = ring_->field.reduce(c);
        Poly r(ring_);
        if (c == 0) return r;
        r.terms_.reserve(terms_.size());
        for (const auto& t : terms_)
            r.terms_.push_back({t.mono * m, ring_->field.mul(t.coeff, c)});
        return r; // multiplying by a single term preserves the grevlex sort
    }

    Poly pow(std::int64_t n) const {
        if (n < 0) throw std::invalid_argument("Poly::pow: negative exponent");
        Poly acc = Poly::constant(ring_, 1);
        Poly base = *this;
        while (n > 0) {
            if (n & 1) acc = acc * base;
            n >>= 1;
            if (n > 0) base = base * base;
        }
        return acc;
    }

    /// f^(p^e). Termwise in characteristic p: exponents scale by q and
    /// coefficients are fixed by Fermat (c^q = c in F_p).
    Poly frobenius_pow(std::int64_t e) const {
        std::int64_t q = 1;
        for (std::int64_t i = 0; i < e; ++i) q *= ring_->p();
        Poly r(ring_);
        r.terms_.reserve(terms_.size());
        for (const auto& t : terms_) r.terms_.push_back({t.mono.pow(q), t.coeff});
        // distinct monomials stay distinct under mono -> mono^q and the
        // grevlex order is preserved, so the list is still canonical
        return r;
    }

    const Term& leading_term(const MonomialOrder& order) const {
        if (terms_.empty()) throw std::domain_error("leading_term of zero polynomial");
        if (order.kind == OrderKind::Grevlex) return terms_.front();
        std::size_t best = 0;
        for (std::size_t i = 1; i < terms_.size(); ++i)
            if (order.greater(terms_[i].mono, terms_[best].mono)) best = i;
        return terms_[best];
    }

    /// Scaled so the leading coefficient under `order` is 1.
    Poly monic(const MonomialOrder& order) const {
        if (terms_.empty()) return *this;
        std::int64_t lc = leading_term(order).coeff;
        if (lc == 1) return *this;
        return scaled(ring_->field.inv(lc));
    }

    friend bool operator==(const Poly& a, const Poly& b) {
        return same_ring(a.ring_, b.ring_) && a.terms_ == b.terms_;
    }
    friend bool operator!=(const Poly& a, const Poly& b) { return !(a == b); }

    /// Deterministic container order (term lists compared entrywise).
    friend bool operator<(const Poly& a, const Poly& b) {
        std::size_t n = std::min(a.terms_.size(), b.terms_.size());
        for (std::size_t i = 0; i < n; ++i) {
            if (a.terms_[i].mono != b.terms_[i].mono)
                return a.terms_[i].mono < b.terms_[i].mono;
            if (a.terms_[i].coeff != b.terms_[i].coeff)
                return a.terms_[i].coeff < b.terms_[i].coeff;
        }
        return a.terms_.size() < b.terms_.size();
    }

    std::string str() const {
        if (terms_.empty()) return "0";
        std::ostringstream out;
        bool first = true;
        for (const auto& t : terms_) {
            if (!first) out << " + ";
            first = false;
            print_term(out, t);
        }
        return out.str();
    }

private:
    void normalize(std::vector<Term> terms) {
        MonomialOrder g = MonomialOrder::grevlex();
        std::sort(terms.begin(), terms.end(), [&](const Term& a, const Term& b) {
            return g.greater(a.mono, b.mono);
        });
        terms_.clear();
        for (auto& t : terms) {
            std::int64_t c = ring_->field.reduce(t.coeff);
            if (c == 0) continue;
            if (!terms_.empty() && terms_.back().mono == t.mono) {
                std::int64_t s = ring_->field.add(terms_.back().coeff, c);
                if (s == 0)
                    terms_.pop_back();
                else
                    terms_.back().coeff = s;
            } else {
                terms_.push_back({std::move(t.mono), c});
            }
        }
    }

    void print_term(std::ostringstream& out, const Term& t) const {
        if (t.mono.is_one()) {
            out << t.coeff;
            return;
        }
        bool lead = true;
        if (t.coeff != 1) {
            out << t.coeff;
            lead = false;
        }
        for (std::size_t i = 0; i < t.mono.nvars(); ++i) {
            if (t.mono[i] == 0) continue;
            if (!lead) out << "*";
            lead = false;
            out << ring_->vars[i];
            if (t.mono[i] != 1) out << "^" << t.mono[i];
        }
    }

    RingPtr ring_;
    std::vector<Term> terms_;
};

/// True iff some masked variable's exponent in m is >= q, i.e. m lies in the
/// bracket power of the variable-generated ideal.
inline bool monomial_in_bracket_max(const Monomial& m, std::int64_t q, const VarMask& mask = {}) {
    for (std::size_t i = 0; i < m.nvars(); ++i) {
        if (!mask.empty() && !mask[i]) continue;
        if (m[i] >= q) return true;
    }
    return false;
}

/// Exact membership of f in (v^q : v masked variable): the target is a
/// monomial ideal, so the test is termwise.
inline bool poly_in_bracket_max(const Poly& f, std::int64_t q, const VarMask& mask = {}) {
    for (const auto& t : f.terms())
        if (!monomial_in_bracket_max(t.mono, q, mask)) return false;
    return true;
}

/// Image of f in R / (v^q : v masked variable): terms inside the bracket ideal
/// are dropped. Exponents only grow under multiplication, so products of
/// truncated polynomials decide bracket-ideal escape exactly.
inline Poly truncate_bracket(const Poly& f, std::int64_t q, const VarMask& mask = {}) {
    std::vector<Term> keep;
    keep.reserve(f.nterms());
    for (const auto& t : f.terms())
        if (!monomial_in_bracket_max(t.mono, q, mask)) keep.push_back(t);
    if (keep.size() == f.nterms()) return f;
    Poly r(f.ring());
    return Poly(f.ring(), std::move(keep));
}

/// Map a polynomial into an extension of its ring whose first nvars variables
/// coincide (new variables appended with zero exponent).
inline Poly extend_poly(const Poly& f, const RingPtr& bigger) {
    const RingPtr& small = f.ring();
    if (small->nvars() > bigger->nvars() || small->field != bigger->field)
        throw std::invalid_argument("extend_poly: not an extension");
    for (std::size_t i = 0; i < small->nvars(); ++i)
        if (small->vars[i] != bigger->vars[i])
            throw std::invalid_argument("extend_poly: variable mismatch");
    std::vector<Term> terms;
    terms.reserve(f.nterms());
    for (const auto& t : f.terms()) {
        std::vector<Exp> e = t.mono.exponents();
        e.resize(bigger->nvars(), 0);
        terms.push_back({Monomial(std::move(e)), t.coeff});
    }
    return Poly(bigger, std::move(terms));
}

} // namespace charp
