#pragma once

#include <algorithm>
#include <memory>
#include <set>
#include <vector>

#include "charp/budget.hpp"
#include "charp/ideal.hpp"
#include "charp/order.hpp"
#include "charp/poly.hpp"

namespace charp {

/// Reduced Groebner basis: monic, interreduced, leading terms pairwise
/// non-divisible, sorted by leading monomial descending. Unique for a given
/// ideal and order, so equality of bases is equality of ideals.
struct GroebnerBasis {
    RingPtr ring;
    MonomialOrder order;
    std::vector<Poly> basis;
};

/// Full normal form: no term of the result is divisible by any basis leading
/// monomial. normal_form(f, G) == 0 iff f lies in the ideal of G.
inline Poly normal_form(const Poly& f, const GroebnerBasis& G);

namespace detail {

class Reducer {
public:
    Reducer(RingPtr ring, MonomialOrder order) : ring_(std::move(ring)), order_(order) {}

    void push(Poly g) { // g monic under order_
        lts_.push_back(g.leading_term(order_).mono);
        polys_.push_back(std::move(g));
    }

    std::size_t size() const { return polys_.size(); }
    const Poly& poly(std::size_t i) const { return polys_[i]; }
    const Monomial& lt(std::size_t i) const { return lts_[i]; }
    const MonomialOrder& order() const { return order_; }

    /// Full reduction of f, skipping basis element `skip` (for interreduction).
    Poly reduce(Poly f, std::size_t skip = static_cast<std::size_t>(-1)) const {
        Poly rem(ring_);
        while (!f.is_zero()) {
            const Term lt = f.leading_term(order_);
            bool hit = false;
            for (std::size_t i = 0; i < polys_.size(); ++i) {
                if (i == skip) continue;
                if (lts_[i].divides(lt.mono)) {
                    f = f - polys_[i].times_term(lts_[i].divide_into(lt.mono), lt.coeff);
                    hit = true;
                    break;
                }
            }
            if (!hit) {
                Poly t = Poly::term(ring_, lt.mono, lt.coeff);
                rem = rem + t;
                f = f - t;
            }
        }
        return rem;
    }

private:
    RingPtr ring_;
    MonomialOrder order_;
    std::vector<Poly> polys_;
    std::vector<Monomial> lts_;
};

inline Poly prepend_var(const Poly& f, const RingPtr& bigger) {
    std::vector<Term> terms;
    terms.reserve(f.nterms());
    for (const auto& t : f.terms()) {
        std::vector<Exp> e;
        e.reserve(t.mono.nvars() + 1);
        e.push_back(0);
        for (std::size_t i = 0; i < t.mono.nvars(); ++i) e.push_back(t.mono[i]);
        terms.push_back({Monomial(std::move(e)), t.coeff});
    }
    return Poly(bigger, std::move(terms));
}

inline Poly drop_first_var(const Poly& f, const RingPtr& smaller) {
    std::vector<Term> terms;
    terms.reserve(f.nterms());
    for (const auto& t : f.terms()) {
        if (t.mono[0] != 0) throw std::logic_error("drop_first_var: tag variable survives");
        std::vector<Exp> e(t.mono.exponents().begin() + 1, t.mono.exponents().end());
        terms.push_back({Monomial(std::move(e)), t.coeff});
    }
    return Poly(smaller, std::move(terms));
}

} // namespace detail

/// S-polynomial of two monic polynomials.
inline Poly spoly(const Poly& f, const Poly& g, const MonomialOrder& order) {
    const Term& fl = f.leading_term(order);
    const Term& gl = g.leading_term(order);
    Monomial l = fl.mono.lcm(gl.mono);
    const auto& field = f.ring()->field;
    Poly a = f.times_term(fl.mono.divide_into(l), field.inv(fl.coeff));
    Poly b = g.times_term(gl.mono.divide_into(l), field.inv(gl.coeff));
    return a - b;
}

/// Buchberger with the normal pair-selection strategy (minimal lcm degree
/// first, ties by the monomial order then indices) and the coprime
/// leading-term criterion. Returns the reduced basis.
inline GroebnerBasis buchberger(const RingPtr& ring, const std::vector<Poly>& gens,
                                MonomialOrder order, const Budgets& budgets = default_budgets()) {
    detail::Reducer red(ring, order);
    for (const auto& f : gens) {
        if (f.is_zero()) continue;
        red.push(f.monic(order));
    }

    struct PairEntry {
        Exp deg;
        Monomial lcm;
        std::size_t i, j;
    };
    auto cmp = [order](const PairEntry& a, const PairEntry& b) {
        if (a.deg != b.deg) return a.deg < b.deg;
        int c = order.cmp(a.lcm, b.lcm);
        if (c != 0) return c < 0;
        if (a.i != b.i) return a.i < b.i;
        return a.j < b.j;
    };
    std::set<PairEntry, decltype(cmp)> queue(cmp);

    auto add_pairs = [&](std::size_t j) {
        for (std::size_t i = 0; i < j; ++i) {
            Monomial l = red.lt(i).lcm(red.lt(j));
            queue.insert({l.degree(), std::move(l), i, j});
        }
    };
    for (std::size_t j = 1; j < red.size(); ++j) add_pairs(j);

    while (!queue.empty()) {
        PairEntry pr = *queue.begin();
        queue.erase(queue.begin());
        if (red.lt(pr.i).coprime(red.lt(pr.j))) continue; // S-poly reduces to 0
        budgets.check_degree(pr.deg);
        Poly s = spoly(red.poly(pr.i), red.poly(pr.j), order);
        Poly r = red.reduce(std::move(s));
        if (r.is_zero()) continue;
        budgets.check_degree(r.degree());
        red.push(r.monic(order));
        budgets.check_basis(red.size());
        add_pairs(red.size() - 1);
    }

    // minimal generators of the leading-term ideal
    std::vector<char> removed(red.size(), 0);
    for (std::size_t i = 0; i < red.size(); ++i) {
        for (std::size_t j = 0; j < red.size(); ++j) {
            if (i == j || removed[j]) continue;
            if (red.lt(j).divides(red.lt(i)) && (red.lt(j) != red.lt(i) || j < i)) {
                removed[i] = 1;
                break;
            }
        }
    }
    std::vector<Poly> kept;
    std::vector<Monomial> kept_lts;
    for (std::size_t i = 0; i < red.size(); ++i) {
        if (!removed[i]) {
            kept.push_back(red.poly(i));
            kept_lts.push_back(red.lt(i));
        }
    }
    // tail reduction against the other kept elements
    detail::Reducer fin(ring, order);
    for (auto& g : kept) fin.push(std::move(g));
    std::vector<Poly> reduced;
    for (std::size_t i = 0; i < fin.size(); ++i)
        reduced.push_back(fin.reduce(fin.poly(i), i).monic(order));
    std::sort(reduced.begin(), reduced.end(), [&](const Poly& a, const Poly& b) {
        return order.greater(a.leading_term(order).mono, b.leading_term(order).mono);
    });
    return GroebnerBasis{ring, order, std::move(reduced)};
}

/// Groebner basis of an ideal; the grevlex basis is computed once per ideal
/// and cached (single-writer, concurrent readers safe).
inline std::shared_ptr<const GroebnerBasis> groebner(const Ideal& I,
                                                     MonomialOrder order = MonomialOrder::grevlex(),
                                                     const Budgets& budgets = default_budgets()) {
    if (order == MonomialOrder::grevlex()) {
        auto& cache = I.gb_cache();
        std::lock_guard<std::mutex> lock(cache.mu);
        if (!cache.grevlex)
            cache.grevlex = std::make_shared<const GroebnerBasis>(
                buchberger(I.ring(), I.gens(), order, budgets));
        return cache.grevlex;
    }
    return std::make_shared<const GroebnerBasis>(buchberger(I.ring(), I.gens(), order, budgets));
}

inline Poly normal_form(const Poly& f, const GroebnerBasis& G) {
    detail::Reducer red(G.ring, G.order);
    for (const auto& g : G.basis) red.push(g);
    return red.reduce(f);
}

inline bool ideal_member(const Poly& f, const Ideal& I,
                         const Budgets& budgets = default_budgets()) {
    require_same_ring(f.ring(), I.ring());
    if (f.is_zero()) return true;
    return normal_form(f, *groebner(I, MonomialOrder::grevlex(), budgets)).is_zero();
}

inline bool ideal_contains(const Ideal& I, const Ideal& J,
                           const Budgets& budgets = default_budgets()) {
    require_same_ring(I.ring(), J.ring());
    for (const auto& g : J.gens())
        if (!ideal_member(g, I, budgets)) return false;
    return true;
}

/// Equality via uniqueness of the reduced grevlex basis.
inline bool ideal_equal(const Ideal& I, const Ideal& J,
                        const Budgets& budgets = default_budgets()) {
    require_same_ring(I.ring(), J.ring());
    auto a = groebner(I, MonomialOrder::grevlex(), budgets);
    auto b = groebner(J, MonomialOrder::grevlex(), budgets);
    return a->basis == b->basis;
}

/// I cap J by tag-variable elimination: eliminate t from t*I + (1-t)*J.
inline Ideal ideal_intersect(const Ideal& I, const Ideal& J,
                             const Budgets& budgets = default_budgets()) {
    require_same_ring(I.ring(), J.ring());
    if (I.is_zero_ideal() || J.is_zero_ideal()) return Ideal(I.ring());
    auto [tring, tname] = prepend_tag_ring(I.ring());
    Poly tag = Poly::variable(tring, 0);
    Poly one_minus_tag = Poly::constant(tring, 1) - tag;
    std::vector<Poly> gens;
    for (const auto& g : I.gens()) gens.push_back(tag * detail::prepend_var(g, tring));
    for (const auto& h : J.gens()) gens.push_back(one_minus_tag * detail::prepend_var(h, tring));
    GroebnerBasis G = buchberger(tring, gens, MonomialOrder::elimination(1), budgets);
    std::vector<Poly> out;
    for (const auto& g : G.basis) {
        if (g.leading_term(G.order).mono[0] == 0)
            out.push_back(detail::drop_first_var(g, I.ring()));
    }
    return Ideal(I.ring(), interreduce_generators(std::move(out), I.ring()));
}

/// Exact quotient h / f; h must be a multiple of f.
inline Poly poly_divexact(const Poly& h, const Poly& f) {
    require_same_ring(h.ring(), f.ring());
    if (f.is_zero()) throw std::domain_error("poly_divexact: division by zero");
    MonomialOrder order = MonomialOrder::grevlex();
    const Term& fl = f.leading_term(order);
    const auto& field = f.ring()->field;
    Poly quot(h.ring());
    Poly rem = h;
    while (!rem.is_zero()) {
        const Term& lt = rem.leading_term(order);
        if (!fl.mono.divides(lt.mono))
            throw std::domain_error("poly_divexact: inexact division");
        Poly qt = Poly::term(h.ring(), fl.mono.divide_into(lt.mono),
                             field.mul(lt.coeff, field.inv(fl.coeff)));
        quot = quot + qt;
        rem = rem - qt * f;
    }
    return quot;
}

/// Colon ideal (I : J) as the intersection of the principal colons
/// (I : f) = (I cap (f)) / f over the generators f of J.
inline Ideal ideal_colon(const Ideal& I, const Ideal& J,
                         const Budgets& budgets = default_budgets()) {
    require_same_ring(I.ring(), J.ring());
    if (J.is_zero_ideal()) return Ideal::unit(I.ring());
    bool first = true;
    Ideal result(I.ring());
    for (const auto& f : J.gens()) {
        Ideal meet = ideal_intersect(I, Ideal(I.ring(), {f}), budgets);
        std::vector<Poly> quots;
        for (const auto& h : meet.gens()) quots.push_back(poly_divexact(h, f));
        Ideal part(I.ring(), interreduce_generators(std::move(quots), I.ring()));
        result = first ? part : ideal_intersect(result, part, budgets);
        first = false;
    }
    return result;
}

/// Krull dimension of R/I: the largest number of variables independent modulo
/// the leading-term ideal. -1 for the unit ideal, nvars for the zero ideal.
inline std::int64_t ideal_dimension(const Ideal& I, const Budgets& budgets = default_budgets()) {
    auto G = groebner(I, MonomialOrder::grevlex(), budgets);
    std::size_t n = I.ring()->nvars();
    if (G->basis.empty()) return static_cast<std::int64_t>(n);
    if (G->basis.size() == 1 && G->basis[0].is_constant()) return -1;
    if (n > 24) throw resource_error("ideal_dimension: too many variables for subset scan");
    std::vector<std::uint32_t> supports;
    supports.reserve(G->basis.size());
    for (const auto& g : G->basis) {
        const Monomial& lt = g.leading_term(G->order).mono;
        std::uint32_t s = 0;
        for (std::size_t i = 0; i < n; ++i)
            if (lt[i] > 0) s |= (std::uint32_t{1} << i);
        supports.push_back(s);
    }
    std::int64_t best = 0;
    for (std::uint32_t u = 0; u < (std::uint32_t{1} << n); ++u) {
        bool independent = true;
        for (std::uint32_t s : supports) {
            if ((s & ~u) == 0) { // leading monomial lives entirely inside u
                independent = false;
                break;
            }
        }
        if (independent) best = std::max<std::int64_t>(best, __builtin_popcount(u));
    }
    return best;
}

/// Height as nvars - dim(R/I); exact for equidimensional ideals of a
/// polynomial ring (the unmixedness of the input is an assumption, not
/// verified here).
inline std::int64_t ideal_height(const Ideal& I, const Budgets& budgets = default_budgets()) {
    if (I.is_zero_ideal()) throw input_error("ideal_height: zero ideal");
    std::int64_t dim = ideal_dimension(I, budgets);
    if (dim < 0) throw input_error("ideal_height: improper (unit) ideal");
    return static_cast<std::int64_t>(I.ring()->nvars()) - dim;
}

} // namespace charp
