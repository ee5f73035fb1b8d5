#pragma once

// Independent oracles used by the unit and acceptance suites. Everything here
// recomputes results from definitions by exhaustive expansion: no truncation,
// no deduplication, no search-order tricks, so these paths share nothing with
// the implementation they check beyond basic polynomial arithmetic.

#include <cstdint>
#include <functional>
#include <optional>
#include <utility>
#include <vector>

#include "charp/charp.hpp"

namespace oracles {

using namespace charp;

/// All products of exactly r generators, fully expanded (duplicates kept).
inline std::vector<Poly> naive_power_products(const std::vector<Poly>& gens, const RingPtr& ring,
                                              std::int64_t r) {
    std::vector<Poly> out{Poly::constant(ring, 1)};
    for (std::int64_t step = 0; step < r; ++step) {
        std::vector<Poly> next;
        for (const auto& v : out)
            for (const auto& g : gens) next.push_back(v * g);
        out = std::move(next);
    }
    return out;
}

/// Generators of I^[k] by direct digit expansion of the definition.
inline std::vector<Poly> naive_generalized_power_gens(const Ideal& I, std::int64_t k) {
    const RingPtr& ring = I.ring();
    std::int64_t p = ring->p();
    std::vector<Poly> out{Poly::constant(ring, 1)};
    std::int64_t v = k;
    for (std::int64_t i = 0; v > 0; ++i, v /= p) {
        std::int64_t digit = v % p;
        if (digit == 0) continue;
        std::vector<Poly> bracket;
        for (const auto& g : I.gens()) bracket.push_back(g.frobenius_pow(i));
        std::vector<Poly> next;
        for (const auto& piece : naive_power_products(bracket, ring, digit))
            for (const auto& w : out) next.push_back(w * piece);
        out = std::move(next);
    }
    return out;
}

inline bool naive_bracket_contained(const std::vector<Poly>& gens, std::int64_t q) {
    for (const auto& g : gens)
        if (!poly_in_bracket_max(g, q)) return false;
    return true;
}

/// nu_bracket by downward scan over fully expanded generalized powers.
inline std::int64_t naive_nu_bracket(const Ideal& I, std::int64_t e) {
    std::int64_t q = 1;
    for (std::int64_t i = 0; i < e; ++i) q *= I.ring()->p();
    for (std::int64_t k = q - 1; k >= 0; --k)
        if (!naive_bracket_contained(naive_generalized_power_gens(I, k), q)) return k;
    return 0;
}

/// nu_power by upward linear scan over fully expanded ordinary powers.
inline std::int64_t naive_nu_power(const Ideal& I, std::int64_t e) {
    std::int64_t q = 1;
    for (std::int64_t i = 0; i < e; ++i) q *= I.ring()->p();
    std::int64_t bound =
        static_cast<std::int64_t>(I.ring()->nvars()) * (q - 1) + 1;
    std::int64_t nu = 0;
    for (std::int64_t r = 1; r <= bound; ++r) {
        if (naive_bracket_contained(naive_power_products(I.gens(), I.ring(), r), q)) break;
        nu = r;
    }
    return nu;
}

/// Monomial ideal in two variables as an exponent-pair list.
using Staircase = std::vector<std::pair<Exp, Exp>>;

/// Every antichain (strictly increasing a, strictly decreasing b) with
/// a + b <= max_deg, the minimal generator sets of the nonzero monomial
/// ideals generated in degree <= max_deg.
inline void for_each_monomial_ideal(Exp max_deg, const std::function<void(const Staircase&)>& fn) {
    Staircase cur;
    std::function<void(Exp, Exp)> rec = [&](Exp a_min, Exp b_cap) {
        for (Exp a = a_min; a <= max_deg; ++a) {
            for (Exp b = std::min(b_cap - 1, max_deg - a); b >= 0; --b) {
                cur.push_back({a, b});
                fn(cur);
                rec(a + 1, b);
                cur.pop_back();
            }
        }
    };
    rec(0, max_deg + 1);
}

/// Antichains inside the coordinate box [0, amax] x [0, bmax].
inline void for_each_box_antichain(Exp amax, Exp bmax,
                                   const std::function<void(const Staircase&)>& fn) {
    Staircase cur;
    std::function<void(Exp, Exp)> rec = [&](Exp a_min, Exp b_cap) {
        for (Exp a = a_min; a <= amax; ++a) {
            for (Exp b = std::min(b_cap - 1, bmax); b >= 0; --b) {
                cur.push_back({a, b});
                fn(cur);
                rec(a + 1, b);
                cur.pop_back();
            }
        }
    };
    rec(0, bmax + 1);
}

inline bool staircase_divides(const Staircase& J, Exp a, Exp b) {
    for (const auto& [c, d] : J)
        if (c <= a && d <= b) return true;
    return false;
}

/// J1 contained in J2 as monomial ideals.
inline bool staircase_contained(const Staircase& J1, const Staircase& J2) {
    for (const auto& [a, b] : J1)
        if (!staircase_divides(J2, a, b)) return false;
    return true;
}

/// Brute-force minimal J with I inside J^[q] for a two-variable monomial
/// ideal: enumerate every candidate staircase in the bounding box, keep the
/// valid ones, and take the unique containment-minimum.
inline std::optional<Staircase> brute_min_root(const Staircase& I, std::int64_t q, Exp max_deg) {
    Exp box = max_deg / q;
    std::optional<Staircase> best;
    bool unique = true;
    for_each_box_antichain(box, box, [&](const Staircase& J) {
        for (const auto& [a, b] : I)
            if (!staircase_divides(J, a / q, b / q)) return; // I not inside J^[q]
        if (!best) {
            best = J;
        } else if (staircase_contained(J, *best)) {
            best = J;
        }
    });
    if (!best) return std::nullopt;
    // confirm it is the minimum, not merely minimal
    for_each_box_antichain(box, box, [&](const Staircase& J) {
        for (const auto& [a, b] : I)
            if (!staircase_divides(J, a / q, b / q)) return;
        if (!staircase_contained(*best, J)) unique = false;
    });
    if (!unique) return std::nullopt;
    return best;
}

inline Ideal staircase_ideal(const RingPtr& ring, const Staircase& s) {
    std::vector<Poly> gens;
    for (const auto& [a, b] : s) gens.push_back(Poly::term(ring, Monomial({a, b}), 1));
    return Ideal(ring, gens);
}

/// Exponent pairs of a two-variable monomial ideal's generators.
inline std::optional<Staircase> staircase_of(const Ideal& I) {
    Staircase out;
    for (const auto& g : I.gens()) {
        if (g.nterms() != 1) return std::nullopt;
        out.push_back({g.terms()[0].mono[0], g.terms()[0].mono[1]});
    }
    return out;
}

/// Equality of two-variable monomial ideals via mutual divisibility.
inline bool staircase_equal(const Staircase& a, const Staircase& b) {
    return staircase_contained(a, b) && staircase_contained(b, a);
}

} // namespace oracles
