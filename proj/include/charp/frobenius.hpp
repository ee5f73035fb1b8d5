#pragma once

#include <cstdint>
#include <map>
#include <set>
#include <vector>

#include "charp/budget.hpp"
#include "charp/groebner.hpp"
#include "charp/ideal.hpp"
#include "charp/rational.hpp"

namespace charp {

/// Base-p expansion k = sum k_i p^i with 0 <= k_i <= p-1 and no trailing
/// zeros beyond the highest nonzero digit.
struct FrobeniusDigits {
    std::int64_t k = 0;
    std::int64_t p = 2;
    std::vector<std::int64_t> digits;

    static FrobeniusDigits of(std::int64_t k, std::int64_t p) {
        if (k < 0) throw input_error("FrobeniusDigits: negative exponent");
        if (p < 2) throw input_error("FrobeniusDigits: base must be >= 2");
        FrobeniusDigits d{k, p, {}};
        for (std::int64_t v = k; v > 0; v /= p) d.digits.push_back(v % p);
        return d;
    }

    std::int64_t reconstruct() const {
        std::int64_t acc = 0, pw = 1;
        for (std::int64_t d : digits) {
            acc += d * pw;
            pw *= p;
        }
        return acc;
    }
};

/// Bracket power I^[p^e], generated by the p^e-th powers of the generators.
/// Generator-wise generation is exact because Frobenius is a ring map in
/// characteristic p.
inline Ideal bracket_power(const Ideal& I, std::int64_t e) {
    q_power(I.ring()->p(), e); // level cap
    std::vector<Poly> gens;
    gens.reserve(I.gens().size());
    for (const auto& g : I.gens()) gens.push_back(g.frobenius_pow(e));
    return Ideal(I.ring(), std::move(gens));
}

/// Frobenius root I^[1/p^e]: the smallest ideal J with I inside J^[p^e].
/// Each generator decomposes uniquely as sum_mu mu * (g_mu)^q over monomials
/// mu with all exponents < q; the g_mu generate the root (coefficients ride
/// along unchanged since c^q = c in F_p).
inline Ideal frobenius_root(const Ideal& I, std::int64_t e) {
    const RingPtr& ring = I.ring();
    std::int64_t q = q_power(ring->p(), e);
    if (e == 0) return I;
    std::set<Poly> roots;
    for (const auto& f : I.gens()) {
        std::map<Monomial, std::vector<Term>> groups;
        for (const auto& t : f.terms()) {
            std::vector<Exp> res(t.mono.nvars()), quo(t.mono.nvars());
            for (std::size_t i = 0; i < t.mono.nvars(); ++i) {
                res[i] = t.mono[i] % q;
                quo[i] = t.mono[i] / q;
            }
            groups[Monomial(std::move(res))].push_back({Monomial(std::move(quo)), t.coeff});
        }
        for (auto& [res, terms] : groups)
            roots.insert(Poly(ring, std::move(terms)).monic(MonomialOrder::grevlex()));
    }
    std::vector<Poly> gens(roots.begin(), roots.end());
    return Ideal(ring, interreduce_generators(std::move(gens), ring));
}

namespace detail {

/// Multiply every element of `level` by r factors drawn from `gens` (all
/// multisets), keeping distinct values only. Exact arithmetic.
inline std::set<Poly> power_layer(std::set<Poly> level, const std::vector<Poly>& gens,
                                  std::int64_t r, const Budgets& budgets) {
    for (std::int64_t step = 0; step < r; ++step) {
        std::set<Poly> next;
        for (const auto& v : level)
            for (const auto& g : gens) {
                next.insert((v * g).monic(MonomialOrder::grevlex()));
                budgets.check_generators(next.size());
            }
        level = std::move(next);
        if (level.empty()) break;
    }
    return level;
}

/// Same as power_layer but reduced modulo the bracket ideal (v^q : v masked);
/// zero images are dropped. Suitable only for bracket-escape questions.
inline std::set<Poly> power_layer_truncated(std::set<Poly> level, const std::vector<Poly>& gens,
                                            std::int64_t r, std::int64_t q, const VarMask& mask,
                                            const Budgets& budgets) {
    for (std::int64_t step = 0; step < r; ++step) {
        std::set<Poly> next;
        for (const auto& v : level)
            for (const auto& g : gens) {
                Poly w = truncate_bracket(v * g, q, mask);
                if (!w.is_zero()) next.insert(w.monic(MonomialOrder::grevlex()));
                budgets.check_generators(next.size());
            }
        level = std::move(next);
        if (level.empty()) break;
    }
    return level;
}

} // namespace detail

/// Generalized Frobenius power I^[k]: the digit-wise product
/// I^{k_0} * (I^[p])^{k_1} * ... for the base-p expansion of k.
inline Ideal generalized_power(const Ideal& I, std::int64_t k,
                               const Budgets& budgets = default_budgets()) {
    if (k < 0) throw input_error("generalized_power: negative exponent");
    const RingPtr& ring = I.ring();
    if (k == 0) return Ideal::unit(ring);
    FrobeniusDigits d = FrobeniusDigits::of(k, ring->p());
    std::set<Poly> level{Poly::constant(ring, 1)};
    for (std::size_t i = 0; i < d.digits.size(); ++i) {
        if (d.digits[i] == 0) continue;
        std::vector<Poly> piece;
        piece.reserve(I.gens().size());
        for (const auto& g : I.gens()) piece.push_back(g.frobenius_pow(static_cast<std::int64_t>(i)));
        level = detail::power_layer(std::move(level), piece, d.digits[i], budgets);
        if (level.empty()) break; // zero ideal input
    }
    std::vector<Poly> gens(level.begin(), level.end());
    return Ideal(ring, interreduce_generators(std::move(gens), ring));
}

/// Rational Frobenius power I^[k/p^e] = (I^[k])^[1/p^e].
inline Ideal rational_power(const Ideal& I, std::int64_t k, std::int64_t e,
                            const Budgets& budgets = default_budgets()) {
    return frobenius_root(generalized_power(I, k, budgets), e);
}

struct RealPowerRequest {
    Rat t{0};             // exponent, >= 0
    std::int64_t k_max = 8; // stabilization search bound
    std::int64_t s = 2;     // required consecutive agreements

    void validate() const {
        if (t < Rat(0)) throw input_error("real power exponent must be >= 0");
        if (k_max < 1 || s < 1) throw input_error("real power: k_max and s must be >= 1");
    }
};

struct RealPowerResult {
    Ideal value;
    bool certified = false;
    std::int64_t stabilized_at = 0; // first level of the agreeing run when certified
};

/// Real Frobenius power I^[t] via the approximating sequence
/// t_k = ceil(t p^k)/p^k: the first value repeated for s consecutive levels
/// is returned as certified; otherwise the last computed value, uncertified.
inline RealPowerResult real_power(const Ideal& I, const RealPowerRequest& req,
                                  const Budgets& budgets = default_budgets()) {
    req.validate();
    std::int64_t p = I.ring()->p();
    std::int64_t k_max = req.k_max;
    while (k_max > 1) { // clamp to the level cap
        bool ok = true;
        std::int64_t q = 1;
        for (std::int64_t i = 0; i < k_max; ++i) {
            q *= p;
            if (q > kMaxQ) {
                ok = false;
                break;
            }
        }
        if (ok) break;
        --k_max;
    }
    RealPowerResult out{Ideal(I.ring()), false, 0};
    std::int64_t run = 0;
    std::int64_t q = 1;
    for (std::int64_t k = 1; k <= k_max; ++k) {
        q *= p;
        Ideal a = rational_power(I, ceil_scaled(req.t, q), k, budgets);
        if (k > 1 && ideal_equal(a, out.value, budgets)) {
            ++run;
        } else {
            run = 1;
            out.stabilized_at = k;
        }
        out.value = std::move(a);
        if (run >= req.s) {
            out.certified = true;
            return out;
        }
    }
    out.certified = false;
    return out;
}

/// Does I^[k] escape the bracket ideal (v^q : v masked)? Exact: digit pieces
/// are expanded with truncation, which preserves escape.
inline bool generalized_power_escapes(const Ideal& I, std::int64_t k, std::int64_t q,
                                      const VarMask& mask,
                                      const Budgets& budgets = default_budgets()) {
    if (k < 0) throw input_error("generalized_power_escapes: negative exponent");
    const RingPtr& ring = I.ring();
    std::set<Poly> level{Poly::constant(ring, 1)};
    if (k > 0) {
        FrobeniusDigits d = FrobeniusDigits::of(k, ring->p());
        for (std::size_t i = 0; i < d.digits.size(); ++i) {
            if (d.digits[i] == 0) continue;
            std::vector<Poly> piece;
            for (const auto& g : I.gens()) {
                Poly b = truncate_bracket(g.frobenius_pow(static_cast<std::int64_t>(i)), q, mask);
                if (!b.is_zero()) piece.push_back(std::move(b));
            }
            if (piece.empty()) return false;
            level = detail::power_layer_truncated(std::move(level), piece, d.digits[i], q, mask,
                                                  budgets);
            if (level.empty()) return false;
        }
    }
    return !level.empty();
}

struct NuValue {
    std::int64_t nu = 0;
    bool capped = false; // set when the ideal is not inside the maximal ideal
};

enum class NuSearch {
    FullScan, // downward scan from q-1; exact without monotonicity assumptions
    Fast      // binary search; heuristic unless monotonicity holds on the instance
};

/// nu_bracket: max { k in [0, q-1] : I^[k] escapes m^[q] } at a
/// variable-generated maximal ideal m. Monotonicity of containment in k is
/// not assumed, so the default is a full downward scan (the scan's first
/// escape from the top is the maximum regardless).
inline NuValue nu_bracket(const Ideal& I, std::int64_t e, const Ideal& m,
                          const Budgets& budgets = default_budgets(),
                          NuSearch mode = NuSearch::FullScan) {
    require_same_ring(I.ring(), m.ring());
    std::int64_t q = q_power(I.ring()->p(), e);
    VarMask mask = mask_from_maximal_ideal(m);
    if (!contained_in_locus(I, mask)) return {q - 1, true};
    if (mode == NuSearch::FullScan) {
        for (std::int64_t k = q - 1; k >= 0; --k)
            if (generalized_power_escapes(I, k, q, mask, budgets)) return {k, false};
        return {0, false}; // unreachable: k = 0 always escapes
    }
    // fast mode: assumes escape is downward closed in k
    if (generalized_power_escapes(I, q - 1, q, mask, budgets)) return {q - 1, false};
    std::int64_t lo = 0, hi = q - 1; // escapes(lo), !escapes(hi)
    while (hi - lo > 1) {
        std::int64_t mid = lo + (hi - lo) / 2;
        (generalized_power_escapes(I, mid, q, mask, budgets) ? lo : hi) = mid;
    }
    return {lo, false};
}

struct BracketMonotonicity {
    bool monotone = false; // escape set is exactly a prefix 0..nu
    NuValue nu;
};

/// Evaluates the escape predicate at every k in [0, q-1]; reports the true
/// maximum and whether containment was monotone in k on this instance.
inline BracketMonotonicity check_bracket_monotone(const Ideal& I, std::int64_t e, const Ideal& m,
                                                  const Budgets& budgets = default_budgets()) {
    require_same_ring(I.ring(), m.ring());
    std::int64_t q = q_power(I.ring()->p(), e);
    VarMask mask = mask_from_maximal_ideal(m);
    if (!contained_in_locus(I, mask)) return {false, {q - 1, true}};
    std::int64_t max_escape = 0, min_contained = q;
    for (std::int64_t k = 0; k <= q - 1; ++k) {
        if (generalized_power_escapes(I, k, q, mask, budgets))
            max_escape = k;
        else
            min_contained = std::min(min_contained, k);
    }
    bool monotone = min_contained > max_escape;
    return {monotone, {max_escape, false}};
}

} // namespace charp
