#pragma once

#include <cstdint>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include "charp/frobenius.hpp"
#include "charp/groebner.hpp"
#include "charp/ideal.hpp"
#include "charp/rational.hpp"

namespace charp {

/// nu_power: max { r >= 0 : I^r escapes m^[q] }. Containment is monotone in r
/// (I^{r+1} lies inside I^r), escape levels are found by an incremental,
/// deduplicated product walk, and escape is impossible past nvars*(q-1), so
/// the walk terminates.
inline NuValue nu_power(const Ideal& I, std::int64_t e, const Ideal& m,
                        const Budgets& budgets = default_budgets()) {
    require_same_ring(I.ring(), m.ring());
    std::int64_t q = q_power(I.ring()->p(), e);
    VarMask mask = mask_from_maximal_ideal(m);
    if (!contained_in_locus(I, mask)) return {q - 1, true};
    std::int64_t nmask = 0;
    for (char c : mask) nmask += c ? 1 : 0;
    std::int64_t r_max = nmask * (q - 1) + 1;
    std::int64_t nu = max_escaping_power(I.gens(), I.ring(), q, mask, r_max, budgets);
    return {nu, false};
}

struct ThresholdRow {
    std::int64_t e = 0, q = 0, nu = 0;
    Rat lower{0}, upper{0};
    bool certified = false;
    bool capped = false;

    friend bool operator==(const ThresholdRow& a, const ThresholdRow& b) {
        return a.e == b.e && a.q == b.q && a.nu == b.nu && a.lower == b.lower &&
               a.upper == b.upper;
    }
};

/// Per-level nu-invariant records; lower = nu/q and upper = (nu+1)/q bound the
/// threshold from below/above at each level (upper is heuristic for lce rows
/// unless the instance passed the monotonicity sweep; see `certified`).
struct ThresholdTable {
    std::string ideal_id;
    std::string kind; // "fpt" or "lce"
    std::int64_t p = 0;
    std::vector<ThresholdRow> rows;
};

inline std::string csv_escape_id(std::string s) {
    for (auto& c : s)
        if (c == ',' || c == '\n' || c == '\r') c = '_';
    return s;
}

inline std::string threshold_csv(const ThresholdTable& t, bool header = true) {
    std::ostringstream out;
    if (header) out << "ideal_id,kind,p,e,q,nu,lower,upper,certified\n";
    for (const auto& r : t.rows) {
        out << csv_escape_id(t.ideal_id) << ',' << t.kind << ',' << t.p << ',' << r.e << ','
            << r.q << ',' << r.nu << ',' << rat_str(r.lower) << ',' << rat_str(r.upper) << ','
            << (r.certified ? "true" : "false") << '\n';
    }
    return out.str();
}

/// F-pure threshold estimate: nu_power rows for e = 1..e_max. At every level
/// nu/q <= fpt <= (nu+1)/q. Rows are flagged uncertified only when the ideal
/// escapes the chosen maximal ideal entirely.
inline ThresholdTable fpt_estimate(const Ideal& I, const Ideal& m, std::int64_t e_max,
                                   const Budgets& budgets = default_budgets(),
                                   const std::string& ideal_id = "") {
    if (e_max < 1) throw input_error("fpt_estimate: e_max must be >= 1");
    ThresholdTable t{ideal_id, "fpt", I.ring()->p(), {}};
    for (std::int64_t e = 1; e <= e_max; ++e) {
        std::int64_t q = q_power(t.p, e);
        NuValue nu = nu_power(I, e, m, budgets);
        t.rows.push_back({e, q, nu.nu, Rat(nu.nu, q), Rat(nu.nu + 1, q), !nu.capped, nu.capped});
    }
    return t;
}

/// Least-critical-exponent estimate: nu_bracket rows for e = 1..e_max.
/// Lower bounds are rigorous; the upper bound (nu+1)/q is certified only when
/// the per-instance sweep verified that containment of I^[k] in m^[q] is
/// monotone in k (the default).
inline ThresholdTable lce_estimate(const Ideal& I, const Ideal& m, std::int64_t e_max,
                                   const Budgets& budgets = default_budgets(),
                                   const std::string& ideal_id = "",
                                   bool verify_monotone = true) {
    if (e_max < 1) throw input_error("lce_estimate: e_max must be >= 1");
    ThresholdTable t{ideal_id, "lce", I.ring()->p(), {}};
    for (std::int64_t e = 1; e <= e_max; ++e) {
        std::int64_t q = q_power(t.p, e);
        if (verify_monotone) {
            BracketMonotonicity bm = check_bracket_monotone(I, e, m, budgets);
            t.rows.push_back({e, q, bm.nu.nu, Rat(bm.nu.nu, q), Rat(bm.nu.nu + 1, q),
                              bm.monotone && !bm.nu.capped, bm.nu.capped});
        } else {
            NuValue nu = nu_bracket(I, e, m, budgets);
            t.rows.push_back({e, q, nu.nu, Rat(nu.nu, q), Rat(nu.nu + 1, q), false, nu.capped});
        }
    }
    return t;
}

namespace detail {

/// Root generators of the ordinary power I^k at level e, streamed product by
/// product so the power is never materialized.
inline Ideal frobenius_root_of_power(const Ideal& I, std::int64_t k, std::int64_t e,
                                     const Budgets& budgets) {
    const RingPtr& ring = I.ring();
    std::int64_t q = q_power(ring->p(), e);
    if (k == 0) return Ideal::unit(ring);
    std::set<Poly> roots;
    for_each_power_product(I.gens(), k, ring, budgets, [&](const Poly& f) {
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
    });
    std::vector<Poly> gens(roots.begin(), roots.end());
    return Ideal(ring, interreduce_generators(std::move(gens), ring));
}

} // namespace detail

struct TestIdealResult {
    Rat t{0};
    Ideal ideal;
    std::int64_t stabilized_at_e = 0;
    bool certified = false;
};

/// Test ideal tau(I^t) = (I^{ceil(t p^e)})^[1/p^e] for e large enough.
/// Computes the levels for e = 1..e_max and returns the first value that
/// repeats at the next level (certified); otherwise the last value.
inline TestIdealResult test_ideal(const Ideal& I, const Rat& t, std::int64_t e_max,
                                  const Budgets& budgets = default_budgets()) {
    if (t < Rat(0)) throw input_error("test_ideal: exponent must be >= 0");
    if (e_max < 1) throw input_error("test_ideal: e_max must be >= 1");
    TestIdealResult out{t, Ideal(I.ring()), 0, false};
    for (std::int64_t e = 1; e <= e_max; ++e) {
        std::int64_t q = q_power(I.ring()->p(), e);
        Ideal a = detail::frobenius_root_of_power(I, ceil_scaled(t, q), e, budgets);
        if (e > 1 && ideal_equal(a, out.ideal, budgets)) {
            out.certified = true;
            out.stabilized_at_e = e - 1;
            return out;
        }
        out.ideal = std::move(a);
        out.stabilized_at_e = e;
    }
    out.certified = false;
    return out;
}

struct CertifiedBool {
    bool value = false;
    bool certified = false;
};

/// (R, I^t) strongly F-regular iff tau(I^t) = R; the certification of the
/// test-ideal stabilization is inherited.
inline CertifiedBool is_strongly_f_regular(const Ideal& I, const Rat& t, std::int64_t e_max = 6,
                                           const Budgets& budgets = default_budgets()) {
    TestIdealResult tau = test_ideal(I, t, e_max, budgets);
    bool unit = !tau.ideal.is_zero_ideal() &&
                ideal_equal(tau.ideal, Ideal::unit(I.ring()), budgets);
    return {unit, tau.certified};
}

/// Level-e F-purity of (R, I^t) at m via the regular-ring splitting
/// criterion: some element of I^{floor(t(q-1))} escapes m^[q]. The strong
/// variant uses the exponent ceil(tq) instead.
inline bool is_f_pure_level(const Ideal& I, const Rat& t, std::int64_t e, const Ideal& m,
                            const Budgets& budgets = default_budgets(),
                            bool strong_variant = false) {
    require_same_ring(I.ring(), m.ring());
    if (t < Rat(0)) throw input_error("is_f_pure_level: exponent must be >= 0");
    std::int64_t q = q_power(I.ring()->p(), e);
    std::int64_t a = strong_variant ? ceil_scaled(t, q) : floor_scaled(t, q - 1);
    VarMask mask = mask_from_maximal_ideal(m);
    if (a == 0) return true; // 1 splits
    std::int64_t reached = max_escaping_power(I.gens(), I.ring(), q, mask, a, budgets);
    return reached == a;
}

/// Levelwise scaling identity nu_{I^n}(q) = floor(nu_I(q)/n), exact because
/// (I^n)^r = I^{nr}.
inline bool check_fpt_scaling(const Ideal& I, std::int64_t n, std::int64_t e, const Ideal& m,
                              const Budgets& budgets = default_budgets()) {
    if (n < 1) throw input_error("check_fpt_scaling: n must be >= 1");
    NuValue base = nu_power(I, e, m, budgets);
    if (base.capped) throw input_error("check_fpt_scaling: ideal escapes the maximal ideal");
    NuValue powered = nu_power(ideal_power(I, n, budgets), e, m, budgets);
    return powered.nu == base.nu / n;
}

/// Skoda-type containment for test ideals: tau(I^mexp) lies inside I for
/// mexp at least the number of generators.
inline CertifiedBool skoda_check(const Ideal& I, std::int64_t mexp, std::int64_t e_max = 4,
                                 const Budgets& budgets = default_budgets()) {
    if (mexp < static_cast<std::int64_t>(I.gens().size()))
        throw input_error("skoda_check: exponent below generator count");
    TestIdealResult tau = test_ideal(I, Rat(mexp), e_max, budgets);
    return {ideal_contains(I, tau.ideal, budgets), tau.certified};
}

} // namespace charp
