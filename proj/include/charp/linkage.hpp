#pragma once

#include <atomic>
#include <cstdint>
#include <exception>
#include <sstream>
#include <string>
#include <thread>
#include <vector>

#include "charp/frobenius.hpp"
#include "charp/groebner.hpp"
#include "charp/ideal.hpp"
#include "charp/idealfile.hpp"
#include "charp/thresholds.hpp"

namespace charp {

/// Generic linkage data of I = (f_1..f_r) with height c: the extended ring
/// S = R[u_ij] (c rows by r columns, appended row-major), the generic
/// combinations g_i = sum_j u_ij f_j, L = (g_1..g_c) and J = (L : I).
struct LinkageData {
    RingPtr base_ring;
    RingPtr extended_ring;
    Ideal I_ext;
    Ideal L;
    Ideal J;
    std::int64_t c = 0;
    std::int64_t r = 0;
};

inline LinkageData build_generic_linkage(const Ideal& I,
                                         const Budgets& budgets = default_budgets()) {
    if (I.is_zero_ideal()) throw input_error("build_generic_linkage: zero ideal");
    std::int64_t c = ideal_height(I, budgets); // throws on the unit ideal
    std::int64_t r = static_cast<std::int64_t>(I.gens().size());
    if (c > r)
        throw input_error("build_generic_linkage: height " + std::to_string(c) +
                          " exceeds generator count " + std::to_string(r));
    std::vector<std::string> unames;
    for (std::int64_t i = 1; i <= c; ++i)
        for (std::int64_t j = 1; j <= r; ++j)
            unames.push_back((c <= 9 && r <= 9)
                                 ? "u" + std::to_string(i) + std::to_string(j)
                                 : "u" + std::to_string(i) + "_" + std::to_string(j));
    RingPtr S = extend_ring(I.ring(), unames);
    std::size_t nbase = I.ring()->nvars();

    std::vector<Poly> fs;
    fs.reserve(I.gens().size());
    for (const auto& f : I.gens()) fs.push_back(extend_poly(f, S));
    Ideal I_ext(S, fs);

    std::vector<Poly> gs;
    for (std::int64_t i = 0; i < c; ++i) {
        Poly g(S);
        for (std::int64_t j = 0; j < r; ++j) {
            std::size_t uidx = nbase + static_cast<std::size_t>(i * r + j);
            g = g + Poly::variable(S, uidx) * fs[static_cast<std::size_t>(j)];
        }
        gs.push_back(std::move(g));
    }
    Ideal L(S, gs);
    Ideal J = ideal_colon(L, I_ext, budgets);
    return LinkageData{I.ring(), S, std::move(I_ext), std::move(L), std::move(J), c, r};
}

struct LevelTriple {
    std::int64_t nu_I = 0, nu_L = 0, nu_J = 0;
};

/// nu_bracket of (I S)^c, L^c and J^c at the origin of S at level e. By
/// containment nu_L <= nu_I and nu_L <= nu_J hold; equality nu_L = nu_I is
/// recorded by the caller, not assumed.
inline LevelTriple compare_lce_levelwise(const LinkageData& ld, std::int64_t e,
                                         const Budgets& budgets = default_budgets()) {
    if (ld.I_ext.has_unit_generator()) throw input_error("compare_lce_levelwise: unit ideal");
    Ideal m = origin_maximal_ideal(ld.extended_ring);
    LevelTriple t;
    t.nu_I = nu_bracket(ideal_power(ld.I_ext, ld.c, budgets), e, m, budgets).nu;
    t.nu_L = nu_bracket(ideal_power(ld.L, ld.c, budgets), e, m, budgets).nu;
    t.nu_J = nu_bracket(ideal_power(ld.J, ld.c, budgets), e, m, budgets).nu;
    return t;
}

struct ComparisonRow {
    std::int64_t p = 0, e = 0, q = 0;
    std::int64_t nu_fpt_I = 0, nu_fpt_L = 0, nu_fpt_J = 0;
    std::int64_t nu_lce_Ic = 0, nu_lce_Lc = 0, nu_lce_Jc = 0;
    Rat gap{0};
    bool chain_ok = false;
    bool lce_eq = false;
    bool error = false;
    std::string error_msg;
};

/// Per-(prime, level) comparison of the thresholds of I, L and J. gap is the
/// empirical stand-in for the uniform-bound slack: max(0, lower_fpt(I) -
/// upper_fpt(J)).
struct ComparisonReport {
    std::string ideal_id;
    std::int64_t c = 0, r = 0;
    std::int64_t n_ext = 0; // variable count of S
    std::int64_t bad_prime_bound = 1;
    std::vector<std::string> generator_texts;
    std::vector<std::string> ext_vars;
    std::vector<ComparisonRow> rows; // sorted by (p, e)
    bool chain_ok_all = false;
    bool lce_levelwise_equal = false;
    bool has_errors = false;
};

inline ComparisonReport run_comparison(const IntegerIdealSpec& spec,
                                       const std::vector<std::int64_t>& primes,
                                       std::int64_t e_max,
                                       const Budgets& budgets = default_budgets(),
                                       std::int64_t jobs = 1) {
    if (primes.empty()) throw input_error("run_comparison: empty primes list");
    if (e_max < 1) throw input_error("run_comparison: e_max must be >= 1");
    BadPrimeBound bound = bad_prime_bound(spec);
    for (std::int64_t p : primes) {
        if (!PrimeField::is_prime(p))
            throw input_error("run_comparison: " + std::to_string(p) + " is not prime");
        if (p <= bound.P)
            throw input_error("run_comparison: prime " + std::to_string(p) +
                              " does not exceed the bad-prime bound " + std::to_string(bound.P));
    }

    ComparisonReport rep;
    rep.ideal_id = spec.label.empty() ? "ideal" : spec.label;
    rep.bad_prime_bound = bound.P;
    for (const auto& g : spec.generators)
        rep.generator_texts.push_back(zpoly_str(g, spec.variables));

    struct PrimeSetup {
        LinkageData ld;
        Ideal Ic, Lc, Jc;
        Ideal m;
    };
    std::vector<PrimeSetup> setups;
    setups.reserve(primes.size());
    for (std::int64_t p : primes) {
        Ideal Ip = reduce_mod_p(spec, p);
        LinkageData ld = build_generic_linkage(Ip, budgets);
        Ideal Ic = ideal_power(ld.I_ext, ld.c, budgets);
        Ideal Lc = ideal_power(ld.L, ld.c, budgets);
        Ideal Jc = ideal_power(ld.J, ld.c, budgets);
        Ideal m = origin_maximal_ideal(ld.extended_ring);
        setups.push_back({std::move(ld), std::move(Ic), std::move(Lc), std::move(Jc), std::move(m)});
    }
    rep.c = setups.front().ld.c;
    rep.r = setups.front().ld.r;
    rep.n_ext = static_cast<std::int64_t>(setups.front().ld.extended_ring->nvars());
    rep.ext_vars = setups.front().ld.extended_ring->vars;

    rep.rows.resize(primes.size() * static_cast<std::size_t>(e_max));
    auto compute_cell = [&](std::size_t idx) {
        std::size_t pi = idx / static_cast<std::size_t>(e_max);
        std::int64_t e = static_cast<std::int64_t>(idx % static_cast<std::size_t>(e_max)) + 1;
        const PrimeSetup& su = setups[pi];
        ComparisonRow row;
        row.p = primes[pi];
        row.e = e;
        row.q = q_power(row.p, e);
        try {
            row.nu_fpt_I = nu_power(su.ld.I_ext, e, su.m, budgets).nu;
            row.nu_fpt_L = nu_power(su.ld.L, e, su.m, budgets).nu;
            row.nu_fpt_J = nu_power(su.ld.J, e, su.m, budgets).nu;
            row.nu_lce_Ic = nu_bracket(su.Ic, e, su.m, budgets).nu;
            row.nu_lce_Lc = nu_bracket(su.Lc, e, su.m, budgets).nu;
            row.nu_lce_Jc = nu_bracket(su.Jc, e, su.m, budgets).nu;
            Rat lower_I(row.nu_fpt_I, row.q), upper_I(row.nu_fpt_I + 1, row.q);
            Rat lower_L(row.nu_fpt_L, row.q);
            Rat upper_J(row.nu_fpt_J + 1, row.q);
            row.gap = lower_I > upper_J ? lower_I - upper_J : Rat(0);
            row.chain_ok = lower_L <= upper_I && lower_I <= upper_J + row.gap;
            row.lce_eq = row.nu_lce_Ic == row.nu_lce_Lc;
        } catch (const resource_error& ex) {
            row.error = true;
            row.error_msg = ex.what();
        }
        rep.rows[idx] = std::move(row);
    };

    std::size_t ncells = rep.rows.size();
    std::int64_t nthreads = std::min<std::int64_t>(jobs, static_cast<std::int64_t>(ncells));
    if (nthreads <= 1) {
        for (std::size_t i = 0; i < ncells; ++i) compute_cell(i);
    } else {
        std::atomic<std::size_t> next{0};
        std::exception_ptr first_error;
        std::mutex err_mu;
        std::vector<std::thread> pool;
        for (std::int64_t t = 0; t < nthreads; ++t) {
            pool.emplace_back([&] {
                for (std::size_t i = next.fetch_add(1); i < ncells; i = next.fetch_add(1)) {
                    try {
                        compute_cell(i);
                    } catch (...) {
                        std::lock_guard<std::mutex> lock(err_mu);
                        if (!first_error) first_error = std::current_exception();
                    }
                }
            });
        }
        for (auto& th : pool) th.join();
        if (first_error) std::rethrow_exception(first_error);
    }

    rep.chain_ok_all = true;
    rep.lce_levelwise_equal = true;
    for (const auto& row : rep.rows) {
        if (row.error) {
            rep.has_errors = true;
            rep.chain_ok_all = false;
            rep.lce_levelwise_equal = false;
            continue;
        }
        rep.chain_ok_all = rep.chain_ok_all && row.chain_ok;
        rep.lce_levelwise_equal = rep.lce_levelwise_equal && row.lce_eq;
    }
    return rep;
}

inline std::string comparison_csv(const ComparisonReport& rep) {
    std::ostringstream out;
    out << "p,e,q,nu_fpt_I,nu_fpt_L,nu_fpt_J,nu_lce_Ic,nu_lce_Lc,nu_lce_Jc,gap,chain_ok,lce_eq\n";
    for (const auto& r : rep.rows) {
        out << r.p << ',' << r.e << ',' << r.q << ',';
        if (r.error) {
            out << "NA,NA,NA,NA,NA,NA,NA,false,false\n";
            continue;
        }
        out << r.nu_fpt_I << ',' << r.nu_fpt_L << ',' << r.nu_fpt_J << ',' << r.nu_lce_Ic << ','
            << r.nu_lce_Lc << ',' << r.nu_lce_Jc << ',' << rat_str(r.gap) << ','
            << (r.chain_ok ? "true" : "false") << ',' << (r.lce_eq ? "true" : "false") << '\n';
    }
    return out.str();
}

inline std::string comparison_markdown(const ComparisonReport& rep) {
    std::ostringstream out;
    out << "# Threshold comparison under generic linkage: " << rep.ideal_id << "\n\n";
    out << "- generators:";
    for (const auto& g : rep.generator_texts) out << " `" << g << "`";
    out << "\n- height c = " << rep.c << ", generator count r = " << rep.r << "\n";
    out << "- extended ring S has " << rep.n_ext << " variables:";
    for (const auto& v : rep.ext_vars) out << " " << v;
    out << "\n- bad-prime bound P = " << rep.bad_prime_bound << "\n";
    out << "- thresholds are local at the origin of S; equidimensionality of the input "
           "is assumed, only its height is verified\n\n";
    out << "| p | e | q | nu_fpt(I) | nu_fpt(L) | nu_fpt(J) | nu_lce(I^c) | nu_lce(L^c) | "
           "nu_lce(J^c) | gap | chain_ok | lce_eq |\n";
    out << "|---|---|---|-----------|-----------|-----------|-------------|-------------|"
           "-------------|-----|----------|--------|\n";
    for (const auto& r : rep.rows) {
        out << "| " << r.p << " | " << r.e << " | " << r.q << " | ";
        if (r.error) {
            out << "NA | NA | NA | NA | NA | NA | NA | false | false |  error: " << r.error_msg
                << "\n";
            continue;
        }
        out << r.nu_fpt_I << " | " << r.nu_fpt_L << " | " << r.nu_fpt_J << " | " << r.nu_lce_Ic
            << " | " << r.nu_lce_Lc << " | " << r.nu_lce_Jc << " | " << rat_str(r.gap) << " | "
            << (r.chain_ok ? "true" : "false") << " | " << (r.lce_eq ? "true" : "false")
            << " |\n";
    }
    out << "\nReading the table:\n\n";
    out << "- `nu_fpt(L) / q <= (nu_fpt(I) + 1) / q` is theorem-implied (L is contained in I S); "
           "a violation is a bug, not a counterexample.\n";
    out << "- `nu_lce(L^c) <= nu_lce(I^c)` and `nu_lce(L^c) <= nu_lce(J^c)` are likewise "
           "containment-implied.\n";
    out << "- `lce_eq` (levelwise equality of the I^c and L^c bracket invariants) and the "
           "reported `gap` are finite-level empirical evidence, not proved facts at any fixed "
           "level.\n";
    out << "- all invariants are computed at the F_p-rational origin only.\n";
    return out.str();
}

} // namespace charp
