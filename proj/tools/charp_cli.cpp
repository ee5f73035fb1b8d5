// charp: exact characteristic-p invariants of polynomial ideals and their
// generic linkages. Subcommands expose Groebner/colon/dimension queries,
// fpt/lce/test-ideal estimation, linkage construction and the comparison
// sweep that writes CSV/Markdown reports.

#include <CLI11.hpp>

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include "charp/charp.hpp"

namespace fs = std::filesystem;
using namespace charp;

namespace {

constexpr int kExitOk = 0;
constexpr int kExitInternal = 1;
constexpr int kExitInput = 2;
constexpr int kExitResource = 3;
constexpr int kExitRowFailure = 4;

std::string read_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw input_error("cannot open " + path);
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

IntegerIdealSpec load_spec(const std::string& path) {
    return parse_ideal_file(read_file(path));
}

void atomic_write(const fs::path& path, const std::string& content) {
    fs::path tmp = path;
    tmp += ".tmp";
    {
        std::ofstream out(tmp, std::ios::binary | std::ios::trunc);
        if (!out) throw input_error("cannot write " + tmp.string());
        out << content;
    }
    fs::rename(tmp, path);
}

std::int64_t env_int(const char* name, std::int64_t fallback) {
    const char* v = std::getenv(name);
    if (!v || !*v) return fallback;
    try {
        return std::stoll(v);
    } catch (const std::exception&) {
        throw input_error(std::string("bad integer in environment variable ") + name);
    }
}

struct CommonArgs {
    std::string ideal_path;
    std::int64_t p = 0;
    Budgets budgets;
};

void add_budget_flags(CLI::App* cmd, Budgets& budgets) {
    budgets.max_basis = static_cast<std::size_t>(env_int("CHARP_MAX_BASIS", 5000));
    budgets.max_degree = env_int("CHARP_MAX_DEGREE", 64);
    budgets.max_generators = static_cast<std::size_t>(env_int("CHARP_MAX_GENERATORS", 200000));
    cmd->add_option("--max-basis", budgets.max_basis, "Groebner basis size budget");
    cmd->add_option("--max-degree", budgets.max_degree, "Groebner total-degree budget");
    cmd->add_option("--max-generators", budgets.max_generators,
                    "expanded generator count budget");
}

std::string ideal_id_of(const IntegerIdealSpec& spec, const std::string& path) {
    if (!spec.label.empty()) return spec.label;
    return fs::path(path).stem().string();
}

void print_gens(const Ideal& I) {
    if (I.is_zero_ideal()) {
        std::cout << "0\n";
        return;
    }
    for (const auto& g : I.gens()) std::cout << g.str() << "\n";
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"exact F-pure-threshold, Frobenius-power and generic-linkage computations "
                 "over prime fields"};
    app.require_subcommand(1);

    // gb
    CommonArgs gb_args;
    std::string gb_order = "grevlex";
    auto* gb = app.add_subcommand("gb", "reduced Groebner basis of the ideal");
    gb->add_option("--ideal", gb_args.ideal_path, "ideal file")->required();
    gb->add_option("--p", gb_args.p, "prime modulus")->required();
    gb->add_option("--order", gb_order, "monomial order: grevlex or lex");
    add_budget_flags(gb, gb_args.budgets);

    // colon
    CommonArgs colon_args;
    std::string colon_by;
    auto* colon = app.add_subcommand("colon", "colon ideal (I : J)");
    colon->add_option("--ideal", colon_args.ideal_path, "file for I")->required();
    colon->add_option("--by", colon_by, "file for J")->required();
    colon->add_option("--p", colon_args.p, "prime modulus")->required();
    add_budget_flags(colon, colon_args.budgets);

    // dim
    CommonArgs dim_args;
    auto* dim = app.add_subcommand("dim", "Krull dimension of R/I");
    dim->add_option("--ideal", dim_args.ideal_path, "ideal file")->required();
    dim->add_option("--p", dim_args.p, "prime modulus")->required();
    add_budget_flags(dim, dim_args.budgets);

    // fpt
    CommonArgs fpt_args;
    std::int64_t fpt_emax = 2;
    auto* fpt = app.add_subcommand("fpt", "F-pure-threshold estimate table (CSV)");
    fpt->add_option("--ideal", fpt_args.ideal_path, "ideal file")->required();
    fpt->add_option("--p", fpt_args.p, "prime modulus")->required();
    fpt->add_option("--emax", fpt_emax, "levels e = 1..emax");
    add_budget_flags(fpt, fpt_args.budgets);

    // lce
    CommonArgs lce_args;
    std::int64_t lce_emax = 2;
    bool lce_no_verify = false;
    bool lce_fast = false;
    auto* lce = app.add_subcommand("lce", "least-critical-exponent estimate table (CSV)");
    lce->add_option("--ideal", lce_args.ideal_path, "ideal file")->required();
    lce->add_option("--p", lce_args.p, "prime modulus")->required();
    lce->add_option("--emax", lce_emax, "levels e = 1..emax");
    lce->add_flag("--no-verify-monotone", lce_no_verify,
                  "skip the per-instance monotonicity sweep (upper bounds stay heuristic)");
    lce->add_flag("--fast-search", lce_fast,
                  "binary-search nu_bracket instead of the full downward scan (implies "
                  "--no-verify-monotone; heuristic)");
    add_budget_flags(lce, lce_args.budgets);

    // tau
    CommonArgs tau_args;
    std::string tau_t = "1";
    std::int64_t tau_emax = 4;
    auto* tau = app.add_subcommand("tau", "test ideal tau(I^t) with stabilization");
    tau->add_option("--ideal", tau_args.ideal_path, "ideal file")->required();
    tau->add_option("--p", tau_args.p, "prime modulus")->required();
    tau->add_option("--t", tau_t, "exponent t as an exact rational a/b");
    tau->add_option("--emax", tau_emax, "stabilization search bound");
    add_budget_flags(tau, tau_args.budgets);

    // fpure
    CommonArgs fpure_args;
    std::string fpure_t = "1";
    std::int64_t fpure_e = 1;
    bool fpure_strong = false;
    auto* fpure = app.add_subcommand("fpure", "level-e F-purity of (R, I^t) at the origin");
    fpure->add_option("--ideal", fpure_args.ideal_path, "ideal file")->required();
    fpure->add_option("--p", fpure_args.p, "prime modulus")->required();
    fpure->add_option("--t", fpure_t, "exponent t as an exact rational a/b");
    fpure->add_option("--e", fpure_e, "level");
    fpure->add_flag("--strong", fpure_strong,
                    "use the strongly-F-pure variant exponent ceil(tq) instead of "
                    "floor(t(q-1))");
    add_budget_flags(fpure, fpure_args.budgets);

    // link
    CommonArgs link_args;
    auto* link = app.add_subcommand("link", "generic linkage data: S, g_i, L and J = (L : I)");
    link->add_option("--ideal", link_args.ideal_path, "ideal file")->required();
    link->add_option("--p", link_args.p, "prime modulus")->required();
    add_budget_flags(link, link_args.budgets);

    // sweep
    CommonArgs sweep_args;
    std::string sweep_primes;
    std::int64_t sweep_emax = 2;
    std::int64_t sweep_jobs = 1;
    std::string sweep_out = ".";
    std::string sweep_formats = "csv,md";
    auto* sweep = app.add_subcommand(
        "sweep", "per-prime comparison of I, L and J thresholds; writes report.csv/report.md");
    sweep->add_option("--ideal", sweep_args.ideal_path, "ideal file")->required();
    sweep->add_option("--primes", sweep_primes, "comma-separated primes")->required();
    sweep->add_option("--emax", sweep_emax, "levels e = 1..emax");
    sweep->add_option("--jobs", sweep_jobs, "worker threads for (prime, level) cells");
    sweep->add_option("--out", sweep_out, "output directory");
    sweep->add_option("--formats", sweep_formats, "subset of csv,md");
    add_budget_flags(sweep, sweep_args.budgets);

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int rc = app.exit(e);
        return rc == 0 ? kExitOk : kExitInput;
    }

    try {
        if (gb->parsed()) {
            IntegerIdealSpec spec = load_spec(gb_args.ideal_path);
            Ideal I = reduce_mod_p(spec, gb_args.p);
            MonomialOrder order = MonomialOrder::grevlex();
            if (gb_order == "lex")
                order = MonomialOrder::lex();
            else if (gb_order != "grevlex")
                throw input_error("unknown order " + gb_order);
            auto G = groebner(I, order, gb_args.budgets);
            for (const auto& g : G->basis) std::cout << g.str() << "\n";
            return kExitOk;
        }
        if (colon->parsed()) {
            Ideal I = reduce_mod_p(load_spec(colon_args.ideal_path), colon_args.p);
            Ideal J = reduce_mod_p(load_spec(colon_by), colon_args.p);
            print_gens(ideal_colon(I, J, colon_args.budgets));
            return kExitOk;
        }
        if (dim->parsed()) {
            Ideal I = reduce_mod_p(load_spec(dim_args.ideal_path), dim_args.p);
            std::cout << ideal_dimension(I, dim_args.budgets) << "\n";
            return kExitOk;
        }
        if (fpt->parsed()) {
            IntegerIdealSpec spec = load_spec(fpt_args.ideal_path);
            Ideal I = reduce_mod_p(spec, fpt_args.p);
            Ideal m = origin_maximal_ideal(I.ring());
            ThresholdTable t = fpt_estimate(I, m, fpt_emax, fpt_args.budgets,
                                            ideal_id_of(spec, fpt_args.ideal_path));
            std::cout << threshold_csv(t);
            return kExitOk;
        }
        if (lce->parsed()) {
            IntegerIdealSpec spec = load_spec(lce_args.ideal_path);
            Ideal I = reduce_mod_p(spec, lce_args.p);
            Ideal m = origin_maximal_ideal(I.ring());
            ThresholdTable t;
            if (lce_fast) {
                t.ideal_id = ideal_id_of(spec, lce_args.ideal_path);
                t.kind = "lce";
                t.p = lce_args.p;
                for (std::int64_t e = 1; e <= lce_emax; ++e) {
                    std::int64_t q = q_power(lce_args.p, e);
                    NuValue nu = nu_bracket(I, e, m, lce_args.budgets, NuSearch::Fast);
                    t.rows.push_back(
                        {e, q, nu.nu, Rat(nu.nu, q), Rat(nu.nu + 1, q), false, nu.capped});
                }
            } else {
                t = lce_estimate(I, m, lce_emax, lce_args.budgets,
                                 ideal_id_of(spec, lce_args.ideal_path), !lce_no_verify);
            }
            std::cout << threshold_csv(t);
            return kExitOk;
        }
        if (tau->parsed()) {
            Ideal I = reduce_mod_p(load_spec(tau_args.ideal_path), tau_args.p);
            TestIdealResult r = test_ideal(I, parse_rat(tau_t), tau_emax, tau_args.budgets);
            print_gens(r.ideal);
            std::cout << "certified: " << (r.certified ? "true" : "false") << "\n";
            std::cout << "stabilized_at_e: " << r.stabilized_at_e << "\n";
            return kExitOk;
        }
        if (fpure->parsed()) {
            Ideal I = reduce_mod_p(load_spec(fpure_args.ideal_path), fpure_args.p);
            Ideal m = origin_maximal_ideal(I.ring());
            bool pure = is_f_pure_level(I, parse_rat(fpure_t), fpure_e, m, fpure_args.budgets,
                                        fpure_strong);
            std::cout << (pure ? "true" : "false") << "\n";
            return kExitOk;
        }
        if (link->parsed()) {
            Ideal I = reduce_mod_p(load_spec(link_args.ideal_path), link_args.p);
            LinkageData ld = build_generic_linkage(I, link_args.budgets);
            std::cout << "ring S:";
            for (const auto& v : ld.extended_ring->vars) std::cout << " " << v;
            std::cout << "\nheight c: " << ld.c << "\ngenerators r: " << ld.r << "\n";
            std::cout << "generic combinations:\n";
            for (const auto& g : ld.L.gens()) std::cout << "  " << g.str() << "\n";
            std::cout << "J = (L : I):\n";
            for (const auto& g : ld.J.gens()) std::cout << "  " << g.str() << "\n";
            return kExitOk;
        }
        if (sweep->parsed()) {
            IntegerIdealSpec spec = load_spec(sweep_args.ideal_path);
            std::vector<std::int64_t> primes;
            std::istringstream ps(sweep_primes);
            std::string tok;
            while (std::getline(ps, tok, ',')) {
                if (tok.find_first_not_of(" \t") == std::string::npos) continue;
                primes.push_back(std::stoll(tok));
            }
            if (primes.empty()) throw input_error("sweep: empty primes list");
            if (sweep_jobs < 1) throw input_error("sweep: --jobs must be >= 1");
            ComparisonReport rep =
                run_comparison(spec, primes, sweep_emax, sweep_args.budgets, sweep_jobs);
            rep.ideal_id = ideal_id_of(spec, sweep_args.ideal_path);
            fs::create_directories(sweep_out);
            bool want_csv = sweep_formats.find("csv") != std::string::npos;
            bool want_md = sweep_formats.find("md") != std::string::npos;
            if (!want_csv && !want_md) throw input_error("sweep: no output format selected");
            if (want_csv) atomic_write(fs::path(sweep_out) / "report.csv", comparison_csv(rep));
            if (want_md)
                atomic_write(fs::path(sweep_out) / "report.md", comparison_markdown(rep));
            if (rep.has_errors || !rep.chain_ok_all) {
                std::cerr << "sweep: row failures recorded in the report\n";
                return kExitRowFailure;
            }
            return kExitOk;
        }
        return kExitInternal;
    } catch (const parse_error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitInput;
    } catch (const resource_error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitResource;
    } catch (const input_error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitInput;
    } catch (const std::invalid_argument& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitInput;
    } catch (const std::exception& e) {
        std::cerr << "internal error: " << e.what() << "\n";
        return kExitInternal;
    }
}
