#pragma once

#include <cstdint>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "charp/ideal.hpp"
#include "charp/parse.hpp"
#include "charp/poly.hpp"
#include "charp/ring.hpp"

namespace charp {

/// Integer-coefficient polynomial AST: canonical term list (descending
/// grevlex, merged, no zeros) over a named variable list.
struct ZPoly {
    std::vector<std::pair<Monomial, std::int64_t>> terms;

    bool is_zero() const { return terms.empty(); }

    friend bool operator==(const ZPoly& a, const ZPoly& b) { return a.terms == b.terms; }
};

/// Parsed ideal specification file: exact integer generators awaiting
/// reduction modulo a prime.
struct IntegerIdealSpec {
    std::vector<std::string> variables;
    std::vector<ZPoly> generators;
    std::string label;
    std::optional<std::int64_t> expected_height;

    friend bool operator==(const IntegerIdealSpec& a, const IntegerIdealSpec& b) {
        return a.variables == b.variables && a.generators == b.generators &&
               a.label == b.label && a.expected_height == b.expected_height;
    }
};

namespace detail {

inline ZPoly normalize_zpoly(std::vector<std::pair<Monomial, std::int64_t>> terms,
                             std::size_t line) {
    MonomialOrder g = MonomialOrder::grevlex();
    std::sort(terms.begin(), terms.end(),
              [&](const auto& a, const auto& b) { return g.greater(a.first, b.first); });
    ZPoly out;
    for (auto& [m, c] : terms) {
        if (c == 0) continue;
        if (!out.terms.empty() && out.terms.back().first == m) {
            __int128 s = static_cast<__int128>(out.terms.back().second) + c;
            if (s > INT64_MAX || s < INT64_MIN)
                throw parse_error(line, 1, "integer coefficient overflow");
            if (s == 0)
                out.terms.pop_back();
            else
                out.terms.back().second = static_cast<std::int64_t>(s);
        } else {
            out.terms.push_back({std::move(m), c});
        }
    }
    return out;
}

inline ZPoly parse_zpoly(const std::string& text, const Ring& name_ring, std::size_t line) {
    detail::TermParser parser(text, line);
    std::vector<std::pair<Monomial, std::int64_t>> terms;
    for (const auto& raw : parser.parse())
        terms.push_back({raw_powers_to_monomial(raw.powers, name_ring, line), raw.coeff});
    return normalize_zpoly(std::move(terms), line);
}

inline bool valid_var_name(const std::string& s) {
    if (s.empty()) return false;
    if (!std::isalpha(static_cast<unsigned char>(s[0])) && s[0] != '_') return false;
    for (char c : s)
        if (!std::isalnum(static_cast<unsigned char>(c)) && c != '_') return false;
    return true;
}

} // namespace detail

/// Parse the ideal file grammar: `ring: v1, v2, ...`, optional `label:` and
/// `height:` lines, then `gens:` with generators comma-separated or one per
/// line. `#` starts a comment.
inline IntegerIdealSpec parse_ideal_file(const std::string& text) {
    IntegerIdealSpec spec;
    // variable names checked against a throwaway descriptor (any prime works)
    std::shared_ptr<const Ring> name_ring;
    bool saw_ring = false, in_gens = false;
    std::vector<std::pair<std::string, std::size_t>> gen_texts;

    std::istringstream in(text);
    std::string raw;
    std::size_t lineno = 0;
    while (std::getline(in, raw)) {
        ++lineno;
        std::string line = raw;
        if (auto hash = line.find('#'); hash != std::string::npos) line.resize(hash);
        auto first = line.find_first_not_of(" \t\r");
        if (first == std::string::npos) continue;
        auto last = line.find_last_not_of(" \t\r");
        line = line.substr(first, last - first + 1);

        auto starts = [&](const char* kw) {
            std::size_t n = std::string(kw).size();
            return line.size() >= n && line.compare(0, n, kw) == 0;
        };
        if (starts("ring:")) {
            if (saw_ring) throw parse_error(lineno, 1, "duplicate ring line");
            saw_ring = true;
            std::string rest = line.substr(5);
            std::istringstream vs(rest);
            std::string name;
            while (std::getline(vs, name, ',')) {
                auto a = name.find_first_not_of(" \t");
                if (a == std::string::npos) throw parse_error(lineno, 1, "empty variable name");
                auto b = name.find_last_not_of(" \t");
                name = name.substr(a, b - a + 1);
                if (!detail::valid_var_name(name))
                    throw parse_error(lineno, 1, "bad variable name '" + name + "'");
                spec.variables.push_back(name);
            }
            if (spec.variables.empty()) throw parse_error(lineno, 1, "ring line lists no variables");
            name_ring = std::make_shared<const Ring>(PrimeField(2), spec.variables);
        } else if (starts("label:")) {
            std::string rest = line.substr(6);
            auto a = rest.find_first_not_of(" \t");
            spec.label = a == std::string::npos ? "" : rest.substr(a);
        } else if (starts("height:")) {
            try {
                spec.expected_height = std::stoll(line.substr(7));
            } catch (const std::exception&) {
                throw parse_error(lineno, 1, "bad height");
            }
        } else if (starts("gens:")) {
            if (!saw_ring) throw parse_error(lineno, 1, "gens before ring line");
            if (in_gens) throw parse_error(lineno, 1, "duplicate gens line");
            in_gens = true;
            std::string rest = line.substr(5);
            std::istringstream gs(rest);
            std::string g;
            while (std::getline(gs, g, ','))
                if (g.find_first_not_of(" \t") != std::string::npos)
                    gen_texts.push_back({g, lineno});
        } else if (in_gens) {
            std::istringstream gs(line);
            std::string g;
            while (std::getline(gs, g, ','))
                if (g.find_first_not_of(" \t") != std::string::npos)
                    gen_texts.push_back({g, lineno});
        } else {
            throw parse_error(lineno, 1, "unexpected line '" + line + "'");
        }
    }
    if (!saw_ring) throw parse_error(lineno, 1, "missing ring line");
    if (gen_texts.empty()) throw parse_error(lineno, 1, "no generators");
    for (const auto& [g, ln] : gen_texts) {
        ZPoly zp = detail::parse_zpoly(g, *name_ring, ln);
        if (zp.is_zero()) throw parse_error(ln, 1, "generator is zero over the integers");
        spec.generators.push_back(std::move(zp));
    }
    return spec;
}

inline std::string zpoly_str(const ZPoly& f, const std::vector<std::string>& vars) {
    if (f.is_zero()) return "0";
    std::ostringstream out;
    bool first = true;
    for (const auto& [m, c] : f.terms) {
        std::int64_t mag = c < 0 ? -c : c;
        if (first) {
            if (c < 0) out << "-";
        } else {
            out << (c < 0 ? " - " : " + ");
        }
        first = false;
        if (m.is_one()) {
            out << mag;
            continue;
        }
        bool lead = true;
        if (mag != 1) {
            out << mag;
            lead = false;
        }
        for (std::size_t i = 0; i < m.nvars(); ++i) {
            if (m[i] == 0) continue;
            if (!lead) out << "*";
            lead = false;
            out << vars[i];
            if (m[i] != 1) out << "^" << m[i];
        }
    }
    return out.str();
}

/// Canonical printer; parse(to_text(spec)) == spec.
inline std::string to_text(const IntegerIdealSpec& spec) {
    std::ostringstream out;
    if (!spec.label.empty()) out << "label: " << spec.label << "\n";
    if (spec.expected_height) out << "height: " << *spec.expected_height << "\n";
    out << "ring: ";
    for (std::size_t i = 0; i < spec.variables.size(); ++i) {
        if (i) out << ", ";
        out << spec.variables[i];
    }
    out << "\ngens:\n";
    for (const auto& g : spec.generators) out << "  " << zpoly_str(g, spec.variables) << "\n";
    return out.str();
}

struct BadPrimeBound {
    std::int64_t P = 1; // >= largest prime factor of any coefficient
};

/// Largest prime factor over all generator coefficients (1 when every
/// coefficient is a unit). Reductions at primes above this bound keep every
/// generator nonzero.
inline BadPrimeBound bad_prime_bound(const IntegerIdealSpec& spec) {
    std::int64_t best = 1;
    constexpr std::int64_t kFactorCap = 1000000000000LL; // exact trial division range
    for (const auto& g : spec.generators) {
        for (const auto& [m, c] : g.terms) {
            std::int64_t v = c < 0 ? -c : c;
            if (v > kFactorCap)
                throw input_error("coefficient too large for bad-prime factorization");
            for (std::int64_t d = 2; d * d <= v; ++d) {
                while (v % d == 0) {
                    best = std::max(best, d);
                    v /= d;
                }
            }
            if (v > 1) best = std::max(best, v);
        }
    }
    return {best};
}

/// Coefficient-wise reduction modulo p. A generator that vanishes modulo p is
/// a hard error: p is a bad prime for this ideal.
inline Ideal reduce_mod_p(const IntegerIdealSpec& spec, std::int64_t p) {
    RingPtr ring = make_ring(p, spec.variables); // validates primality
    std::vector<Poly> gens;
    gens.reserve(spec.generators.size());
    for (std::size_t gi = 0; gi < spec.generators.size(); ++gi) {
        std::vector<Term> terms;
        for (const auto& [m, c] : spec.generators[gi].terms) {
            std::int64_t r = ring->field.reduce(c);
            if (r != 0) terms.push_back({m, r});
        }
        Poly f(ring, std::move(terms));
        if (f.is_zero())
            throw input_error("bad prime " + std::to_string(p) + ": generator " +
                              zpoly_str(spec.generators[gi], spec.variables) +
                              " vanishes modulo p");
        gens.push_back(std::move(f));
    }
    return Ideal(ring, std::move(gens));
}

} // namespace charp
