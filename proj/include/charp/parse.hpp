#pragma once

#include <cctype>
#include <cstdint>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "charp/poly.hpp"
#include "charp/ring.hpp"

namespace charp {

class parse_error : public std::runtime_error {
public:
    parse_error(std::size_t line, std::size_t col, const std::string& msg)
        : std::runtime_error("parse error at " + std::to_string(line) + ":" +
                             std::to_string(col) + ": " + msg),
          line(line),
          col(col) {}
    std::size_t line, col;
};

namespace detail {

/// One parsed product of an integer coefficient and named variable powers.
struct RawTerm {
    std::int64_t coeff = 1;
    std::vector<std::pair<std::string, Exp>> powers;
};

class TermParser {
public:
    TermParser(const std::string& text, std::size_t line_base)
        : s_(text), line_(line_base) {}

    /// poly := [sign] term (sign term)*, term := factor ('*'? factor)*,
    /// factor := integer | ident ['^' integer]. '*' is optional everywhere.
    std::vector<RawTerm> parse() {
        std::vector<RawTerm> terms;
        skip_ws();
        if (eof()) fail("empty polynomial");
        std::int64_t sign = parse_sign();
        while (true) {
            RawTerm t = parse_term();
            t.coeff *= sign;
            terms.push_back(std::move(t));
            skip_ws();
            if (eof()) break;
            if (s_[pos_] == '+' || s_[pos_] == '-') {
                sign = parse_sign();
            } else {
                fail(std::string("unexpected character '") + s_[pos_] + "'");
            }
        }
        return terms;
    }

private:
    bool eof() const { return pos_ >= s_.size(); }

    void skip_ws() {
        while (!eof() && (s_[pos_] == ' ' || s_[pos_] == '\t')) ++pos_;
    }

    [[noreturn]] void fail(const std::string& msg) const {
        throw parse_error(line_, pos_ + 1, msg);
    }

    std::int64_t parse_sign() {
        std::int64_t sign = 1;
        while (true) {
            skip_ws();
            if (eof()) fail("dangling sign");
            if (s_[pos_] == '+') {
                ++pos_;
            } else if (s_[pos_] == '-') {
                sign = -sign;
                ++pos_;
            } else {
                return sign;
            }
        }
    }

    std::int64_t parse_int() {
        skip_ws();
        std::size_t start = pos_;
        while (!eof() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) ++pos_;
        if (pos_ == start) fail("expected integer");
        errno = 0;
        std::string digits = s_.substr(start, pos_ - start);
        try {
            std::size_t used = 0;
            std::int64_t v = std::stoll(digits, &used);
            if (used != digits.size()) fail("bad integer " + digits);
            return v;
        } catch (const std::out_of_range&) {
            fail("integer out of range: " + digits);
        }
    }

    std::string parse_ident() {
        std::size_t start = pos_;
        while (!eof() && (std::isalnum(static_cast<unsigned char>(s_[pos_])) || s_[pos_] == '_'))
            ++pos_;
        return s_.substr(start, pos_ - start);
    }

    RawTerm parse_term() {
        RawTerm t;
        bool any = false;
        while (true) {
            skip_ws();
            if (eof()) break;
            char c = s_[pos_];
            if (std::isdigit(static_cast<unsigned char>(c))) {
                std::int64_t v = parse_int();
                __int128 prod = static_cast<__int128>(t.coeff) * v;
                if (prod > INT64_MAX || prod < INT64_MIN) fail("coefficient overflow");
                t.coeff = static_cast<std::int64_t>(prod);
                any = true;
            } else if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') {
                std::string name = parse_ident();
                Exp e = 1;
                skip_ws();
                if (!eof() && s_[pos_] == '^') {
                    ++pos_;
                    e = parse_int();
                    if (e < 0) fail("negative exponent");
                }
                t.powers.emplace_back(std::move(name), e);
                any = true;
            } else {
                break;
            }
            skip_ws();
            if (!eof() && s_[pos_] == '*') {
                ++pos_;
                skip_ws();
                if (eof()) fail("dangling '*'");
                continue;
            }
            if (!eof()) {
                char n = s_[pos_];
                if (std::isalnum(static_cast<unsigned char>(n)) || n == '_') continue;
            }
            break;
        }
        if (!any) fail("expected term");
        return t;
    }

    std::string s_;
    std::size_t pos_ = 0;
    std::size_t line_;
};

inline Monomial raw_powers_to_monomial(const std::vector<std::pair<std::string, Exp>>& powers,
                                       const Ring& ring, std::size_t line) {
    std::vector<Exp> e(ring.nvars(), 0);
    for (const auto& [name, exp] : powers) {
        std::size_t i = ring.var_index(name);
        if (i == Ring::npos) throw parse_error(line, 1, "unknown variable " + name);
        e[i] += exp;
        if (e[i] > kMaxExponent) throw parse_error(line, 1, "exponent overflow");
    }
    return Monomial(std::move(e));
}

} // namespace detail

/// Parse a polynomial over the given F_p ring from the shared text syntax.
inline Poly parse_poly(const std::string& text, const RingPtr& ring, std::size_t line_base = 1) {
    detail::TermParser parser(text, line_base);
    std::vector<Term> terms;
    for (const auto& raw : parser.parse()) {
        Monomial m = detail::raw_powers_to_monomial(raw.powers, *ring, line_base);
        terms.push_back({std::move(m), ring->field.reduce(raw.coeff)});
    }
    return Poly(ring, std::move(terms));
}

} // namespace charp
