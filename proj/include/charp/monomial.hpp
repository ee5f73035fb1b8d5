#pragma once

#include <algorithm>
#include <cstdint>
#include <numeric>
#include <stdexcept>
#include <vector>

namespace charp {

using Exp = std::int64_t;

// Exponents stay far below this in any sane computation; the guard catches
// runaway power towers before they wrap.
inline constexpr Exp kMaxExponent = Exp{1} << 42;

/// Dense exponent vector, one entry per ring variable. Immutable by convention:
/// all operations return fresh values.
class Monomial {
public:
    Monomial() = default;
    explicit Monomial(std::size_t nvars) : e_(nvars, 0) {}
    explicit Monomial(std::vector<Exp> exps) : e_(std::move(exps)) {
        for (Exp x : e_)
            if (x < 0) throw std::invalid_argument("Monomial: negative exponent");
    }

    std::size_t nvars() const { return e_.size(); }
    Exp operator[](std::size_t i) const { return e_[i]; }
    const std::vector<Exp>& exponents() const { return e_; }

    Exp degree() const { return std::accumulate(e_.begin(), e_.end(), Exp{0}); }

    bool is_one() const {
        return std::all_of(e_.begin(), e_.end(), [](Exp x) { return x == 0; });
    }

    Monomial operator*(const Monomial& o) const {
        check_arity(o);
        Monomial r(*this);
        for (std::size_t i = 0; i < e_.size(); ++i) {
            r.e_[i] += o.e_[i];
            if (r.e_[i] > kMaxExponent)
                throw std::overflow_error("Monomial: exponent overflow");
        }
        return r;
    }

    bool divides(const Monomial& o) const {
        check_arity(o);
        for (std::size_t i = 0; i < e_.size(); ++i)
            if (e_[i] > o.e_[i]) return false;
        return true;
    }

    /// Quotient o -> o / *this; caller must ensure divisibility.
    Monomial divide_into(const Monomial& o) const {
        check_arity(o);
        Monomial r(o);
        for (std::size_t i = 0; i < e_.size(); ++i) {
            r.e_[i] -= e_[i];
            if (r.e_[i] < 0) throw std::domain_error("Monomial: inexact division");
        }
        return r;
    }

    Monomial lcm(const Monomial& o) const {
        check_arity(o);
        Monomial r(*this);
        for (std::size_t i = 0; i < e_.size(); ++i) r.e_[i] = std::max(r.e_[i], o.e_[i]);
        return r;
    }

    bool coprime(const Monomial& o) const {
        check_arity(o);
        for (std::size_t i = 0; i < e_.size(); ++i)
            if (e_[i] > 0 && o.e_[i] > 0) return false;
        return true;
    }

    Monomial pow(Exp k) const {
        if (k < 0) throw std::invalid_argument("Monomial::pow: negative exponent");
        Monomial r(*this);
        for (auto& x : r.e_) {
            x *= k;
            if (x > kMaxExponent) throw std::overflow_error("Monomial: exponent overflow");
        }
        return r;
    }

    friend bool operator==(const Monomial& a, const Monomial& b) { return a.e_ == b.e_; }
    friend bool operator!=(const Monomial& a, const Monomial& b) { return a.e_ != b.e_; }
    /// Container order only (plain lexicographic on the exponent vector).
    friend bool operator<(const Monomial& a, const Monomial& b) { return a.e_ < b.e_; }

private:
    void check_arity(const Monomial& o) const {
        if (e_.size() != o.e_.size())
            throw std::invalid_argument("Monomial: variable count mismatch");
    }

    std::vector<Exp> e_;
};

} // namespace charp
