#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>

namespace charp {

/// Prime field F_p for a machine-word prime 2 <= p < 2^31.
/// Elements are canonical representatives in [0, p); all arithmetic is exact.
class PrimeField {
public:
    explicit PrimeField(std::int64_t p) : p_(p) {
        if (p < 2 || p >= (std::int64_t{1} << 31))
            throw std::invalid_argument("PrimeField: modulus " + std::to_string(p) +
                                        " out of range [2, 2^31)");
        if (!is_prime(p))
            throw std::invalid_argument("PrimeField: modulus " + std::to_string(p) +
                                        " is not prime");
    }

    std::int64_t p() const { return p_; }

    std::int64_t reduce(std::int64_t a) const {
        std::int64_t r = a % p_;
        return r < 0 ? r + p_ : r;
    }

    std::int64_t add(std::int64_t a, std::int64_t b) const {
        std::int64_t s = a + b;
        return s >= p_ ? s - p_ : s;
    }

    std::int64_t sub(std::int64_t a, std::int64_t b) const {
        std::int64_t s = a - b;
        return s < 0 ? s + p_ : s;
    }

    std::int64_t neg(std::int64_t a) const { return a == 0 ? 0 : p_ - a; }

    std::int64_t mul(std::int64_t a, std::int64_t b) const { return (a * b) % p_; }

    std::int64_t pow(std::int64_t a, std::int64_t n) const {
        if (n < 0) throw std::invalid_argument("PrimeField::pow: negative exponent");
        std::int64_t base = reduce(a), acc = 1;
        while (n > 0) {
            if (n & 1) acc = mul(acc, base);
            base = mul(base, base);
            n >>= 1;
        }
        return acc;
    }

    std::int64_t inv(std::int64_t a) const {
        a = reduce(a);
        if (a == 0) throw std::domain_error("PrimeField::inv: zero is not invertible");
        return pow(a, p_ - 2);
    }

    friend bool operator==(const PrimeField& a, const PrimeField& b) { return a.p_ == b.p_; }
    friend bool operator!=(const PrimeField& a, const PrimeField& b) { return a.p_ != b.p_; }

    static bool is_prime(std::int64_t n) {
        if (n < 2) return false;
        if (n % 2 == 0) return n == 2;
        if (n % 3 == 0) return n == 3;
        for (std::int64_t d = 5; d * d <= n; d += 6) {
            if (n % d == 0 || n % (d + 2) == 0) return false;
        }
        return true;
    }

private:
    std::int64_t p_;
};

} // namespace charp
