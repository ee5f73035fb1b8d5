#pragma once

#include <cstddef>
#include <cstdint>
#include <stdexcept>
#include <string>

namespace charp {

/// Runaway computations abort with this instead of hanging.
class resource_error : public std::runtime_error {
public:
    explicit resource_error(const std::string& what) : std::runtime_error(what) {}
};

/// Input and precondition violations (bad primes, improper ideals, ...).
class input_error : public std::invalid_argument {
public:
    explicit input_error(const std::string& what) : std::invalid_argument(what) {}
};

/// Caps for the Groebner and power-expansion kernels.
struct Budgets {
    std::size_t max_basis = 5000;       // Groebner basis elements
    std::int64_t max_degree = 64;       // total degree inside Buchberger
    std::size_t max_generators = 200000; // expanded generator products per power

    void check_basis(std::size_t n) const {
        if (n > max_basis)
            throw resource_error("Groebner basis budget exceeded (" +
                                 std::to_string(max_basis) + " elements)");
    }
    void check_degree(std::int64_t d) const {
        if (d > max_degree)
            throw resource_error("degree budget exceeded (cap " +
                                 std::to_string(max_degree) + ", saw " + std::to_string(d) + ")");
    }
    void check_generators(std::uint64_t n) const {
        if (n > max_generators)
            throw resource_error("generator-count budget exceeded (cap " +
                                 std::to_string(max_generators) + ", need " + std::to_string(n) +
                                 ")");
    }
};

inline const Budgets& default_budgets() {
    static const Budgets b{};
    return b;
}

/// Frobenius levels are capped at q = p^e <= 2^20; desk-scale levels never
/// need more and the cap keeps every exponent comfortably in range.
inline constexpr std::int64_t kMaxQ = std::int64_t{1} << 20;

inline std::int64_t q_power(std::int64_t p, std::int64_t e) {
    if (e < 0) throw input_error("negative Frobenius level");
    std::int64_t q = 1;
    for (std::int64_t i = 0; i < e; ++i) {
        q *= p;
        if (q > kMaxQ)
            throw input_error("level cap exceeded: p^e = " + std::to_string(p) + "^" +
                              std::to_string(e) + " > 2^20");
    }
    return q;
}

} // namespace charp
