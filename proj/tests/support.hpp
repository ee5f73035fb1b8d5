#pragma once

// Shared helpers for the test suites: parsing shorthand and seeded random
// generators. Oracles live next to the tests that use them.

#include <random>
#include <string>
#include <vector>

#include "charp/charp.hpp"

namespace testsupport {

using namespace charp;

inline Poly P(const RingPtr& ring, const std::string& text) { return parse_poly(text, ring); }

inline Ideal ideal_of(const RingPtr& ring, const std::vector<std::string>& gens) {
    return ideal_from_strings(ring, gens);
}

inline Monomial random_monomial(const RingPtr& ring, Exp max_deg, std::mt19937& rng) {
    std::vector<Exp> e(ring->nvars(), 0);
    std::uniform_int_distribution<Exp> dd(0, max_deg);
    Exp budget = dd(rng);
    std::uniform_int_distribution<std::size_t> dv(0, ring->nvars() - 1);
    for (Exp i = 0; i < budget; ++i) e[dv(rng)] += 1;
    return Monomial(std::move(e));
}

inline Poly random_poly(const RingPtr& ring, Exp max_deg, int max_terms, std::mt19937& rng,
                        bool no_constant_term = false) {
    std::uniform_int_distribution<int> dt(1, max_terms);
    std::uniform_int_distribution<std::int64_t> dc(1, ring->p() - 1);
    std::vector<Term> terms;
    int n = dt(rng);
    for (int i = 0; i < n; ++i) {
        Monomial m = random_monomial(ring, max_deg, rng);
        if (no_constant_term && m.is_one()) continue;
        terms.push_back({std::move(m), dc(rng)});
    }
    return Poly(ring, std::move(terms));
}

/// Nonzero random polynomial inside the origin maximal ideal.
inline Poly random_poly_in_m(const RingPtr& ring, Exp max_deg, int max_terms, std::mt19937& rng) {
    while (true) {
        Poly f = random_poly(ring, max_deg, max_terms, rng, true);
        if (!f.is_zero()) return f;
    }
}

inline Ideal random_ideal_in_m(const RingPtr& ring, int max_gens, Exp max_deg, int max_terms,
                               std::mt19937& rng) {
    std::uniform_int_distribution<int> dg(1, max_gens);
    std::vector<Poly> gens;
    int n = dg(rng);
    for (int i = 0; i < n; ++i) gens.push_back(random_poly_in_m(ring, max_deg, max_terms, rng));
    return Ideal(ring, std::move(gens));
}

} // namespace testsupport
