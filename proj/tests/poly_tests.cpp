#include <catch2/catch_amalgamated.hpp>

#include "charp/charp.hpp"
#include "support.hpp"

using namespace charp;
using testsupport::P;

TEST_CASE("PrimeField arithmetic is exact mod p") {
    PrimeField f5(5);
    CHECK(f5.add(3, 4) == 2);
    CHECK(f5.sub(1, 3) == 3);
    CHECK(f5.mul(3, 4) == 2);
    CHECK(f5.neg(2) == 3);
    CHECK(f5.inv(2) == 3);
    CHECK(f5.pow(2, 5) == 2); // Fermat
    CHECK(f5.reduce(-7) == 3);
    CHECK_THROWS_AS(PrimeField(4), std::invalid_argument);
    CHECK_THROWS_AS(PrimeField(1), std::invalid_argument);
    CHECK_THROWS_AS(f5.inv(0), std::domain_error);
    CHECK(PrimeField::is_prime(2147483647)); // 2^31 - 1
    CHECK_FALSE(PrimeField::is_prime(1'000'000));
}

TEST_CASE("Monomial operations") {
    Monomial a({2, 1}), b({1, 2});
    CHECK(a.degree() == 3);
    CHECK((a * b) == Monomial({3, 3}));
    CHECK(Monomial({1, 0}).divides(a));
    CHECK_FALSE(b.divides(a));
    CHECK(a.lcm(b) == Monomial({2, 2}));
    CHECK(Monomial({2, 0}).coprime(Monomial({0, 3})));
    CHECK(a.pow(3) == Monomial({6, 3}));
    CHECK(Monomial({1, 0}).divide_into(a) == Monomial({1, 1}));
    CHECK_THROWS_AS(Monomial({-1, 0}), std::invalid_argument);
}

TEST_CASE("Monomial orders") {
    MonomialOrder grev = MonomialOrder::grevlex();
    MonomialOrder lex = MonomialOrder::lex();
    Monomial x2y({2, 1}), xy2({1, 2}), x({1, 0}), y3({0, 3});
    CHECK(grev.greater(x2y, xy2));
    CHECK(grev.greater(y3, x)); // degree first
    CHECK(lex.greater(x, y3));  // lex ignores degree
    CHECK(lex.greater(x2y, xy2));
    // elimination block: the tag variable (index 0) dominates
    MonomialOrder elim = MonomialOrder::elimination(1);
    Monomial t({1, 0, 0}), big({0, 5, 5});
    CHECK(elim.greater(t, big));
    CHECK(grev.cmp(x2y, x2y) == 0);
}

TEST_CASE("poly_add spec examples") {
    auto ring = make_ring(5, {"x", "y"});
    CHECK(P(ring, "x + y") + P(ring, "-y") == P(ring, "x"));
    Poly f = P(ring, "2x^2 + 3y");
    CHECK(f + Poly::zero(ring) == f);
    CHECK((P(ring, "x") + P(ring, "4x")).is_zero());
}

TEST_CASE("poly_mul spec examples") {
    auto ring5 = make_ring(5, {"x", "y"});
    CHECK(P(ring5, "x+y") * P(ring5, "x-y") == P(ring5, "x^2 - y^2"));
    auto ring2 = make_ring(2, {"x", "y"});
    Poly s = P(ring2, "x+y");
    CHECK(s * s == P(ring2, "x^2 + y^2")); // freshman's dream
    CHECK((P(ring5, "x+y") * Poly::zero(ring5)).is_zero());
}

TEST_CASE("ambient mismatch is rejected") {
    auto a = make_ring(5, {"x", "y"});
    auto b = make_ring(7, {"x", "y"});
    auto c = make_ring(5, {"x", "z"});
    CHECK_THROWS_AS(P(a, "x") + P(b, "x"), std::invalid_argument);
    CHECK_THROWS_AS(P(a, "x") * P(c, "x"), std::invalid_argument);
    // equal descriptors are the same ring even as distinct objects
    auto a2 = make_ring(5, {"x", "y"});
    CHECK(P(a, "x + y") + P(a2, "y") == P(a, "x + 2y"));
}

TEST_CASE("poly_frobenius_pow spec examples") {
    auto r3 = make_ring(3, {"x", "y"});
    CHECK(P(r3, "x+y").frobenius_pow(1) == P(r3, "x^3 + y^3"));
    auto r5 = make_ring(5, {"x", "y"});
    CHECK(P(r5, "2x").frobenius_pow(1) == P(r5, "2x^5")); // 2^5 = 2 mod 5
    auto r2 = make_ring(2, {"x", "y"});
    CHECK(P(r2, "x + y + 1").frobenius_pow(2) == P(r2, "x^4 + y^4 + 1"));
}

TEST_CASE("bracket membership spec examples") {
    auto ring = make_ring(2, {"x", "y"});
    CHECK(monomial_in_bracket_max(Monomial({3, 5}), 4));
    CHECK_FALSE(monomial_in_bracket_max(Monomial({3, 3}), 4));
    CHECK(monomial_in_bracket_max(Monomial({4, 0}), 4));
    CHECK(poly_in_bracket_max(P(ring, "x^2 + y^3"), 2));
    CHECK_FALSE(poly_in_bracket_max(P(ring, "x^2 + y^3"), 4)); // x^2 escapes
    CHECK(poly_in_bracket_max(Poly::zero(ring), 4));
}

TEST_CASE("canonical printing and parsing round-trip") {
    auto ring = make_ring(5, {"x", "y"});
    Poly f = P(ring, "3 + x*y*4 + x^2");
    CHECK(f.str() == "x^2 + 4*x*y + 3");
    CHECK(P(ring, f.str()) == f);
    CHECK(Poly::zero(ring).str() == "0");
    CHECK(P(ring, "2x^2y").str() == "2*x^2*y"); // '*' optional on input
    CHECK(P(ring, "- x - - y").str() == "4*x + y");
    CHECK_THROWS_AS(P(ring, "x + "), parse_error);
    CHECK_THROWS_AS(P(ring, "z"), parse_error);
    CHECK_THROWS_AS(P(ring, "x^-2"), parse_error);
}

TEST_CASE("ring axioms on random polynomials") {
    for (std::int64_t p : {2, 3, 5, 7}) {
        auto ring = make_ring(p, {"x", "y", "z"});
        std::mt19937 rng(42 + static_cast<unsigned>(p));
        for (int it = 0; it < 40; ++it) {
            Poly a = testsupport::random_poly(ring, 4, 4, rng);
            Poly b = testsupport::random_poly(ring, 4, 4, rng);
            Poly c = testsupport::random_poly(ring, 4, 4, rng);
            CHECK((a + b) + c == a + (b + c));
            CHECK(a + b == b + a);
            CHECK(a * b == b * a);
            CHECK((a * b) * c == a * (b * c));
            CHECK(a * (b + c) == a * b + a * c);
            CHECK((a + (-a)).is_zero());
        }
    }
}

TEST_CASE("frobenius_pow equals repeated squaring") {
    for (std::int64_t p : {2, 3, 5}) {
        auto ring = make_ring(p, {"x", "y", "z", "w"});
        std::mt19937 rng(7 + static_cast<unsigned>(p));
        for (int it = 0; it < 12; ++it) {
            Poly f = testsupport::random_poly(ring, 3, 4, rng);
            for (std::int64_t e = 0; e <= 2; ++e) {
                std::int64_t q = 1;
                for (std::int64_t i = 0; i < e; ++i) q *= p;
                CHECK(f.frobenius_pow(e) == f.pow(q));
            }
        }
    }
}

TEST_CASE("poly_in_bracket_max agrees with Groebner membership") {
    for (std::int64_t p : {2, 3}) {
        auto ring = make_ring(p, {"x", "y"});
        std::mt19937 rng(100 + static_cast<unsigned>(p));
        for (std::int64_t q : {p, p * p}) {
            std::vector<Poly> qgens = {P(ring, "x").pow(q), P(ring, "y").pow(q)};
            Ideal bracket(ring, qgens);
            for (int it = 0; it < 20; ++it) {
                Poly f = testsupport::random_poly(ring, 2 * q, 5, rng);
                CHECK(poly_in_bracket_max(f, q) == ideal_member(f, bracket));
            }
        }
    }
}

TEST_CASE("truncate_bracket is the reduction modulo the bracket ideal") {
    auto ring = make_ring(2, {"x", "y"});
    Poly f = P(ring, "x^2 + x*y + y^3");
    Poly t = truncate_bracket(f, 2);
    CHECK(t == P(ring, "x*y"));
    CHECK(truncate_bracket(f, 8) == f);
}
