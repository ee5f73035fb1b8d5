#include <catch2/catch_amalgamated.hpp>

#include <random>

#include "charp/charp.hpp"
#include "oracles.hpp"
#include "support.hpp"

using namespace charp;
using testsupport::P;
using testsupport::ideal_of;

TEST_CASE("base-p digits") {
    auto d = FrobeniusDigits::of(11, 2);
    CHECK(d.digits == std::vector<std::int64_t>({1, 1, 0, 1}));
    CHECK(d.reconstruct() == 11);
    CHECK(FrobeniusDigits::of(0, 3).digits.empty());
    auto e = FrobeniusDigits::of(343 + 3 * 7 + 5, 7);
    CHECK(e.digits == std::vector<std::int64_t>({5, 3, 0, 1}));
    for (auto k : e.digits) CHECK((k >= 0 && k <= 6));
    CHECK(e.reconstruct() == 343 + 3 * 7 + 5);
    CHECK_THROWS_AS(FrobeniusDigits::of(-1, 2), input_error);
}

TEST_CASE("bracket_power spec examples") {
    auto r2 = make_ring(2, {"x", "y"});
    CHECK(ideal_equal(bracket_power(ideal_of(r2, {"x", "y"}), 1), ideal_of(r2, {"x^2", "y^2"})));
    auto r3 = make_ring(3, {"x", "y"});
    CHECK(ideal_equal(bracket_power(ideal_of(r3, {"x + y"}), 1), ideal_of(r3, {"x^3 + y^3"})));
    CHECK(ideal_equal(bracket_power(Ideal::unit(r2), 3), Ideal::unit(r2)));
}

TEST_CASE("bracket_power agrees with elementwise samples") {
    // the generator-wise construction must contain f^q for arbitrary f in I
    auto ring = make_ring(3, {"x", "y"});
    std::mt19937 rng(4);
    Ideal I = ideal_of(ring, {"x^2 + y", "x*y"});
    Ideal B = bracket_power(I, 1);
    for (int it = 0; it < 6; ++it) {
        Poly a = testsupport::random_poly(ring, 2, 3, rng);
        Poly b = testsupport::random_poly(ring, 2, 3, rng);
        Poly f = a * I.gens()[0] + b * I.gens()[1];
        CHECK(ideal_member(f.frobenius_pow(1), B));
    }
}

TEST_CASE("frobenius_root spec examples") {
    auto r2 = make_ring(2, {"x", "y"});
    CHECK(ideal_equal(frobenius_root(ideal_of(r2, {"x^3*y^5"}), 1), ideal_of(r2, {"x*y^2"})));
    CHECK(ideal_equal(frobenius_root(ideal_of(r2, {"x^2 + y^2"}), 1), ideal_of(r2, {"x + y"})));
    CHECK(ideal_equal(frobenius_root(ideal_of(r2, {"x"}), 1), Ideal::unit(r2)));
    CHECK(ideal_equal(frobenius_root(ideal_of(r2, {"x"}), 0), ideal_of(r2, {"x"})));
}

TEST_CASE("frobenius_root is minimal against the exhaustive oracle") {
    // small slice of the acceptance sweep: random staircases, deg <= 6
    auto ring = make_ring(2, {"x", "y"});
    std::mt19937 rng(2024);
    std::vector<oracles::Staircase> sample;
    oracles::for_each_monomial_ideal(6, [&](const oracles::Staircase& s) {
        if (rng() % 37 == 0) sample.push_back(s);
    });
    REQUIRE(sample.size() > 10);
    for (const auto& s : sample) {
        for (std::int64_t q : {2, 4}) {
            std::int64_t e = q == 2 ? 1 : 2;
            Ideal I = oracles::staircase_ideal(ring, s);
            auto impl = oracles::staircase_of(frobenius_root(I, e));
            REQUIRE(impl.has_value());
            auto want = oracles::brute_min_root(s, q, 6);
            REQUIRE(want.has_value());
            CHECK(oracles::staircase_equal(*impl, *want));
        }
    }
}

TEST_CASE("root/bracket adjunction on random ideals") {
    for (std::int64_t p : {2, 3}) {
        auto ring = make_ring(p, {"x", "y"});
        std::mt19937 rng(9 + static_cast<unsigned>(p));
        for (int it = 0; it < 8; ++it) {
            Ideal I = testsupport::random_ideal_in_m(ring, 2, 4, 3, rng);
            for (std::int64_t e : {1, 2}) {
                Ideal root = frobenius_root(I, e);
                CHECK(ideal_contains(bracket_power(root, e), I)); // I inside root^[q]
                CHECK(ideal_equal(frobenius_root(bracket_power(I, e), e), I));
            }
        }
    }
}

TEST_CASE("generalized_power spec examples") {
    auto r2 = make_ring(2, {"x", "y"});
    Ideal I = ideal_of(r2, {"x", "y"});
    CHECK(ideal_equal(generalized_power(I, 3),
                      ideal_of(r2, {"x^3", "x^2*y", "x*y^2", "y^3"})));
    CHECK(ideal_equal(generalized_power(I, 2), bracket_power(I, 1))); // k = p^e
    CHECK(ideal_equal(generalized_power(I, 0), Ideal::unit(r2)));
    auto r5 = make_ring(5, {"x", "y"});
    Ideal J = ideal_of(r5, {"x + y", "x*y"});
    for (std::int64_t k = 0; k < 5; ++k) // k < p: ordinary power
        CHECK(ideal_equal(generalized_power(J, k), ideal_power(J, k)));
}

TEST_CASE("generalized_power matches the naive digit expansion") {
    for (std::int64_t p : {2, 3}) {
        auto ring = make_ring(p, {"x", "y"});
        std::mt19937 rng(40 + static_cast<unsigned>(p));
        for (int it = 0; it < 6; ++it) {
            Ideal I = testsupport::random_ideal_in_m(ring, 2, 3, 2, rng);
            for (std::int64_t k = 0; k <= p * p; ++k) {
                Ideal got = generalized_power(I, k);
                std::vector<Poly> naive = oracles::naive_generalized_power_gens(I, k);
                Ideal want(ring, interreduce_generators(naive, ring));
                CHECK(ideal_equal(got, want));
            }
        }
    }
}

TEST_CASE("rational_power spec examples") {
    auto r2 = make_ring(2, {"x", "y"});
    CHECK(ideal_equal(rational_power(ideal_of(r2, {"x"}), 2, 1), ideal_of(r2, {"x"})));
    CHECK(ideal_equal(rational_power(ideal_of(r2, {"x", "y"}), 3, 1), ideal_of(r2, {"x", "y"})));
    CHECK(ideal_equal(rational_power(ideal_of(r2, {"x"}), 1, 1), Ideal::unit(r2)));
}

TEST_CASE("real_power spec examples") {
    auto r2 = make_ring(2, {"x", "y"});
    Ideal I = ideal_of(r2, {"x^2 + y^3", "x*y"});
    RealPowerRequest one{Rat(1), 8, 2};
    auto res = real_power(I, one);
    CHECK(res.certified);
    CHECK(ideal_equal(res.value, I));

    RealPowerRequest half{Rat(1, 2), 8, 2};
    auto rx = real_power(ideal_of(r2, {"x"}), half);
    CHECK(rx.certified);
    CHECK(ideal_equal(rx.value, Ideal::unit(r2)));

    auto runit = real_power(Ideal::unit(r2), RealPowerRequest{Rat(7, 3), 8, 2});
    CHECK(runit.certified);
    CHECK(ideal_equal(runit.value, Ideal::unit(r2)));
}

TEST_CASE("real_power agrees with rational_power at dyadic exponents") {
    auto r2 = make_ring(2, {"x", "y"});
    std::mt19937 rng(5);
    for (int it = 0; it < 5; ++it) {
        Ideal I = testsupport::random_ideal_in_m(r2, 2, 3, 2, rng);
        for (auto [k, e] : std::vector<std::pair<std::int64_t, std::int64_t>>{
                 {1, 1}, {3, 2}, {5, 2}}) {
            auto res = real_power(I, RealPowerRequest{Rat(k, std::int64_t{1} << e), 8, 2});
            if (res.certified) CHECK(ideal_equal(res.value, rational_power(I, k, e)));
        }
    }
}

TEST_CASE("monotonicity in the ideal") {
    for (std::int64_t p : {2, 3}) {
        auto ring = make_ring(p, {"x", "y"});
        std::mt19937 rng(60 + static_cast<unsigned>(p));
        for (int it = 0; it < 6; ++it) {
            Ideal I = testsupport::random_ideal_in_m(ring, 2, 3, 2, rng);
            Ideal J = ideal_sum(I, testsupport::random_ideal_in_m(ring, 1, 2, 2, rng));
            for (std::int64_t k : {2, 3, 5}) {
                CHECK(ideal_contains(generalized_power(J, k), generalized_power(I, k)));
                CHECK(ideal_contains(ideal_power(I, k), generalized_power(I, k)));
            }
            CHECK(ideal_contains(frobenius_root(J, 1), frobenius_root(I, 1)));
        }
    }
}

TEST_CASE("principal-ideal collapse") {
    for (std::int64_t p : {2, 3, 5}) {
        auto ring = make_ring(p, {"x", "y"});
        std::mt19937 rng(80 + static_cast<unsigned>(p));
        for (int it = 0; it < 5; ++it) {
            Poly f = testsupport::random_poly_in_m(ring, 3, 3, rng);
            Ideal I(ring, {f});
            std::int64_t q = p * p;
            for (std::int64_t k = 1; k <= q - 1; ++k)
                CHECK(ideal_equal(generalized_power(I, k), Ideal(ring, {f.pow(k)})));
        }
    }
}

TEST_CASE("nu_bracket spec examples") {
    auto r2 = make_ring(2, {"x", "y"});
    Ideal m2 = origin_maximal_ideal(r2);
    for (std::int64_t e : {1, 2, 3}) {
        std::int64_t q = std::int64_t{1} << e;
        CHECK(nu_bracket(ideal_of(r2, {"x"}), e, m2).nu == q - 1);
    }
    auto r3 = make_ring(3, {"x", "y"});
    Ideal m3 = origin_maximal_ideal(r3);
    CHECK(nu_bracket(ideal_of(r3, {"x"}), 2, m3).nu == 8);

    CHECK(nu_bracket(ideal_of(r2, {"x", "y"}), 1, m2).nu == 1);
    CHECK(nu_bracket(ideal_of(r2, {"x", "y"}), 2, m2).nu ==
          oracles::naive_nu_bracket(ideal_of(r2, {"x", "y"}), 2));

    NuValue unit = nu_bracket(Ideal::unit(r2), 2, m2);
    CHECK(unit.capped);
    CHECK(unit.nu == 3);
}

TEST_CASE("nu_bracket agrees with the naive oracle on random ideals") {
    for (std::int64_t p : {2, 3}) {
        auto ring = make_ring(p, {"x", "y"});
        Ideal m = origin_maximal_ideal(ring);
        std::mt19937 rng(300 + static_cast<unsigned>(p));
        for (int it = 0; it < 6; ++it) {
            Ideal I = testsupport::random_ideal_in_m(ring, 2, 3, 2, rng);
            for (std::int64_t e : {1, 2}) {
                std::int64_t want = oracles::naive_nu_bracket(I, e);
                CHECK(nu_bracket(I, e, m).nu == want);
                CHECK(nu_bracket(I, e, m, default_budgets(), NuSearch::Fast).nu == want);
                auto mono = check_bracket_monotone(I, e, m);
                CHECK(mono.nu.nu == want);
            }
        }
    }
}

TEST_CASE("level cap is enforced") {
    auto ring = make_ring(5, {"x", "y"});
    Ideal I = ideal_of(ring, {"x"});
    CHECK_THROWS_AS(bracket_power(I, 10), input_error); // 5^10 > 2^20
    CHECK_THROWS_AS(q_power(2, 21), input_error);
    CHECK(q_power(2, 20) == std::int64_t{1} << 20);
}
