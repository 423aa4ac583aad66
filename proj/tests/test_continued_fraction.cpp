#include <doctest.h>

#include <random>
#include <stdexcept>

#include "shorcf/continued_fraction.hpp"
#include "theorem_suite.hpp"

using namespace shorcf;

TEST_CASE("euclidean expansion of worked examples") {
    CHECK(cf_from_rational(Rational(67, 47)) == ContinuedFraction{1, 2, 2, 1, 6});
    CHECK(cf_from_rational(Rational(43, 19)) == ContinuedFraction{2, 3, 1, 4});
    CHECK(cf_from_rational(Rational(5, 1)) == ContinuedFraction{5});
    CHECK(cf_from_rational(Rational(-7, 2)) == ContinuedFraction{-4, 2});
    CHECK(cf_to_rational(ContinuedFraction{-4, 2}) == Rational(-7, 2));
}

TEST_CASE("evaluation folds back exactly") {
    CHECK(cf_to_rational(ContinuedFraction{2, 3, 1, 4}) == Rational(43, 19));
    CHECK(cf_to_rational(ContinuedFraction{7}) == Rational(7));
    CHECK(cf_to_rational(ContinuedFraction{-3}) == Rational(-3));
    CHECK(cf_to_rational(ContinuedFraction{1, 2, 2, 1, 6}) == Rational(67, 47));
}

TEST_CASE("canonicalize folds a trailing 1") {
    CHECK(canonicalize(ContinuedFraction{2, 3, 1, 3, 1}) == ContinuedFraction{2, 3, 1, 4});
    CHECK(canonicalize(ContinuedFraction{2, 3, 1, 4}) == ContinuedFraction{2, 3, 1, 4});
    CHECK(canonicalize(ContinuedFraction{0, 1}) == ContinuedFraction{1});
    CHECK(canonicalize(ContinuedFraction{3, 1}) == ContinuedFraction{4});
    // value preserved
    const ContinuedFraction cf{5, 4, 2, 1};
    CHECK(cf_to_rational(canonicalize(cf)) == cf_to_rational(cf));
    CHECK(canonicalize(cf).is_canonical());
}

TEST_CASE("coefficient lists violating the regular form are rejected") {
    CHECK_THROWS_AS(ContinuedFraction({2, 0, 1}), std::invalid_argument);
    CHECK_THROWS_AS(ContinuedFraction({2, -3}), std::invalid_argument);
    CHECK_THROWS_AS(ContinuedFraction(std::vector<Integer>{}), std::invalid_argument);
    CHECK_NOTHROW(ContinuedFraction({-2, 1, 1}));
}

TEST_CASE("convergent table matches hand recursion") {
    const ConvergentTable t(ContinuedFraction{2, 3, 1, 4});
    REQUIRE(t.order() == 3);
    CHECK(t.p(0) == 2);  CHECK(t.q(0) == 1);
    CHECK(t.p(1) == 7);  CHECK(t.q(1) == 3);
    CHECK(t.p(2) == 9);  CHECK(t.q(2) == 4);
    CHECK(t.p(3) == 43); CHECK(t.q(3) == 19);
    CHECK(t.value(2) == Rational(9, 4));

    // virtual entry of the recursion
    CHECK(t.p(-1) == 1);
    CHECK(t.q(-1) == 0);
    CHECK_THROWS_AS(t.value(-1), std::domain_error);
    CHECK_THROWS_AS(t.p(4), std::out_of_range);

    const ConvergentTable single(ContinuedFraction{-6});
    CHECK(single.order() == 0);
    CHECK(single.p(0) == -6);
    CHECK(single.q(0) == 1);

    const ConvergentTable fig1(ContinuedFraction{1, 2, 2, 1, 6});
    CHECK(fig1.p(4) == 67);
    CHECK(fig1.q(4) == 47);
}

TEST_CASE("semiconvergents, including the virtual index") {
    const ConvergentTable t(ContinuedFraction{2, 3, 1, 4});
    CHECK(semiconvergent(t, -1, 1) == Rational(3));
    CHECK(semiconvergent(t, 0, 1) == Rational(9, 4));   // t = a2 recovers x_2
    CHECK(semiconvergent(t, 1, 4) == Rational(43, 19)); // t = a3 recovers x_3
    CHECK_THROWS_AS(semiconvergent(t, 3, 1), std::out_of_range);
    CHECK_THROWS_AS(semiconvergent(t, -2, 1), std::out_of_range);
    CHECK_THROWS_AS(semiconvergent(t, 0, 0), std::invalid_argument);
}

TEST_CASE("enumerated semiconvergents cover the a0 + 1/t family") {
    const auto semis = enumerate_semiconvergents(ContinuedFraction{0, 5});
    REQUIRE(semis.size() == 5);
    for (long t = 1; t <= 5; ++t) {
        CHECK(semis[static_cast<std::size_t>(t - 1)] == Rational(1, t));
    }
}

TEST_CASE("truncated expansion of exact reals") {
    CHECK(cf_expand_real(Rational(577, 408), 6) == ContinuedFraction{1, 2, 2, 2, 2, 2});
    CHECK(cf_expand_real(Rational(43, 19), 2) == ContinuedFraction{2, 3});
    CHECK(cf_expand_real(Rational(1, 5), 10) == ContinuedFraction{0, 5});
    CHECK(cf_expand_real(Rational(-7, 2), 10) == ContinuedFraction{-4, 2});
    CHECK_THROWS_AS(cf_expand_real(Rational(1, 2), 0), std::invalid_argument);

    // agrees with the euclidean expansion when max_terms is generous
    std::mt19937_64 rng(7);
    for (int i = 0; i < 200; ++i) {
        const long p = static_cast<long>(rng() % 400) - 200;
        const long q = static_cast<long>(rng() % 200) + 1;
        const Rational r(p, q);
        CHECK(cf_expand_real(r, 64) == cf_from_rational(r));
    }
}

TEST_CASE("round trip over small fractions, canonical output") {
    for (long q = 1; q <= 200; ++q) {
        for (long p = -200; p <= 200; ++p) {
            const Rational r(p, q);
            const ContinuedFraction cf = cf_from_rational(r);
            CHECK(cf.is_canonical());
            CHECK(cf_to_rational(cf) == r);
        }
    }
}

TEST_CASE("convergent theorems hold on random canonical fractions") {
    std::mt19937_64 rng(20260809);
    for (int i = 0; i < 2000; ++i) {
        const auto cf = shorcf::testing::random_canonical_cf(rng);
        const auto violation = shorcf::testing::check_cf_theorems(cf);
        if (violation) {
            FAIL_CHECK(*violation);
            break;
        }
    }
}

TEST_CASE("mediant stays strictly between random pairs") {
    std::mt19937_64 rng(99);
    for (int i = 0; i < 500; ++i) {
        const Rational a(static_cast<long>(rng() % 200) - 100, static_cast<long>(rng() % 99) + 1);
        const Rational b(static_cast<long>(rng() % 200) - 100, static_cast<long>(rng() % 99) + 1);
        if (a == b) continue;
        const Rational lo = a < b ? a : b;
        const Rational hi = a < b ? b : a;
        const Rational m = mediant(lo, hi);
        CHECK(lo < m);
        CHECK(m < hi);
    }
}

TEST_CASE("formatting") {
    CHECK(ContinuedFraction{1, 2, 2, 1, 6}.str() == "[1; 2, 2, 1, 6]");
    CHECK(ContinuedFraction{5}.str() == "[5]");
    CHECK(ContinuedFraction{-4, 2}.str() == "[-4; 2]");
}
