#include <doctest.h>

#include <limits>
#include <random>

#include "moduli/core.hpp"
#include "oracles.hpp"

using namespace moduli;

TEST_CASE("euler_chi worked values") {
    Genus g2(2), g3(3);
    CHECK(euler_chi({4, -3}, {3, 1}, g2) == 1);
    CHECK(euler_chi({2, 5}, {2, 5}, g3) == -8);
    CHECK(euler_chi({3, -2}, {4, 2}, g2) == 2);
}

TEST_CASE("euler_chi matches the raw formula on random pairs") {
    std::mt19937_64 rng(7);
    std::uniform_int_distribution<i64> coef(-1000, 1000);
    std::uniform_int_distribution<i64> gd(2, 40);
    for (int i = 0; i < 2000; ++i) {
        BundleType a{coef(rng), coef(rng)}, b{coef(rng), coef(rng)};
        i64 g = gd(rng);
        CHECK(euler_chi(a, b, Genus(g)) ==
              oracles::raw_chi(a.rank, a.degree, b.rank, b.degree, g));
    }
}

TEST_CASE("euler_chi bilinearity and antisymmetric defect") {
    std::mt19937_64 rng(11);
    std::uniform_int_distribution<i64> coef(-1000, 1000);
    std::uniform_int_distribution<i64> gd(2, 40);
    for (int i = 0; i < 2000; ++i) {
        Genus g(gd(rng));
        BundleType a{coef(rng), coef(rng)}, b{coef(rng), coef(rng)}, c{coef(rng), coef(rng)};
        BundleType ab{a.rank + b.rank, a.degree + b.degree};
        BundleType bc{b.rank + c.rank, b.degree + c.degree};
        CHECK(euler_chi(ab, c, g) == euler_chi(a, c, g) + euler_chi(b, c, g));
        CHECK(euler_chi(a, bc, g) == euler_chi(a, b, g) + euler_chi(a, c, g));
        CHECK(euler_chi(a, b, g) + euler_chi(b, a, g) == -2 * a.rank * b.rank * g.gm1());
        CHECK(euler_chi(a, a, g) == -a.rank * a.rank * g.gm1());
    }
}

TEST_CASE("moduli_dim worked values and Jacobian case") {
    CHECK(moduli_dim(Genus(2), {3, 1}) == 10);
    CHECK(moduli_dim(Genus(2), {4, 2}) == 17);
    for (i64 g = 2; g <= 12; ++g)
        for (i64 d = -3; d <= 3; ++d) CHECK(moduli_dim(Genus(g), {1, d}) == g);
}

TEST_CASE("moduli_dim strictly increasing in rank") {
    for (i64 g = 2; g <= 5; ++g)
        for (i64 r = 1; r < 40; ++r)
            CHECK(moduli_dim(Genus(g), {r, 5}) < moduli_dim(Genus(g), {r + 1, 5}));
}

TEST_CASE("gcd_type conventions") {
    CHECK(gcd_type({5, 3}) == 1);
    CHECK(gcd_type({4, 2}) == 2);
    CHECK(gcd_type({6, 0}) == 6);
    CHECK(gcd_type({4, -2}) == 2);
    CHECK(gcd_type({12, -18}) == 6);
}

TEST_CASE("descriptor carries h and dim") {
    ModuliDescriptor m = make_descriptor(Genus(2), {4, 2});
    CHECK(m.h == 2);
    CHECK(m.dim == 17);
    CHECK(moduli_dim(m) == 17);
}

TEST_CASE("input validation") {
    CHECK_THROWS_AS(Genus(1), invalid_input);
    CHECK_THROWS_AS(Genus(-5), invalid_input);
    CHECK_NOTHROW(Genus(2));
    CHECK_THROWS_AS(gcd_type({0, 3}), invalid_input);
    CHECK_THROWS_AS(moduli_dim(Genus(2), {-1, 3}), invalid_input);
}

TEST_CASE("overflow is detected, never wrapped") {
    const i64 big = std::numeric_limits<i64>::max() / 2;
    CHECK_THROWS_AS(euler_chi({big, 1}, {big, 1}, Genus(2)), arithmetic_overflow);
    CHECK_THROWS_AS(moduli_dim(Genus(2), {big, 0}), arithmetic_overflow);
    CHECK_THROWS_AS(checked::add(big, big + 2), arithmetic_overflow);
    CHECK_THROWS_AS(checked::mul(big, 3), arithmetic_overflow);
    CHECK(checked::mul(big, 2) == big * 2);
}

TEST_CASE("rational arithmetic is exact and normalized") {
    Rational a(1, 2), b(2, 4);
    CHECK(a == b);
    CHECK((Rational(1, 3) + Rational(1, 6)) == Rational(1, 2));
    CHECK((Rational(-3, 2) * Rational(4, 9)) == Rational(-2, 3));
    CHECK(Rational(5, -10) == Rational(-1, 2));
    CHECK(Rational(7, 1).str() == "7");
    CHECK(Rational(-3, 2).str() == "-3/2");
    CHECK(Rational(1, 3) < Rational(1, 2));
    CHECK(Rational(-1, 2) < Rational(-1, 3));
    CHECK_THROWS_AS(Rational(1, 0), invalid_input);
    CHECK_THROWS_AS(Rational(1, 2) / Rational(0), invalid_input);
}
