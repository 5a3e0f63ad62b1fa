#include <doctest.h>

#include "moduli/genericity.hpp"
#include "oracles.hpp"

using namespace moduli;

TEST_CASE("p0 worked values") {
    CHECK(p0({4, -3}, {3, 1}, Genus(2), 1) == 27);
    CHECK(p0({1, 0}, {1, 0}, Genus(2), 1) == 4);
    CHECK(p0({2, -1}, {3, 1}, Genus(2), 2) == 16);
    CHECK_THROWS_AS(p0({2, -1}, {3, 1}, Genus(2), 0), invalid_input);
}

TEST_CASE("p1 against the per-term oracle") {
    Genus g2(2);

    // surjective: F=(4,-3) -> E=(3,1), K=(1,-4), I=E, Q=0
    HirschConfig a = make_config(g2, {4, -3}, {3, 1}, 1, -4, 0);
    i64 a_expect = 1 - oracles::raw_chi(4, -3, 1, -4, 2) - 0 - oracles::raw_chi(3, 1, 3, 1, 2);
    CHECK(a_expect == 27); // = p0 for the sharp surjective count
    CHECK(p1(a) == a_expect);

    // injective: F=(2,-1) -> E=(3,1), K=0, I=F, Q=(1,2)
    HirschConfig b = make_config(g2, {2, -1}, {3, 1}, 0, 0, 0);
    i64 b_expect = 1 - 0 - oracles::raw_chi(1, 2, 3, 1, 2) - oracles::raw_chi(2, -1, 2, -1, 2);
    CHECK(b_expect == 13);
    CHECK(p1(b) == b_expect);

    // d_T = 0 and Q = 0 leaves 1 - chi(F,K) - chi(I,I)
    HirschConfig c = make_config(g2, {3, 2}, {2, 1}, 1, 1, 0);
    CHECK(c.Q().rank == 0);
    CHECK(c.Q().degree == 0);
    CHECK(p1(c) == 1 - euler_chi({3, 2}, {1, 1}, g2) - euler_chi({2, 1}, {2, 1}, g2));
}

TEST_CASE("ext upper bound") {
    Genus g2(2);
    // surjective and injective configurations bound ext by 0
    CHECK(ext_upper_bound(make_config(g2, {4, -3}, {3, 1}, 1, -4, 0)) == 0);
    CHECK(ext_upper_bound(make_config(g2, {2, -1}, {3, 1}, 0, 0, 0)) == 0);
    // mixed: K=(2,-4), Q=(1,0)
    HirschConfig m = make_config(g2, {4, -3}, {3, 1}, 2, -4, 0);
    CHECK(m.Q() == BundleType{1, 0});
    CHECK(ext_upper_bound(m) == -2);
}

TEST_CASE("necessary conditions") {
    Genus g2(2);
    HirschConfig a = make_config(g2, {4, -3}, {3, 1}, 1, -4, 0);
    CHECK(euler_chi(a.K(), a.I(), g2) == 10);
    CHECK(necessary_conditions(a));

    HirschConfig b = make_config(g2, {4, -3}, {3, 1}, 2, -4, 0);
    CHECK(euler_chi(b.Ip(), b.Qp(), g2) == -3);
    CHECK(!necessary_conditions(b));

    HirschConfig c = make_config(g2, {2, 0}, {2, 2}, 0, 0, 2);
    CHECK(necessary_conditions(c));
}

TEST_CASE("final upper bound, exact rational") {
    Genus g2(2);
    CHECK(final_upper_bound(make_config(g2, {2, -1}, {3, 1}, 0, 0, 0)) == Rational(0));
    // r_K=1, r_Q=1, d_T=0
    CHECK(final_upper_bound(make_config(g2, {2, 0}, {2, 1}, 1, 0, 0)) == Rational(-1));
    // r_K=1, r_I=2, r_E=3, r_Q=1, d_T=2: -1 - 2(1 + 3/2) = -6
    CHECK(final_upper_bound(make_config(g2, {3, 0}, {3, 5}, 1, 0, 2)) == Rational(-6));
}

TEST_CASE("check_implication and its precondition") {
    Genus g2(2);
    CHECK(check_implication(make_config(g2, {4, -3}, {3, 1}, 1, -4, 0)));
    CHECK(check_implication(make_config(g2, {2, -1}, {3, 1}, 0, 0, 0)));
    CHECK_THROWS_AS(check_implication(make_config(g2, {4, -3}, {3, 1}, 2, -4, 0)),
                    invalid_input);
}

TEST_CASE("config validation") {
    Genus g2(2);
    CHECK_THROWS_AS(make_config(g2, {2, 0}, {3, 0}, 2, 0, 0), invalid_input); // r_I = 0
    CHECK_THROWS_AS(make_config(g2, {2, 0}, {3, 0}, 0, 1, 0), invalid_input); // K=0 needs d_K=0
    CHECK_THROWS_AS(make_config(g2, {4, 0}, {2, 0}, 1, 0, 0), invalid_input); // r_Q < 0
    CHECK_THROWS_AS(make_config(g2, {2, 0}, {2, 0}, 0, 0, 1), invalid_input); // r_Q=0, d_T != d_Q
    CHECK_THROWS_AS(make_config(g2, {2, 0}, {3, 0}, 1, 0, -1), invalid_input);
}

TEST_CASE("enumeration finds the worked configurations") {
    Genus g2(2);

    Enumeration surj = enumerate_configs(g2, {4, -3}, {3, 1}, 2);
    bool found_surjective = false;
    for (const auto& [c, v] : surj.rows) {
        if (c.r_K == 1 && c.d_K == -4 && c.d_T == 0) {
            found_surjective = true;
            CHECK(v.classification == Classification::ConsistentGeneric);
            CHECK(v.passes_necessary);
        }
        if (c.r_K >= 1 && c.Q().rank >= 1 && v.passes_necessary)
            CHECK(v.classification == Classification::GenericallyImpossible);
    }
    CHECK(found_surjective);

    Enumeration inj = enumerate_configs(g2, {2, -1}, {3, 1}, 2);
    bool found_injective = false;
    for (const auto& [c, v] : inj.rows) {
        if (c.r_K == 0 && c.d_T == 0) {
            found_injective = true;
            CHECK(v.classification == Classification::ConsistentGeneric);
        }
    }
    CHECK(found_injective);

    Enumeration eq = enumerate_configs(g2, {2, 0}, {2, 2}, 2);
    bool found_torsion = false;
    for (const auto& [c, v] : eq.rows) {
        if (c.r_K == 0 && c.Q().rank == 0 && c.d_T == 2) {
            found_torsion = true;
            CHECK(v.classification == Classification::EqualRankTorsionAllowed);
        }
    }
    CHECK(found_torsion);

    // rank-1 to rank-1: only the K=0, torsion-or-zero cokernel configs
    Enumeration triv = enumerate_configs(g2, {1, 0}, {1, 0}, 2);
    for (const auto& [c, v] : triv.rows) {
        CHECK(c.r_K == 0);
        CHECK(c.Q().rank == 0);
    }
}

TEST_CASE("enumeration is deterministic across job counts") {
    Genus g2(2);
    Enumeration seq = enumerate_configs(g2, {6, -5}, {5, 3}, 4, 1);
    Enumeration par = enumerate_configs(g2, {6, -5}, {5, 3}, 4, 4);
    REQUIRE(seq.rows.size() == par.rows.size());
    for (std::size_t i = 0; i < seq.rows.size(); ++i) {
        CHECK(seq.rows[i].first.r_K == par.rows[i].first.r_K);
        CHECK(seq.rows[i].first.d_K == par.rows[i].first.d_K);
        CHECK(seq.rows[i].first.d_T == par.rows[i].first.d_T);
        CHECK(seq.rows[i].second.classification == par.rows[i].second.classification);
    }
    CHECK(seq.warnings == par.warnings);
}

TEST_CASE("enumeration invariants: bookkeeping, torsion identity, bound chain") {
    for (i64 g = 2; g <= 3; ++g) {
        for (i64 df = -4; df <= 4; ++df) {
            for (i64 de = -4; de <= 4; ++de) {
                Enumeration en = enumerate_configs(Genus(g), {4, df}, {3, de}, 3);
                for (const auto& [c, v] : en.rows) {
                    // rank and degree bookkeeping through the three sequences
                    CHECK(c.K().rank + c.I().rank == c.F.rank);
                    CHECK(c.K().degree + c.I().degree == c.F.degree);
                    CHECK(c.I().rank + c.Q().rank == c.E.rank);
                    CHECK(c.I().degree + c.Q().degree == c.E.degree);
                    CHECK(c.Ip().rank + c.Qp().rank == c.E.rank);
                    CHECK(c.Ip().degree + c.Qp().degree == c.E.degree);
                    // torsion identity chi(Q',I') = chi(Q,I) + r_E d_T
                    CHECK(euler_chi(c.Qp(), c.Ip(), c.g) ==
                          euler_chi(c.Q(), c.I(), c.g) + c.E.rank * c.d_T);
                    // classification invariant
                    CHECK((v.classification == Classification::GenericallyImpossible) ==
                          (v.passes_necessary && v.final_upper < Rational(0)));
                    if (v.classification == Classification::EqualRankTorsionAllowed)
                        CHECK(c.E.rank == c.F.rank);
                    if (v.passes_necessary) {
                        CHECK(check_implication(c));
                        // ext bound below the final bound, exactly
                        CHECK(Rational(v.ext_upper) <= v.final_upper);
                    }
                }
            }
        }
    }
}
