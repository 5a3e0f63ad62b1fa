#include <doctest.h>

#include "moduli/descent.hpp"
#include "oracles.hpp"

using namespace moduli;

TEST_CASE("solve_beta worked values (checked against the scan oracle)") {
    struct Case {
        i64 g, r, d, s, t, e;
    };
    // the scan oracle re-derives each interior solution below
    const Case cases[] = {
        {2, 3, 1, 4, 1, -3},
        {2, 4, 2, 3, 1, -2},
        {3, 6, 4, 5, 3, -7},
        {2, 5, 3, 7, 4, -3},
        {2, 2, -1, 3, -2, -5},
    };
    for (const Case& c : cases) {
        BetaSolution sol = solve_beta(Genus(c.g), {c.r, c.d});
        CHECK(sol.s == c.s);
        CHECK(sol.t == c.t);
        CHECK(sol.e == c.e);
        oracles::BetaScan scan = oracles::scan_beta(c.g, c.r, c.d);
        CHECK(scan.hits_interior == 1);
        CHECK(scan.s == sol.s);
        CHECK(scan.t == sol.t);
        CHECK(scan.e == sol.e);
    }
}

TEST_CASE("solve_beta with h = r uses the s = 2 branch") {
    BetaSolution sol = solve_beta(Genus(2), {2, 0});
    CHECK(sol.s == 2);
    CHECK(sol.t == -1);
    CHECK(sol.e == -3);
    // t = (2d - r)/r in general
    BetaSolution sol2 = solve_beta(Genus(3), {3, 6});
    CHECK(sol2.s == 2);
    CHECK(sol2.t == 3);
    CHECK(sol2.e == -1);
    CHECK(euler_chi(sol2.beta(), {3, 6}, Genus(3)) == 3);
}

TEST_CASE("solve_beta uniqueness sweep and endpoint exclusion") {
    for (i64 g = 2; g <= 3; ++g) {
        for (i64 r = 1; r <= 8; ++r) {
            for (i64 d = -8; d <= 8; ++d) {
                i64 h = gcd_type({r, d});
                if (h == r) continue;
                oracles::BetaScan scan = oracles::scan_beta(g, r, d);
                CHECK(scan.hits_closed == 1);
                CHECK(scan.hits_interior == 1); // endpoints never solve
                BetaSolution sol = solve_beta(Genus(g), {r, d});
                CHECK(sol.s == scan.s);
                CHECK(sol.t == scan.t);
                CHECK(sol.e == scan.e);
                CHECK(euler_chi(sol.beta(), {r, d}, Genus(g)) == h);
            }
        }
    }
}

TEST_CASE("kernel_type componentwise values") {
    CHECK(kernel_type(1, {4, -3}, {3, 1}) == BundleType{1, -4});
    CHECK(kernel_type(2, {3, -2}, {4, 2}) == BundleType{2, -6});
    BetaSolution sol = solve_beta(Genus(2), {5, 3});
    CHECK(sol.beta() == BundleType{7, -3});
    CHECK(kernel_type(1, sol.beta(), {5, 3}) == BundleType{2, -6});
    CHECK_THROWS_AS(kernel_type(1, {1, 0}, {3, 1}), invariant_violation);
}

TEST_CASE("descent_step worked values") {
    Genus g2(2);

    DescentStep a = descent_step(g2, {3, 1});
    CHECK(a.beta == BundleType{4, -3});
    CHECK(a.alpha1 == BundleType{1, -4});
    CHECK(a.h == 1);
    CHECK(a.h1 == 1);
    CHECK(a.chi_a1_beta == 9);
    CHECK(a.l == 9);
    CHECK(a.fiber_dim == 8);

    DescentStep b = descent_step(g2, {4, 2});
    CHECK(b.alpha1 == BundleType{2, -6});
    CHECK(b.h1 == 2);
    CHECK(b.chi_a1_beta == 8);
    CHECK(b.l == 4);
    CHECK(b.fiber_dim == 12);

    DescentStep c = descent_step(g2, {5, 3});
    CHECK(c.alpha1 == BundleType{2, -6});
    CHECK(c.chi_a1_beta == 22);
    CHECK(c.l == 11);
    CHECK(c.fiber_dim == 21);

    CHECK_THROWS_AS(descent_step(g2, {2, 0}), invalid_input); // terminal
}

TEST_CASE("descent_chain worked values") {
    Genus g2(2);

    ReductionChain a = descent_chain(g2, {3, 1});
    REQUIRE(a.steps.size() == 1);
    CHECK(a.terminal == BundleType{1, -4});
    CHECK(a.terminal_twist == 4);

    ReductionChain b = descent_chain(g2, {5, 3});
    REQUIRE(b.steps.size() == 1);
    CHECK(b.steps[0].alpha == BundleType{5, 3});
    CHECK(b.terminal == BundleType{2, -6});
    CHECK(b.terminal_twist == 3);

    ReductionChain c = descent_chain(g2, {1, 7});
    CHECK(c.steps.empty());
    CHECK(c.terminal == BundleType{1, 7});
    CHECK(c.terminal_twist == -7);
}

TEST_CASE("chain invariants over a sweep") {
    for (i64 g = 2; g <= 3; ++g) {
        for (i64 r = 1; r <= 9; ++r) {
            for (i64 d = -9; d <= 9; ++d) {
                ReductionChain chain = descent_chain(Genus(g), {r, d});
                CHECK(static_cast<i64>(chain.steps.size()) <= r);
                i64 prev_rank = r;
                for (const DescentStep& st : chain.steps) {
                    CHECK(st.alpha.rank <= prev_rank);
                    CHECK(st.alpha1.rank < st.alpha.rank);
                    // dimension identity, divisibility, degree relation
                    i64 chi = euler_chi(st.alpha1, st.beta, Genus(g));
                    CHECK((st.alpha.rank * st.alpha.rank -
                           st.alpha1.rank * st.alpha1.rank) * (g - 1) ==
                          st.h * (chi - st.h));
                    CHECK(st.h1 % st.h == 0);
                    CHECK(chi % st.h1 == 0);
                    CHECK(st.alpha1.degree == st.h * st.beta_sol.e - st.alpha.degree);
                    prev_rank = st.alpha1.rank;
                }
                CHECK(chain.terminal.degree % chain.terminal.rank == 0);
                // the terminal rank is the last value of the gcd sequence
                i64 final_h = chain.steps.empty() ? chain.initial_h : chain.steps.back().h1;
                CHECK(chain.terminal.rank ==
                      (chain.steps.empty() ? r : chain.steps.back().alpha1.rank));
                CHECK(gcd_type(chain.terminal) == chain.terminal.rank);
                CHECK(final_h == chain.terminal.rank);
            }
        }
    }
}
