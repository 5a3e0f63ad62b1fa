#pragma once

// Descent on bundle types.
//
// For a type alpha = (r, d) with h = gcd(r, d) there is a unique auxiliary
// type beta = (s, e) with chi(beta, alpha) = h and s in the range
// (r/h, 2r/h) when h < r, or s = 2 when h = r.  Sending a general bundle E
// to the kernel of the evaluation Hom(F, E) (x) F -> E (F a fixed general
// bundle of type beta) drops the type to alpha1 = h*beta - alpha of strictly
// smaller rank, and iterating reaches a terminal type whose rank divides its
// degree.  This header computes the solution, one step, and the full chain,
// checking every identity eagerly.

#include <string>
#include <vector>

#include "moduli/core.hpp"

namespace moduli {

struct BetaSolution {
    i64 s = 0;
    i64 t = 0;
    i64 e = 0; // e = t - (g-1) s

    BundleType beta() const { return BundleType{s, e}; }

    friend bool operator==(const BetaSolution&, const BetaSolution&) = default;
};

struct DescentStep {
    BundleType alpha;
    i64 h = 0;
    BetaSolution beta_sol;
    BundleType beta;
    BundleType alpha1; // h*beta - alpha
    i64 h1 = 0;        // gcd of alpha1
    i64 chi_a1_beta = 0;
    i64 l = 0;           // chi_a1_beta / h1
    i64 fiber_dim = 0;   // h * (chi_a1_beta - h)

    friend bool operator==(const DescentStep&, const DescentStep&) = default;
};

struct ReductionChain {
    Genus genus;
    BundleType initial;
    i64 initial_h = 0;
    i64 initial_dim = 0;
    std::vector<DescentStep> steps;
    BundleType terminal;    // rank divides degree
    i64 terminal_twist = 0; // -degree/rank, the line-bundle twist reaching degree 0

    friend bool operator==(const ReductionChain&, const ReductionChain&) = default;
};

namespace detail {

// Bezout pair for a*x + b*y = gcd(|a|, |b|); plain iterative Euclid.
struct Bezout {
    i64 g, x, y;
};

inline Bezout ext_gcd(i64 a, i64 b) {
    i64 r0 = a, r1 = b;
    i64 x0 = 1, x1 = 0;
    i64 y0 = 0, y1 = 1;
    while (r1 != 0) {
        i64 q = r0 / r1;
        i64 r2 = checked::sub(r0, checked::mul(q, r1));
        i64 x2 = checked::sub(x0, checked::mul(q, x1));
        i64 y2 = checked::sub(y0, checked::mul(q, y1));
        r0 = r1; r1 = r2;
        x0 = x1; x1 = x2;
        y0 = y1; y1 = y2;
    }
    if (r0 < 0) { r0 = -r0; x0 = checked::neg(x0); y0 = checked::neg(y0); }
    return Bezout{r0, x0, y0};
}

} // namespace detail

// Unique (s, t, e) with s*d - t*r = h, e = t - (g-1)*s and s in the stated
// range.  The solution set is (s0, t0) + k*(r/h, d/h); one shift lands s in
// (r/h, 2r/h), and both endpoints are excluded since s*d - t*r at s = r/h is
// a multiple of r while h < r.
inline BetaSolution solve_beta(Genus g, BundleType alpha) {
    require_type(alpha);
    const i64 r = alpha.rank;
    const i64 d = alpha.degree;
    const i64 h = gcd_type(alpha);

    i64 s = 0, t = 0;
    if (h == r) {
        // r | d; the range collapses to s = 2 and t = (2d - r)/r.
        s = 2;
        t = checked::sub(checked::mul(2, d) / r, 1);
    } else {
        // x*d + y*r = h, so (s0, t0) = (x, -y)
        detail::Bezout bz = detail::ext_gcd(d, r);
        if (bz.g != h) throw invariant_violation("solve_beta: gcd mismatch in extended euclid");
        i64 s0 = bz.x;
        const i64 rh = r / h;
        // shift s0 into [rh + 1, 2*rh]
        i64 k = detail::ceil_div(checked::sub(checked::add(rh, 1), s0), rh);
        s = checked::add(s0, checked::mul(k, rh));
        if (!(s > rh && s < checked::mul(2, rh)))
            throw invariant_violation("solve_beta: normalized s outside (r/h, 2r/h) for rank " +
                                      std::to_string(r) + " degree " + std::to_string(d));
        i64 sd_minus_h = checked::sub(checked::mul(s, d), h);
        if (sd_minus_h % r != 0)
            throw invariant_violation("solve_beta: s*d - h not divisible by r");
        t = sd_minus_h / r;
    }

    BetaSolution sol;
    sol.s = s;
    sol.t = t;
    sol.e = checked::sub(t, checked::mul(g.gm1(), s));
    if (euler_chi(sol.beta(), alpha, g) != h)
        throw invariant_violation("solve_beta: chi(beta, alpha) != h");
    return sol;
}

// alpha1 = h*beta - alpha, the type of the kernel of the evaluation map.
inline BundleType kernel_type(i64 h, BundleType beta, BundleType alpha) {
    BundleType k{checked::sub(checked::mul(h, beta.rank), alpha.rank),
                 checked::sub(checked::mul(h, beta.degree), alpha.degree)};
    if (k.rank < 1)
        throw invariant_violation("kernel_type: rank " + std::to_string(k.rank) + " < 1");
    return k;
}

inline DescentStep descent_step(Genus g, BundleType alpha) {
    require_type(alpha);
    const i64 h = gcd_type(alpha);
    if (h == alpha.rank)
        throw invalid_input("descent_step: rank divides degree, type is terminal");

    DescentStep st;
    st.alpha = alpha;
    st.h = h;
    st.beta_sol = solve_beta(g, alpha);
    st.beta = st.beta_sol.beta();
    st.alpha1 = kernel_type(h, st.beta, alpha);
    st.h1 = gcd_type(st.alpha1);
    st.chi_a1_beta = euler_chi(st.alpha1, st.beta, g);
    st.fiber_dim = checked::mul(h, checked::sub(st.chi_a1_beta, h));

    if (st.alpha1.rank >= alpha.rank)
        throw invariant_violation("descent_step: rank did not drop (r1 >= r)");
    if (st.h1 % h != 0)
        throw invariant_violation("descent_step: h does not divide h1");
    if (st.alpha1.degree != checked::sub(checked::mul(h, st.beta_sol.e), alpha.degree))
        throw invariant_violation("descent_step: degree relation d1 = h*e - d failed");
    if (st.chi_a1_beta % st.h1 != 0)
        throw invariant_violation("descent_step: h1 does not divide chi(alpha1, beta)");
    st.l = st.chi_a1_beta / st.h1;

    // the descent-map dimension identity (r^2 - r1^2)(g-1) = h*(chi - h)
    i64 lhs = checked::mul(checked::sub(checked::mul(alpha.rank, alpha.rank),
                                        checked::mul(st.alpha1.rank, st.alpha1.rank)),
                           g.gm1());
    if (lhs != st.fiber_dim)
        throw invariant_violation(
            "descent_step: dimension identity (r^2 - r1^2)(g-1) = h(chi - h) failed");
    return st;
}

inline ReductionChain descent_chain(Genus g, BundleType alpha) {
    require_type(alpha);
    ReductionChain chain{g, alpha, gcd_type(alpha), moduli_dim(g, alpha), {}, alpha, 0};

    BundleType cur = alpha;
    const i64 bound = alpha.rank; // ranks strictly decrease, so this cannot bind
    for (i64 i = 0; cur.degree % cur.rank != 0; ++i) {
        if (i >= bound) throw invariant_violation("descent_chain: iteration bound exceeded");
        DescentStep st = descent_step(g, cur);
        cur = st.alpha1;
        chain.steps.push_back(std::move(st));
    }
    chain.terminal = cur;
    chain.terminal_twist = checked::neg(cur.degree / cur.rank);
    return chain;
}

} // namespace moduli
