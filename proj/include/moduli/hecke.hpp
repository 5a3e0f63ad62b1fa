#pragma once

// Hecke correspondence bookkeeping.
//
// P(h1, 0, h) parametrizes pairs E2 c E1 with E1 of type (h1, 0) and
// quotient a length-h torsion sheaf at a fixed point.  Its two projections
// send the pair to [E1] in M(h1, 0) and to [E2] in M(h1, -h); both are
// Grassmannian bundles Gr(h, k^{h1}) with fiber dimension h(h1 - h).  Only
// the numerics are modeled: no parabolic weights, no marked point.

#include <utility>

#include "moduli/core.hpp"

namespace moduli {

struct HeckeDescriptor {
    Genus genus;
    i64 h1 = 0;
    i64 h = 0;
    i64 m = 0; // gcd(h1, h); equals h when h | h1
    ModuliDescriptor theta1_target; // M(h1, 0)
    ModuliDescriptor theta2_target; // M(h1, -h)
    i64 theta_fiber_dim = 0;        // h (h1 - h), same for both projections
    i64 parmod_dim = 0;             // h1^2 (g-1) + 1 + h (h1 - h)
};

inline HeckeDescriptor make_hecke(Genus g, i64 h1, i64 h) {
    if (h1 < 1 || h < 1)
        throw invalid_input("make_hecke: h1 and h must be positive");
    if (h > h1)
        throw invalid_input("make_hecke: need h <= h1 (got h=" + std::to_string(h) +
                            ", h1=" + std::to_string(h1) + ")");

    HeckeDescriptor d{g,
                      h1,
                      h,
                      std::gcd(h1, h),
                      make_descriptor(g, BundleType{h1, 0}),
                      make_descriptor(g, BundleType{h1, checked::neg(h)}),
                      checked::mul(h, checked::sub(h1, h)),
                      0};
    d.parmod_dim = checked::add(d.theta1_target.dim, d.theta_fiber_dim);
    if (d.theta1_target.dim != d.theta2_target.dim)
        throw invariant_violation("make_hecke: projection targets have unequal dimension");
    return d;
}

struct BrauerTarget {
    BundleType type;
    i64 rep_algebra_dim = 0; // gcd(rank, degree)^2
};

// The two projection targets with the dimensions of central simple algebras
// representing their classes: gcd(h1,0)^2 = h1^2 and gcd(h1,h)^2 = h^2.
// Requires h | h1; the second rep dimension is what makes the second
// projection birationally linear.
inline std::pair<BrauerTarget, BrauerTarget> hecke_brauer_targets(const HeckeDescriptor& d) {
    if (d.h1 % d.h != 0)
        throw invalid_input("hecke_brauer_targets: h must divide h1 (m != h)");
    BrauerTarget first{d.theta1_target.type, checked::mul(d.h1, d.h1)};
    BrauerTarget second{d.theta2_target.type, checked::mul(d.m, d.m)};
    return {first, second};
}

} // namespace moduli
