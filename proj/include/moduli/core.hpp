#pragma once

// Bundle types and the Euler form.
//
// A "type" is the integer pair (rank, degree) of a vector bundle on a fixed
// smooth projective curve of genus g >= 2.  The Euler form between types is
//
//   chi(A, B) = r_A d_B - r_B d_A - r_A r_B (g - 1)
//
// (Riemann-Roch), and the moduli space of stable bundles of type (r, d) is
// smooth quasi-projective of dimension r^2 (g - 1) + 1.  Everything here is
// exact checked integer arithmetic; no bundle is ever represented.

#include <numeric>

#include "moduli/arith.hpp"

namespace moduli {

class Genus {
  public:
    explicit Genus(i64 g) : g_(g) {
        if (g < 2) throw invalid_input("genus must be >= 2 (got " + std::to_string(g) + ")");
    }
    i64 value() const { return g_; }
    i64 gm1() const { return g_ - 1; }

    friend bool operator==(Genus a, Genus b) { return a.g_ == b.g_; }
    friend bool operator!=(Genus a, Genus b) { return a.g_ != b.g_; }

  private:
    i64 g_;
};

// Plain aggregate so that formal pairs (rank <= 0) can be formed for the
// bilinearity of chi.  Operations that stand for an actual bundle type call
// require_type() first.
struct BundleType {
    i64 rank = 0;
    i64 degree = 0;

    friend bool operator==(BundleType a, BundleType b) {
        return a.rank == b.rank && a.degree == b.degree;
    }
    friend bool operator!=(BundleType a, BundleType b) { return !(a == b); }
};

inline void require_type(BundleType t) {
    if (t.rank < 1)
        throw invalid_input("bundle type needs rank >= 1 (got rank " + std::to_string(t.rank) +
                            ")");
}

// chi(a, b) = r_a d_b - r_b d_a - r_a r_b (g-1).  Total on formal pairs.
inline i64 euler_chi(BundleType a, BundleType b, Genus g) {
    i64 v = checked::sub(checked::mul(a.rank, b.degree), checked::mul(b.rank, a.degree));
    return checked::sub(v, checked::mul(checked::mul(a.rank, b.rank), g.gm1()));
}

// Positive gcd of rank and degree, with gcd(r, 0) = r and gcd(r, d) = gcd(r, -d).
inline i64 gcd_type(BundleType t) {
    require_type(t);
    return std::gcd(t.rank, t.degree);
}

// dim M(r, d) = r^2 (g-1) + 1.
inline i64 moduli_dim(Genus g, BundleType t) {
    require_type(t);
    return checked::add(checked::mul(checked::mul(t.rank, t.rank), g.gm1()), 1);
}

struct ModuliDescriptor {
    Genus genus;
    BundleType type;
    i64 h;   // gcd of rank and degree
    i64 dim; // r^2 (g-1) + 1
};

inline ModuliDescriptor make_descriptor(Genus g, BundleType t) {
    return ModuliDescriptor{g, t, gcd_type(t), moduli_dim(g, t)};
}

inline i64 moduli_dim(const ModuliDescriptor& m) { return moduli_dim(m.genus, m.type); }

} // namespace moduli
