#pragma once

// Dimension-count verification for generic maps phi: F -> E.
//
// A configuration splits phi into kernel K, image I, torsion T (degree d_T)
// inside the cokernel Q, torsion-free quotient Q' = Q/T and I' = preimage
// of T in E, tied together by
//
//   0 -> K -> F -> I -> 0,   0 -> I -> E -> Q -> 0,   0 -> I' -> E -> Q' -> 0.
//
// The parameter counts p0, p1, the ext bound chain and the necessary
// conditions chi(K,I) >= 0, chi(I',Q') >= 0 combine into: a configuration
// of generic stable bundles forces ext(F,E) = 0, maximal rank, and (unless
// r_E = r_F) torsion-free cokernel.  The enumerator sweeps all integral
// configurations in an exact degree window and classifies each one.

#include <algorithm>
#include <cstdlib>
#include <iterator>
#include <string>
#include <utility>
#include <vector>

#include "moduli/core.hpp"
#include "moduli/parallel.hpp"

namespace moduli {

struct HirschConfig {
    Genus g;
    BundleType F;
    BundleType E;
    i64 r_K = 0;
    i64 d_K = 0;
    i64 d_T = 0;

    BundleType K() const { return BundleType{r_K, d_K}; }
    BundleType I() const { return BundleType{F.rank - r_K, F.degree - d_K}; }
    BundleType Q() const {
        BundleType i = I();
        return BundleType{E.rank - i.rank, E.degree - i.degree};
    }
    BundleType Qp() const {
        BundleType q = Q();
        return BundleType{q.rank, q.degree - d_T};
    }
    BundleType Ip() const {
        BundleType i = I();
        return BundleType{i.rank, i.degree + d_T};
    }
};

inline HirschConfig make_config(Genus g, BundleType F, BundleType E, i64 r_K, i64 d_K, i64 d_T) {
    require_type(F);
    require_type(E);
    HirschConfig c{g, F, E, r_K, d_K, d_T};
    if (r_K < 0) throw invalid_input("config: r_K < 0");
    if (c.I().rank < 1) throw invalid_input("config: image rank < 1 (phi would be zero)");
    if (r_K == 0 && d_K != 0)
        throw invalid_input("config: rank-0 kernel of a map of bundles must be 0");
    if (c.Q().rank < 0) throw invalid_input("config: cokernel rank < 0");
    if (d_T < 0) throw invalid_input("config: torsion degree < 0");
    if (c.Q().rank == 0 && d_T != c.Q().degree)
        throw invalid_input("config: rank-0 cokernel is all torsion, need d_T = d_Q");
    return c;
}

// Parameters of the triple (F, E, [phi]).
inline i64 p0(BundleType F, BundleType E, Genus g, i64 hom_FE) {
    if (hom_FE < 1) throw invalid_input("p0: hom(F,E) must be >= 1");
    i64 v = checked::sub(1, euler_chi(F, F, g));
    v = checked::add(v, checked::sub(1, euler_chi(E, E, g)));
    return checked::sub(checked::add(v, hom_FE), 1);
}

// Parameters of the split configuration, in the simplified post-stability
// form 1 - chi(F,K) - chi(Q,E) - chi(I,I) - r_Q d_T.  The stability inputs
// (hom(I,K) = hom(Q',I') = 0) are assumptions of the count, not checked.
inline i64 p1(const HirschConfig& c) {
    i64 v = checked::sub(1, euler_chi(c.F, c.K(), c.g));
    v = checked::sub(v, euler_chi(c.Q(), c.E, c.g));
    v = checked::sub(v, euler_chi(c.I(), c.I(), c.g));
    return checked::sub(v, checked::mul(c.Q().rank, c.d_T));
}

// ext(F, E) <= -chi(K, Q) - r_Q d_T.
inline i64 ext_upper_bound(const HirschConfig& c) {
    i64 v = checked::neg(euler_chi(c.K(), c.Q(), c.g));
    return checked::sub(v, checked::mul(c.Q().rank, c.d_T));
}

// chi(K, I) >= 0 and chi(I', Q') >= 0; rank-0 members are vacuous.
inline bool necessary_conditions(const HirschConfig& c) {
    return euler_chi(c.K(), c.I(), c.g) >= 0 && euler_chi(c.Ip(), c.Qp(), c.g) >= 0;
}

// ext(F, E) <= -r_K r_Q (g-1) - d_T (r_Q + r_K r_E / r_I), exact rational.
inline Rational final_upper_bound(const HirschConfig& c) {
    const i64 r_Q = c.Q().rank;
    const i64 r_I = c.I().rank;
    Rational v = -Rational(checked::mul(checked::mul(c.r_K, r_Q), c.g.gm1()));
    Rational slope = Rational(r_Q) + Rational(checked::mul(c.r_K, c.E.rank), r_I);
    return v - Rational(c.d_T) * slope;
}

// With the necessary conditions in force,
// r_I chi(K, Q) >= r_I r_K r_Q (g-1) + d_T r_K r_E (denominators cleared).
inline bool check_implication(const HirschConfig& c) {
    if (!necessary_conditions(c))
        throw invalid_input("check_implication: necessary conditions do not hold");
    const i64 r_I = c.I().rank;
    i64 lhs = checked::mul(r_I, euler_chi(c.K(), c.Q(), c.g));
    i64 rhs = checked::add(checked::mul(checked::mul(r_I, c.r_K), checked::mul(c.Q().rank, c.g.gm1())),
                           checked::mul(c.d_T, checked::mul(c.r_K, c.E.rank)));
    return lhs >= rhs;
}

enum class Classification { ConsistentGeneric, GenericallyImpossible, EqualRankTorsionAllowed };

inline const char* classification_name(Classification c) {
    switch (c) {
        case Classification::ConsistentGeneric: return "consistent_generic";
        case Classification::GenericallyImpossible: return "generically_impossible";
        case Classification::EqualRankTorsionAllowed: return "equal_rank_torsion_allowed";
    }
    return "?";
}

struct GenericityVerdict {
    bool passes_necessary = false;
    i64 ext_upper = 0;
    Rational final_upper;
    Classification classification = Classification::ConsistentGeneric;
};

inline GenericityVerdict classify(const HirschConfig& c) {
    GenericityVerdict v;
    v.passes_necessary = necessary_conditions(c);
    v.ext_upper = ext_upper_bound(c);
    v.final_upper = final_upper_bound(c);
    if (v.passes_necessary && v.final_upper < Rational(0)) {
        v.classification = Classification::GenericallyImpossible;
    } else if (c.r_K == 0 && c.Q().rank == 0 && c.d_T > 0) {
        // only reachable when r_E = r_F
        v.classification = Classification::EqualRankTorsionAllowed;
    } else {
        v.classification = Classification::ConsistentGeneric;
    }
    return v;
}

struct Enumeration {
    std::vector<std::pair<HirschConfig, GenericityVerdict>> rows;
    std::vector<std::string> warnings;
};

namespace detail {

// chi(K, I) >= 0  <=>  d_K <= floor(r_K (d_F - r_I (g-1)) / r_F)
inline i64 dk_upper(Genus g, BundleType F, i64 r_K) {
    i64 r_I = F.rank - r_K;
    i64 num = checked::mul(r_K, checked::sub(F.degree, checked::mul(r_I, g.gm1())));
    return floor_div(num, F.rank);
}

// chi(I', Q') >= 0  <=>  d_K >= ceil((r_I r_Q (g-1) + r_E d_T - r_I (d_E - d_F) + r_Q d_F) / r_E)
inline i64 dk_lower(Genus g, BundleType F, BundleType E, i64 r_K, i64 d_T) {
    i64 r_I = F.rank - r_K;
    i64 r_Q = E.rank - r_I;
    i64 num = checked::mul(checked::mul(r_I, r_Q), g.gm1());
    num = checked::add(num, checked::mul(E.rank, d_T));
    num = checked::sub(num, checked::mul(r_I, checked::sub(E.degree, F.degree)));
    num = checked::add(num, checked::mul(r_Q, F.degree));
    return ceil_div(num, E.rank);
}

} // namespace detail

namespace detail {

// one r_K slice of the enumeration; slices are independent
inline Enumeration enumerate_slice(Genus g, BundleType F, BundleType E, i64 max_dT, i64 r_K) {
    Enumeration out;
    const i64 r_I = F.rank - r_K;
    const i64 r_Q = E.rank - r_I;
    const i64 dk_default = checked::add(
        std::abs(F.degree), checked::mul(F.rank, checked::add(checked::mul(2, g.value()), 2)));

    if (r_K == 0) {
        // K = 0 forces d_K = 0
        if (r_Q == 0) {
            i64 d_Q = E.degree - F.degree;
            if (d_Q >= 0 && d_Q <= max_dT)
                out.rows.emplace_back(make_config(g, F, E, 0, 0, d_Q), GenericityVerdict{});
        } else {
            for (i64 d_T = 0; d_T <= max_dT; ++d_T)
                out.rows.emplace_back(make_config(g, F, E, 0, 0, d_T), GenericityVerdict{});
        }
        return out;
    }

    i64 hi = dk_upper(g, F, r_K);
    if (hi > dk_default) {
        out.warnings.push_back("degree window clipped at +" + std::to_string(dk_default) +
                               " for r_K=" + std::to_string(r_K));
        hi = dk_default;
    }

    if (r_Q == 0) {
        // all of Q is torsion: d_T = d_Q = d_E - d_F + d_K in [0, max_dT]
        i64 lo = checked::sub(F.degree, E.degree);
        for (i64 d_K = lo; d_K <= hi && d_K <= checked::add(lo, max_dT); ++d_K) {
            i64 d_T = checked::sub(checked::add(E.degree, d_K), F.degree);
            out.rows.emplace_back(make_config(g, F, E, r_K, d_K, d_T), GenericityVerdict{});
        }
        return out;
    }

    for (i64 d_T = 0; d_T <= max_dT; ++d_T) {
        i64 lo = dk_lower(g, F, E, r_K, d_T);
        if (lo < checked::neg(dk_default)) {
            out.warnings.push_back("degree window clipped at -" + std::to_string(dk_default) +
                                   " for r_K=" + std::to_string(r_K) +
                                   " d_T=" + std::to_string(d_T));
            lo = checked::neg(dk_default);
        }
        for (i64 d_K = lo; d_K <= hi; ++d_K)
            out.rows.emplace_back(make_config(g, F, E, r_K, d_K, d_T), GenericityVerdict{});
    }
    return out;
}

} // namespace detail

// Sweeps r_K in [max(0, r_F - r_E), r_F - 1], d_T in [0, max_dT] and d_K
// over the exact window in which the necessary conditions can hold
// (upper bound from chi(K,I) >= 0, lower from chi(I',Q') >= 0); r_K = 0
// pins d_K = 0 and keeps the full d_T sweep, r_Q = 0 pins d_T = d_Q.
// Slices run on up to `jobs` threads; rows always come back merged in
// lexicographic (r_K, d_K, d_T) order.
inline Enumeration enumerate_configs(Genus g, BundleType F, BundleType E, i64 max_dT,
                                     i64 jobs = 1) {
    require_type(F);
    require_type(E);
    if (max_dT < 0) throw invalid_input("enumerate_configs: max_dT < 0");

    const i64 rk_lo = F.rank > E.rank ? F.rank - E.rank : 0;
    const i64 slices = F.rank - rk_lo;
    std::vector<Enumeration> parts = parallel_map<Enumeration>(slices, jobs, [&](i64 i) {
        return detail::enumerate_slice(g, F, E, max_dT, rk_lo + i);
    });

    Enumeration out;
    for (Enumeration& p : parts) {
        out.rows.insert(out.rows.end(), std::make_move_iterator(p.rows.begin()),
                        std::make_move_iterator(p.rows.end()));
        out.warnings.insert(out.warnings.end(), p.warnings.begin(), p.warnings.end());
    }
    std::sort(out.rows.begin(), out.rows.end(), [](const auto& a, const auto& b) {
        if (a.first.r_K != b.first.r_K) return a.first.r_K < b.first.r_K;
        if (a.first.d_K != b.first.d_K) return a.first.d_K < b.first.d_K;
        return a.first.d_T < b.first.d_T;
    });
    for (auto& row : out.rows) row.second = classify(row.first);
    return out;
}

} // namespace moduli
