#pragma once

// Symbolic transport of Brauer classes through the descent/Hecke diagrams.
//
// A class is a formal pair (generator, integer coefficient): psi(r,d) for
// the PGL(h)-quotient presentation of M(r,d), sigma:... for the canonical
// class of a parabolic or pulled-back space.  Edges rewrite the generator
// and multiply the coefficient:
//
//   grass_pullback        x1      (equivariant pullback of a Grassmannian bundle)
//   covariant_frame(w)    x(+w)   (covariant partial frame presentation)
//   contravariant_frame(w)x(-w)   (contravariant partial frame presentation)
//   hecke_roof            x1      (up one Hecke projection, down the other)
//   descent_map           x1      (composite transport across the descent map)
//   tensor_iso            x1
//   equivariant_pullback  x1
//
// verify_main replays the composite map's legs backwards from psi(h,0) and
// certifies that the result is psi(r,d) with coefficient 1, attaching the
// kernel-recursion certificate as a nested license.  A mutation hook flips
// the frame variance of the final descent leg, which must flip the sign.

#include <memory>
#include <string>
#include <vector>

#include "moduli/mu.hpp"

namespace moduli {

struct inapplicable_edge : error {
    using error::error;
};

// gcd(rank, degree)^2: the dimension of a central simple algebra
// representing the class of M(r, d).
inline i64 rep_algebra_dim(BundleType t) {
    i64 h = gcd_type(t);
    return checked::mul(h, h);
}

struct ClassExpr {
    std::string generator;
    i64 coeff = 0;

    friend bool operator==(const ClassExpr& a, const ClassExpr& b) {
        return a.generator == b.generator && a.coeff == b.coeff;
    }
    friend bool operator!=(const ClassExpr& a, const ClassExpr& b) { return !(a == b); }
};

// Class defined by a weight-w bundle over the generator's space: w * base.
inline ClassExpr weight_class(i64 w, const ClassExpr& base) {
    return ClassExpr{base.generator, checked::mul(w, base.coeff)};
}

enum class EdgeKind {
    GrassPullback,
    CovariantFrame,
    ContravariantFrame,
    HeckeRoof,
    DescentMap,
    TensorIso,
    EquivariantPullback,
};

inline const char* edge_kind_name(EdgeKind k) {
    switch (k) {
        case EdgeKind::GrassPullback: return "grass_pullback";
        case EdgeKind::CovariantFrame: return "covariant_frame";
        case EdgeKind::ContravariantFrame: return "contravariant_frame";
        case EdgeKind::HeckeRoof: return "hecke_roof";
        case EdgeKind::DescentMap: return "descent_map";
        case EdgeKind::TensorIso: return "tensor_iso";
        case EdgeKind::EquivariantPullback: return "equivariant_pullback";
    }
    return "?";
}

struct DiagramEdge {
    EdgeKind kind = EdgeKind::TensorIso;
    i64 weight = 0; // meaningful for the frame kinds only
    std::string from;
    std::string to;
};

inline i64 transport_coeff(const DiagramEdge& e) {
    switch (e.kind) {
        case EdgeKind::CovariantFrame: return e.weight;
        case EdgeKind::ContravariantFrame: return checked::neg(e.weight);
        default: return 1;
    }
}

inline ClassExpr transport(const ClassExpr& expr, const DiagramEdge& e) {
    if (expr.generator != e.from)
        throw inapplicable_edge("transport: edge from '" + e.from + "' applied to '" +
                                expr.generator + "'");
    return ClassExpr{e.to, checked::mul(expr.coeff, transport_coeff(e))};
}

struct Derivation;

struct DerivationStep {
    DiagramEdge edge;
    std::string rule;
    ClassExpr after;
    i64 rep_dim = 0; // representing-algebra dimension at the resulting node
    std::shared_ptr<const Derivation> license; // certificate for a parallel map, if any
};

struct Derivation {
    ClassExpr start;
    std::vector<DerivationStep> steps;
    ClassExpr expected;
    bool equal = false;

    const ClassExpr& final_expr() const { return steps.empty() ? start : steps.back().after; }
};

// Re-applies every step from the start expression; true iff each recorded
// intermediate matches and every license replays too.
inline bool replay(const Derivation& d) {
    ClassExpr cur = d.start;
    for (const auto& st : d.steps) {
        cur = transport(cur, st.edge);
        if (cur != st.after) return false;
        if (st.license && !replay(*st.license)) return false;
    }
    return true;
}

struct VerifyOptions {
    // substitute a covariant frame for the contravariant one on the final
    // descent leg (single-sign corruption; the verdict must flip)
    bool flip_descent_frame = false;
};

inline std::string psi_label(BundleType t) { return "psi" + type_label(t); }

namespace detail {

inline std::shared_ptr<const Derivation> verify_impl(Genus g, BundleType alpha, bool flip_here) {
    require_type(alpha);
    const i64 h = gcd_type(alpha);
    auto out = std::make_shared<Derivation>();
    out->expected = ClassExpr{psi_label(alpha), 1};

    if (alpha.degree % alpha.rank == 0) {
        out->start = ClassExpr{psi_label(BundleType{h, 0}), 1};
        DiagramEdge iso{EdgeKind::TensorIso, 0, out->start.generator, psi_label(alpha)};
        ClassExpr after = transport(out->start, iso);
        out->steps.push_back(
            DerivationStep{iso, "tensor_identification", after, rep_algebra_dim(alpha), nullptr});
        out->equal = after == out->expected;
        return out;
    }

    DescentStep st = descent_step(g, alpha);
    const i64 h1 = st.h1;
    HeckeDescriptor hk = make_hecke(g, h1, h);
    const i64 h_sq = checked::mul(h, h);

    auto sub_hecke = verify_impl(g, BundleType{h1, checked::neg(h)}, false);
    auto sub_kernel = verify_impl(g, st.alpha1, false);

    out->start = sub_hecke->start; // psi(h, 0), since gcd(h1, h) = h
    out->steps = sub_hecke->steps;
    bool licenses_ok = sub_hecke->equal && sub_kernel->equal;

    const std::string par = "sigma:" + parabolic_space(hk).label;
    const std::string phat = "sigma:" + pulled_back_space(g, hk, st.alpha1).label;

    // up the second Hecke projection, across the identification, net x1
    DiagramEdge roof{EdgeKind::HeckeRoof, 0, psi_label(BundleType{h1, checked::neg(h)}), par};
    ClassExpr cur = transport(out->final_expr(), roof);
    out->steps.push_back(DerivationStep{roof, "hecke_roof", cur, h_sq, nullptr});

    // across the pullback square; licensed by the kernel recursion
    DiagramEdge square{EdgeKind::EquivariantPullback, 0, par, phat};
    cur = transport(cur, square);
    out->steps.push_back(DerivationStep{square, "pullback_square", cur, h_sq, sub_kernel});

    // the descent leg: Grassmannian pullback (x1) plus the weight -1
    // contravariant frame presentation (x1); a covariant substitution
    // contributes -1 instead
    DiagramEdge frame{flip_here ? EdgeKind::CovariantFrame : EdgeKind::ContravariantFrame, -1,
                      phat, psi_label(alpha)};
    cur = transport(cur, frame);
    out->steps.push_back(DerivationStep{frame, "descent_reduce", cur, h_sq, nullptr});

    out->equal = licenses_ok && cur == out->expected;
    return out;
}

} // namespace detail

inline Derivation verify_main(Genus g, BundleType alpha, VerifyOptions opts = {}) {
    return *detail::verify_impl(g, alpha, opts.flip_descent_frame);
}

} // namespace moduli
