#pragma once

// The composite map M(r, d) --> M(h, 0) and its fiber-dimension ledger.
//
// For r | d the map is an isomorphism (tensor by a degree -d/r line bundle).
// Otherwise it factors through four legs, recursing on strictly smaller
// ranks:
//
//   grass_reduce    M(r, d) --> Phat          fiber  h (chi(alpha1, beta) - h1)
//   kernel_recurse  Phat --> P(h1, 0, h)      fiber  (r1^2 - h1^2)(g-1)   [subtree on (r1, d1)]
//   hecke_project   P(h1, 0, h) --> M(h1, -h) fiber  h (h1 - h)
//   hecke_recurse   M(h1, -h) --> M(h, 0)     fiber  (h1^2 - h^2)(g-1)    [subtree on (h1, -h)]
//
// The ledger identity Sum(fiber dims) = (r^2 - h^2)(g-1) is asserted at
// every level; it is the affine-factor exponent of the birational product
// decomposition.

#include <memory>
#include <string>
#include <vector>

#include "moduli/descent.hpp"
#include "moduli/hecke.hpp"

namespace moduli {

enum class MuKind { TensorIso, GrassReduce, KernelRecurse, HeckeProject, HeckeRecurse };

inline const char* mu_kind_name(MuKind k) {
    switch (k) {
        case MuKind::TensorIso: return "tensor_iso";
        case MuKind::GrassReduce: return "grass_reduce";
        case MuKind::KernelRecurse: return "kernel_recurse";
        case MuKind::HeckeProject: return "hecke_project";
        case MuKind::HeckeRecurse: return "hecke_recurse";
    }
    return "?";
}

struct SpaceRef {
    std::string label;
    i64 dim = 0;

    friend bool operator==(const SpaceRef& a, const SpaceRef& b) {
        return a.label == b.label && a.dim == b.dim;
    }
};

inline std::string type_label(BundleType t) {
    return "(" + std::to_string(t.rank) + "," + std::to_string(t.degree) + ")";
}

inline SpaceRef moduli_space(Genus g, BundleType t) {
    return SpaceRef{"M" + type_label(t), moduli_dim(g, t)};
}

inline SpaceRef parabolic_space(const HeckeDescriptor& hk) {
    return SpaceRef{"P(" + std::to_string(hk.h1) + ",0," + std::to_string(hk.h) + ")",
                    hk.parmod_dim};
}

// Pullback of the first Hecke projection along the recursion on (r1, d1):
// sits over M(r1, d1) with the same Grassmannian fiber.
inline SpaceRef pulled_back_space(Genus g, const HeckeDescriptor& hk, BundleType alpha1) {
    return SpaceRef{"Phat(" + std::to_string(hk.h1) + ",0," + std::to_string(hk.h) + ")/M" +
                        type_label(alpha1),
                    checked::add(moduli_dim(g, alpha1), hk.theta_fiber_dim)};
}

struct MuTree;

struct MuNode {
    MuKind kind = MuKind::TensorIso;
    SpaceRef source;
    SpaceRef target;
    i64 fiber_dim = 0;
    // populated for the recursive kinds; fiber_dim is the subtree's total
    std::shared_ptr<const MuTree> subtree;
};

struct MuTree {
    Genus genus;
    BundleType root;
    i64 h = 0;
    std::vector<MuNode> nodes; // composition order: reduce, recurse, project, recurse
    i64 total_fiber_dim = 0;
    BundleType target; // (h, 0)
};

// (r^2 - h^2)(g-1), the affine factor exponent.
inline i64 affine_dim(Genus g, BundleType t) {
    i64 h = gcd_type(t);
    return checked::mul(checked::sub(checked::mul(t.rank, t.rank), checked::mul(h, h)), g.gm1());
}

namespace detail {

inline void check_node(const MuNode& n) {
    if (n.fiber_dim < 0)
        throw invariant_violation(std::string("mu node ") + mu_kind_name(n.kind) +
                                  ": negative fiber dimension");
    if (checked::sub(n.source.dim, n.target.dim) != n.fiber_dim)
        throw invariant_violation(std::string("mu node ") + mu_kind_name(n.kind) +
                                  ": fiber_dim != dim(source) - dim(target)");
}

inline std::shared_ptr<const MuTree> compose_mu_impl(Genus g, BundleType alpha, i64 depth,
                                                     i64 depth_bound) {
    if (depth > depth_bound)
        throw invariant_violation("compose_mu: recursion depth exceeded initial rank");
    require_type(alpha);

    auto tree = std::make_shared<MuTree>(MuTree{g, alpha, gcd_type(alpha), {}, 0, BundleType{}});
    tree->target = BundleType{tree->h, 0};

    if (alpha.degree % alpha.rank == 0) {
        MuNode iso{MuKind::TensorIso, moduli_space(g, alpha), moduli_space(g, tree->target), 0,
                   nullptr};
        check_node(iso);
        tree->nodes.push_back(std::move(iso));
        tree->total_fiber_dim = 0;
        return tree;
    }

    DescentStep st = descent_step(g, alpha);
    const i64 h = st.h;
    const i64 h1 = st.h1;
    HeckeDescriptor hk = make_hecke(g, h1, h);

    // the smaller Grassmannian bundle must still have room for h-planes
    if (st.chi_a1_beta < h1)
        throw invariant_violation(
            "compose_mu: chi(alpha1, beta) < h1, no room for the reduction at rank " +
            std::to_string(alpha.rank));

    auto sub_kernel = compose_mu_impl(g, st.alpha1, depth + 1, depth_bound);
    auto sub_hecke =
        compose_mu_impl(g, BundleType{h1, checked::neg(h)}, depth + 1, depth_bound);

    SpaceRef src = moduli_space(g, alpha);
    SpaceRef phat = pulled_back_space(g, hk, st.alpha1);
    SpaceRef par = parabolic_space(hk);
    SpaceRef m_h1 = moduli_space(g, BundleType{h1, checked::neg(h)});
    SpaceRef m_h0 = moduli_space(g, tree->target);

    MuNode reduce{MuKind::GrassReduce, src, phat,
                  checked::mul(h, checked::sub(st.chi_a1_beta, h1)), nullptr};
    MuNode kernel{MuKind::KernelRecurse, phat, par, sub_kernel->total_fiber_dim, sub_kernel};
    MuNode project{MuKind::HeckeProject, par, m_h1, hk.theta_fiber_dim, nullptr};
    MuNode hecke{MuKind::HeckeRecurse, m_h1, m_h0, sub_hecke->total_fiber_dim, sub_hecke};

    for (const MuNode* n : {&reduce, &kernel, &project, &hecke}) check_node(*n);

    tree->total_fiber_dim = checked::add(checked::add(reduce.fiber_dim, kernel.fiber_dim),
                                         checked::add(project.fiber_dim, hecke.fiber_dim));
    tree->nodes = {std::move(reduce), std::move(kernel), std::move(project), std::move(hecke)};

    if (tree->total_fiber_dim != affine_dim(g, alpha))
        throw invariant_violation("compose_mu: ledger total != (r^2 - h^2)(g-1) at root " +
                                  type_label(alpha));
    return tree;
}

} // namespace detail

inline MuTree compose_mu(Genus g, BundleType alpha) {
    require_type(alpha);
    return *detail::compose_mu_impl(g, alpha, 0, alpha.rank);
}

struct FixedDetReport {
    BundleType root;
    bool coprime = false;
    i64 fixed_det_dim = 0; // (r^2 - 1)(g-1), the fiber dimension of the determinant map
    bool rational = false; // asserted only in the coprime case
};

inline FixedDetReport fixed_det_report(Genus g, BundleType t) {
    require_type(t);
    FixedDetReport rep;
    rep.root = t;
    rep.coprime = gcd_type(t) == 1;
    rep.fixed_det_dim =
        checked::mul(checked::sub(checked::mul(t.rank, t.rank), 1), g.gm1());
    rep.rational = rep.coprime;
    return rep;
}

} // namespace moduli
