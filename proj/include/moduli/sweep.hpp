#pragma once

// Exhaustive re-verification over a box of types.  Every check recomputes
// its identity from scratch rather than trusting the constructors' eager
// assertions.

#include <string>
#include <vector>

#include "moduli/brauer.hpp"
#include "moduli/parallel.hpp"

namespace moduli {

struct SweepRow {
    BundleType type;
    i64 h = 0;
    i64 chain_len = 0;
    BundleType terminal;
    i64 mu_total = 0;
    bool beta_range_ok = false;   // s strictly inside (r/h, 2r/h) and s*d - t*r = h
    bool lambda_dim_ok = false;   // (r^2 - r1^2)(g-1) = h (chi - h), every step
    bool divisibility_ok = false; // h | h1 and h1 | chi, every step
    bool degree_rel_ok = false;   // d1 = h e - d, every step
    bool mu_ledger_ok = false;    // sum of fibers = (r^2 - h^2)(g-1)
    bool brauer_ok = false;       // certificate verdict equal and trace replays
    std::vector<std::string> failures;

    bool ok() const {
        return beta_range_ok && lambda_dim_ok && divisibility_ok && degree_rel_ok &&
               mu_ledger_ok && brauer_ok;
    }
};

inline SweepRow check_triple(Genus g, BundleType t) {
    SweepRow row;
    row.type = t;
    row.h = gcd_type(t);

    auto fail = [&row](const std::string& what) { row.failures.push_back(what); };

    try {
        ReductionChain chain = descent_chain(g, t);
        row.chain_len = static_cast<i64>(chain.steps.size());
        row.terminal = chain.terminal;

        row.beta_range_ok = row.lambda_dim_ok = row.divisibility_ok = row.degree_rel_ok = true;
        for (const DescentStep& st : chain.steps) {
            const i64 r = st.alpha.rank, d = st.alpha.degree, h = st.h;
            const i64 rh = r / h;
            if (!(h == r ? st.beta_sol.s == 2
                         : (st.beta_sol.s > rh && st.beta_sol.s < 2 * rh)) ||
                st.beta_sol.s * d - st.beta_sol.t * r != h ||
                euler_chi(st.beta, st.alpha, g) != h) {
                row.beta_range_ok = false;
                fail("beta_range at " + type_label(st.alpha));
            }
            i64 chi = euler_chi(st.alpha1, st.beta, g);
            if ((r * r - st.alpha1.rank * st.alpha1.rank) * g.gm1() != h * (chi - h) ||
                st.fiber_dim != h * (chi - h)) {
                row.lambda_dim_ok = false;
                fail("lambda_dim_identity at " + type_label(st.alpha));
            }
            if (st.h1 % h != 0 || chi % st.h1 != 0 || st.l != chi / st.h1) {
                row.divisibility_ok = false;
                fail("divisibility at " + type_label(st.alpha));
            }
            if (st.alpha1.degree != h * st.beta_sol.e - d) {
                row.degree_rel_ok = false;
                fail("degree_relation at " + type_label(st.alpha));
            }
        }
        if (chain.terminal.degree % chain.terminal.rank != 0) {
            row.beta_range_ok = false;
            fail("terminal rank does not divide degree");
        }
    } catch (const error& e) {
        fail(std::string("chain: ") + e.what());
    }

    try {
        MuTree tree = compose_mu(g, t);
        row.mu_total = tree.total_fiber_dim;
        i64 sum = 0;
        for (const MuNode& n : tree.nodes) sum += n.fiber_dim;
        row.mu_ledger_ok =
            sum == tree.total_fiber_dim &&
            tree.total_fiber_dim == (t.rank * t.rank - row.h * row.h) * g.gm1() &&
            tree.target == BundleType{row.h, 0};
        if (!row.mu_ledger_ok) fail("mu_ledger at " + type_label(t));
    } catch (const error& e) {
        fail(std::string("mu: ") + e.what());
    }

    try {
        Derivation cert = verify_main(g, t);
        row.brauer_ok = cert.equal && replay(cert) &&
                        cert.final_expr() == ClassExpr{psi_label(t), 1};
        if (!row.brauer_ok) fail("brauer_certificate at " + type_label(t));
    } catch (const error& e) {
        fail(std::string("brauer: ") + e.what());
    }

    return row;
}

struct SweepReport {
    Genus genus;
    i64 max_rank = 0;
    i64 max_degree = 0;
    std::vector<SweepRow> rows;
    i64 passes = 0;
    i64 failures = 0;
};

inline SweepReport run_verify_sweep(Genus g, i64 max_rank, i64 max_degree, i64 jobs) {
    if (max_rank < 1 || max_degree < 1)
        throw invalid_input("verify sweep: bounds must be >= 1");
    std::vector<BundleType> inputs;
    for (i64 r = 1; r <= max_rank; ++r)
        for (i64 d = -max_degree; d <= max_degree; ++d) inputs.push_back(BundleType{r, d});

    SweepReport rep{g, max_rank, max_degree, {}, 0, 0};
    rep.rows = parallel_map<SweepRow>(
        static_cast<i64>(inputs.size()), jobs,
        [&](i64 i) { return check_triple(g, inputs[static_cast<std::size_t>(i)]); });
    for (const SweepRow& row : rep.rows) (row.ok() ? rep.passes : rep.failures)++;
    return rep;
}

} // namespace moduli
