#pragma once

// JSON / TSV / pretty rendering and JSON parsing.  Schema version 1; key
// order in JSON output is alphabetical (nlohmann), so identical inputs give
// byte-identical output.

#include <sstream>
#include <string>

#include <json.hpp>

#include "moduli/genericity.hpp"
#include "moduli/sweep.hpp"

namespace moduli {

using json = nlohmann::json;

inline json type_json(BundleType t) { return json::array({t.rank, t.degree}); }

inline BundleType type_from_json(const json& j) {
    return BundleType{j.at(0).get<i64>(), j.at(1).get<i64>()};
}

// ---------------------------------------------------------------- chain ----

inline json render_chain_json(const ReductionChain& c) {
    json steps = json::array();
    for (const DescentStep& st : c.steps) {
        steps.push_back(json{{"alpha", type_json(st.alpha)},
                             {"beta", type_json(st.beta)},
                             {"alpha1", type_json(st.alpha1)},
                             {"h", st.h},
                             {"h1", st.h1},
                             {"chi_a1_beta", st.chi_a1_beta},
                             {"l", st.l},
                             {"fiber_dim", st.fiber_dim}});
    }
    return json{{"schema", 1},
                {"genus", c.genus.value()},
                {"initial",
                 json{{"rank", c.initial.rank},
                      {"degree", c.initial.degree},
                      {"h", c.initial_h},
                      {"dim", c.initial_dim}}},
                {"steps", steps},
                {"terminal", type_json(c.terminal)},
                {"terminal_twist", c.terminal_twist}};
}

inline ReductionChain parse_chain_json(const json& j) {
    Genus g(j.at("genus").get<i64>());
    ReductionChain c{g,
                     BundleType{j.at("initial").at("rank").get<i64>(),
                                j.at("initial").at("degree").get<i64>()},
                     j.at("initial").at("h").get<i64>(),
                     j.at("initial").at("dim").get<i64>(),
                     {},
                     type_from_json(j.at("terminal")),
                     j.at("terminal_twist").get<i64>()};
    for (const json& js : j.at("steps")) {
        DescentStep st;
        st.alpha = type_from_json(js.at("alpha"));
        st.beta = type_from_json(js.at("beta"));
        st.alpha1 = type_from_json(js.at("alpha1"));
        st.h = js.at("h").get<i64>();
        st.h1 = js.at("h1").get<i64>();
        st.chi_a1_beta = js.at("chi_a1_beta").get<i64>();
        st.l = js.at("l").get<i64>();
        st.fiber_dim = js.at("fiber_dim").get<i64>();
        // t is determined by e = t - (g-1) s
        st.beta_sol = BetaSolution{st.beta.rank,
                                   checked::add(st.beta.degree,
                                                checked::mul(g.gm1(), st.beta.rank)),
                                   st.beta.degree};
        c.steps.push_back(st);
    }
    return c;
}

inline std::string render_chain_pretty(const ReductionChain& c) {
    std::ostringstream os;
    os << "reduction chain for " << type_label(c.initial) << ", genus " << c.genus.value()
       << "   [h=" << c.initial_h << ", dim M" << type_label(c.initial) << " = " << c.initial_dim
       << "]\n";
    int i = 1;
    for (const DescentStep& st : c.steps) {
        os << "  step " << i++ << ": " << type_label(st.alpha) << "  beta=" << type_label(st.beta)
           << " (s=" << st.beta_sol.s << " t=" << st.beta_sol.t << " e=" << st.beta_sol.e
           << ")  ->  alpha1=" << type_label(st.alpha1) << "   h=" << st.h << " h1=" << st.h1
           << " chi=" << st.chi_a1_beta << " l=" << st.l << " fiber=" << st.fiber_dim << "\n";
    }
    os << "  terminal: " << type_label(c.terminal) << "   twist " << c.terminal_twist
       << " reaches M(" << c.terminal.rank << ",0)\n";
    return os.str();
}

inline std::string render_chain_tsv(const ReductionChain& c) {
    std::ostringstream os;
    os << "row\tindex\trank\tdegree\th\ts\tt\te\tr1\td1\th1\tchi_a1_beta\tl\tfiber_dim\ttwist\n";
    int i = 1;
    for (const DescentStep& st : c.steps) {
        os << "step\t" << i++ << "\t" << st.alpha.rank << "\t" << st.alpha.degree << "\t" << st.h
           << "\t" << st.beta_sol.s << "\t" << st.beta_sol.t << "\t" << st.beta_sol.e << "\t"
           << st.alpha1.rank << "\t" << st.alpha1.degree << "\t" << st.h1 << "\t"
           << st.chi_a1_beta << "\t" << st.l << "\t" << st.fiber_dim << "\t\n";
    }
    os << "terminal\t\t" << c.terminal.rank << "\t" << c.terminal.degree
       << "\t\t\t\t\t\t\t\t\t\t\t" << c.terminal_twist << "\n";
    return os.str();
}

// ------------------------------------------------------------------- mu ----

struct MuNodeView {
    std::string kind;
    i64 fiber_dim = 0;
    SpaceRef source;
    SpaceRef target;

    friend bool operator==(const MuNodeView&, const MuNodeView&) = default;
};

struct MuView {
    i64 genus = 0;
    BundleType root;
    std::vector<MuNodeView> nodes;
    i64 total_fiber_dim = 0;
    BundleType target;

    friend bool operator==(const MuView&, const MuView&) = default;
};

inline MuView to_view(const MuTree& t) {
    MuView v{t.genus.value(), t.root, {}, t.total_fiber_dim, t.target};
    for (const MuNode& n : t.nodes)
        v.nodes.push_back(MuNodeView{mu_kind_name(n.kind), n.fiber_dim, n.source, n.target});
    return v;
}

inline json space_json(const SpaceRef& s) { return json{{"label", s.label}, {"dim", s.dim}}; }

inline json render_mu_json(const MuTree& t, const FixedDetReport* fd = nullptr) {
    json nodes = json::array();
    for (const MuNode& n : t.nodes) {
        nodes.push_back(json{{"kind", mu_kind_name(n.kind)},
                             {"fiber_dim", n.fiber_dim},
                             {"source", space_json(n.source)},
                             {"target", space_json(n.target)}});
    }
    json out{{"schema", 1},
             {"genus", t.genus.value()},
             {"root", type_json(t.root)},
             {"nodes", nodes},
             {"total_fiber_dim", t.total_fiber_dim},
             {"target", type_json(t.target)}};
    if (fd) {
        json fdj{{"root", type_json(fd->root)},
                 {"coprime", fd->coprime},
                 {"fixed_det_dim", fd->fixed_det_dim},
                 {"rational", fd->rational}};
        out["fixed_det"] = fdj;
    }
    return out;
}

inline MuView parse_mu_json(const json& j) {
    MuView v;
    v.genus = j.at("genus").get<i64>();
    v.root = type_from_json(j.at("root"));
    v.total_fiber_dim = j.at("total_fiber_dim").get<i64>();
    v.target = type_from_json(j.at("target"));
    for (const json& jn : j.at("nodes")) {
        MuNodeView n;
        n.kind = jn.at("kind").get<std::string>();
        n.fiber_dim = jn.at("fiber_dim").get<i64>();
        n.source = SpaceRef{jn.at("source").at("label").get<std::string>(),
                            jn.at("source").at("dim").get<i64>()};
        n.target = SpaceRef{jn.at("target").at("label").get<std::string>(),
                            jn.at("target").at("dim").get<i64>()};
        v.nodes.push_back(std::move(n));
    }
    return v;
}

inline std::string render_mu_pretty(const MuTree& t, const FixedDetReport* fd = nullptr) {
    std::ostringstream os;
    os << "mu composition for " << type_label(t.root) << ", genus " << t.genus.value() << ":  M"
       << type_label(t.root) << " --> M" << type_label(t.target) << "\n";
    for (const MuNode& n : t.nodes) {
        os << "  " << mu_kind_name(n.kind) << ": " << n.source.label << " (dim " << n.source.dim
           << ") -> " << n.target.label << " (dim " << n.target.dim << ")   fiber "
           << n.fiber_dim << "\n";
    }
    os << "  total fiber dim " << t.total_fiber_dim << " = (r^2 - h^2)(g-1)\n";
    if (fd) {
        if (fd->coprime)
            os << "fixed determinant: coprime type, dim " << fd->fixed_det_dim << ", rational\n";
        else
            os << "fixed determinant: non-coprime type, dim " << fd->fixed_det_dim
               << "; the map restricts to fixed-determinant loci, no rationality claim\n";
    }
    return os.str();
}

inline std::string render_mu_tsv(const MuTree& t) {
    std::ostringstream os;
    os << "row\tkind\tsource\tsource_dim\ttarget\ttarget_dim\tfiber_dim\n";
    for (const MuNode& n : t.nodes) {
        os << "node\t" << mu_kind_name(n.kind) << "\t" << n.source.label << "\t" << n.source.dim
           << "\t" << n.target.label << "\t" << n.target.dim << "\t" << n.fiber_dim << "\n";
    }
    os << "total\t\t\t\t\t\t" << t.total_fiber_dim << "\n";
    return os.str();
}

// ----------------------------------------------------------- derivation ----

inline json render_derivation_json(const Derivation& d) {
    json edges = json::array();
    for (const DerivationStep& st : d.steps) {
        json e{{"rule", st.rule},
               {"kind", edge_kind_name(st.edge.kind)},
               {"weight", st.edge.weight},
               {"from", st.edge.from},
               {"node", st.edge.to},
               {"coeff_after", st.after.coeff},
               {"rep_dim", st.rep_dim}};
        if (st.license) e["license"] = render_derivation_json(*st.license);
        edges.push_back(std::move(e));
    }
    return json{{"schema", 1},
                {"start", json{{"generator", d.start.generator}, {"coeff", d.start.coeff}}},
                {"expected", json{{"generator", d.expected.generator}, {"coeff", d.expected.coeff}}},
                {"edges", edges},
                {"verdict", d.equal ? "equal" : "not-equal"}};
}

namespace detail {
inline EdgeKind edge_kind_from_name(const std::string& s) {
    for (EdgeKind k :
         {EdgeKind::GrassPullback, EdgeKind::CovariantFrame, EdgeKind::ContravariantFrame,
          EdgeKind::HeckeRoof, EdgeKind::DescentMap, EdgeKind::TensorIso,
          EdgeKind::EquivariantPullback})
        if (s == edge_kind_name(k)) return k;
    throw invalid_input("unknown edge kind '" + s + "'");
}
} // namespace detail

inline Derivation parse_derivation_json(const json& j) {
    Derivation d;
    d.start = ClassExpr{j.at("start").at("generator").get<std::string>(),
                        j.at("start").at("coeff").get<i64>()};
    d.expected = ClassExpr{j.at("expected").at("generator").get<std::string>(),
                           j.at("expected").at("coeff").get<i64>()};
    d.equal = j.at("verdict").get<std::string>() == "equal";
    for (const json& je : j.at("edges")) {
        DerivationStep st;
        st.edge.kind = detail::edge_kind_from_name(je.at("kind").get<std::string>());
        st.edge.weight = je.at("weight").get<i64>();
        st.edge.from = je.at("from").get<std::string>();
        st.edge.to = je.at("node").get<std::string>();
        st.rule = je.at("rule").get<std::string>();
        st.after = ClassExpr{st.edge.to, je.at("coeff_after").get<i64>()};
        st.rep_dim = je.at("rep_dim").get<i64>();
        if (je.contains("license"))
            st.license = std::make_shared<Derivation>(parse_derivation_json(je.at("license")));
        d.steps.push_back(std::move(st));
    }
    return d;
}

inline bool derivation_equal(const Derivation& a, const Derivation& b) {
    if (!(a.start == b.start) || !(a.expected == b.expected) || a.equal != b.equal ||
        a.steps.size() != b.steps.size())
        return false;
    for (std::size_t i = 0; i < a.steps.size(); ++i) {
        const DerivationStep &x = a.steps[i], &y = b.steps[i];
        if (x.edge.kind != y.edge.kind || x.edge.weight != y.edge.weight ||
            x.edge.from != y.edge.from || x.edge.to != y.edge.to || x.rule != y.rule ||
            !(x.after == y.after) || x.rep_dim != y.rep_dim)
            return false;
        if (static_cast<bool>(x.license) != static_cast<bool>(y.license)) return false;
        if (x.license && !derivation_equal(*x.license, *y.license)) return false;
    }
    return true;
}

inline void render_derivation_pretty_rec(std::ostringstream& os, const Derivation& d,
                                         const std::string& indent, bool trace) {
    os << indent << "start " << d.start.generator << " (coeff " << d.start.coeff << ")\n";
    for (const DerivationStep& st : d.steps) {
        os << indent << "  --[" << st.rule << " / " << edge_kind_name(st.edge.kind);
        if (st.edge.kind == EdgeKind::CovariantFrame ||
            st.edge.kind == EdgeKind::ContravariantFrame)
            os << " w=" << st.edge.weight;
        os << "]--> " << st.after.generator << "   coeff " << st.after.coeff << ", rep dim "
           << st.rep_dim << "\n";
        if (trace && st.license) {
            os << indent << "    license (kernel recursion certificate):\n";
            render_derivation_pretty_rec(os, *st.license, indent + "    ", trace);
        }
    }
    os << indent << "verdict: " << (d.equal ? "equal" : "not-equal") << " (expected "
       << d.expected.generator << ", coeff " << d.expected.coeff << ")\n";
}

inline std::string render_derivation_pretty(const Derivation& d, bool trace) {
    std::ostringstream os;
    render_derivation_pretty_rec(os, d, "", trace);
    return os.str();
}

// ---------------------------------------------------------------- hirsch ----

inline json render_hirsch_json(Genus g, BundleType F, BundleType E, i64 max_dT,
                               const Enumeration& en) {
    json rows = json::array();
    for (const auto& [c, v] : en.rows) {
        json row{{"r_K", c.r_K},
                 {"d_K", c.d_K},
                 {"d_T", c.d_T},
                 {"I", type_json(c.I())},
                 {"Q", type_json(c.Q())},
                 {"I_prime", type_json(c.Ip())},
                 {"Q_prime", type_json(c.Qp())},
                 {"necessary", v.passes_necessary},
                 {"ext_upper", v.ext_upper},
                 {"final_upper", json::array({v.final_upper.num(), v.final_upper.den()})},
                 {"classification", classification_name(v.classification)}};
        if (v.passes_necessary) row["implication"] = check_implication(c);
        rows.push_back(std::move(row));
    }
    return json{{"schema", 1},
                {"genus", g.value()},
                {"F", type_json(F)},
                {"E", type_json(E)},
                {"max_dT", max_dT},
                {"rows", rows},
                {"warnings", en.warnings}};
}

inline std::string render_hirsch_tsv(Genus g, const Enumeration& en) {
    std::ostringstream os;
    os << "g\tr_F\td_F\tr_E\td_E\tr_K\td_K\td_T\tr_I\td_I\tr_Q\td_Q\tnecessary\text_upper\t"
          "final_upper\tclassification\timplication\n";
    for (const auto& [c, v] : en.rows) {
        os << g.value() << "\t" << c.F.rank << "\t" << c.F.degree << "\t" << c.E.rank << "\t"
           << c.E.degree << "\t" << c.r_K << "\t" << c.d_K << "\t" << c.d_T << "\t"
           << c.I().rank << "\t" << c.I().degree << "\t" << c.Q().rank << "\t" << c.Q().degree
           << "\t" << (v.passes_necessary ? 1 : 0) << "\t" << v.ext_upper << "\t"
           << v.final_upper.str() << "\t" << classification_name(v.classification) << "\t"
           << (v.passes_necessary ? (check_implication(c) ? "1" : "0") : "") << "\n";
    }
    return os.str();
}

inline std::string render_hirsch_pretty(Genus g, BundleType F, BundleType E,
                                        const Enumeration& en) {
    std::ostringstream os;
    os << "map configurations F=" << type_label(F) << " -> E=" << type_label(E) << ", genus "
       << g.value() << ": " << en.rows.size() << " configs\n";
    for (const auto& [c, v] : en.rows) {
        os << "  K=(" << c.r_K << "," << c.d_K << ") I=" << type_label(c.I())
           << " Q=" << type_label(c.Q()) << " d_T=" << c.d_T
           << "  necessary=" << (v.passes_necessary ? "yes" : "no")
           << " ext<=" << v.ext_upper << " final<=" << v.final_upper.str() << "  "
           << classification_name(v.classification) << "\n";
    }
    for (const std::string& w : en.warnings) os << "  warning: " << w << "\n";
    return os.str();
}

// ---------------------------------------------------------------- sweep ----

inline std::string render_sweep_tsv(const SweepReport& rep) {
    std::ostringstream os;
    os << "g\trank\tdegree\th\tchain_len\tterminal_rank\tterminal_degree\tmu_total\t"
          "beta_range\tlambda_dim\tdivisibility\tdegree_rel\tmu_ledger\tbrauer\tok\n";
    for (const SweepRow& r : rep.rows) {
        os << rep.genus.value() << "\t" << r.type.rank << "\t" << r.type.degree << "\t" << r.h
           << "\t" << r.chain_len << "\t" << r.terminal.rank << "\t" << r.terminal.degree << "\t"
           << r.mu_total << "\t" << r.beta_range_ok << "\t" << r.lambda_dim_ok << "\t"
           << r.divisibility_ok << "\t" << r.degree_rel_ok << "\t" << r.mu_ledger_ok << "\t"
           << r.brauer_ok << "\t" << r.ok() << "\n";
    }
    return os.str();
}

inline std::string render_sweep_summary(const SweepReport& rep) {
    std::ostringstream os;
    os << "sweep genus " << rep.genus.value() << ", rank 1.." << rep.max_rank << ", |degree| <= "
       << rep.max_degree << ": " << rep.passes << " pass, " << rep.failures << " fail\n";
    for (const SweepRow& r : rep.rows)
        for (const std::string& f : r.failures)
            os << "  FAIL " << type_label(r.type) << ": " << f << "\n";
    return os.str();
}

} // namespace moduli
