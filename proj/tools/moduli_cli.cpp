// moduli — exact descent calculator for types of bundles on a curve.
//
// Subcommands:
//   chain   reduction chain of a type down to a terminal type
//   mu      composite map ledger and fixed-determinant report
//   verify  exhaustive sweep of all identities over a (rank, degree) box
//   hirsch  enumerate and classify kernel/image/torsion configurations
//   brauer  transport certificate for the class pulled back along mu
//
// Exit codes: 0 success, 1 invariant violation / failed sweep, 2 invalid input.

#include <iostream>
#include <string>

#include <CLI11.hpp>

#include "moduli/moduli.hpp"

namespace {

using namespace moduli;

int run_chain(i64 g, i64 rank, i64 degree, const std::string& format) {
    ReductionChain c = descent_chain(Genus(g), BundleType{rank, degree});
    if (format == "json")
        std::cout << render_chain_json(c).dump(2) << "\n";
    else if (format == "tsv")
        std::cout << render_chain_tsv(c);
    else
        std::cout << render_chain_pretty(c);
    return 0;
}

int run_mu(i64 g, i64 rank, i64 degree, const std::string& format) {
    Genus genus(g);
    BundleType t{rank, degree};
    MuTree tree = compose_mu(genus, t);
    FixedDetReport fd = fixed_det_report(genus, t);
    if (format == "json")
        std::cout << render_mu_json(tree, &fd).dump(2) << "\n";
    else if (format == "tsv")
        std::cout << render_mu_tsv(tree);
    else
        std::cout << render_mu_pretty(tree, &fd);
    return 0;
}

int run_verify(i64 g, i64 max_rank, i64 max_degree, i64 jobs) {
    SweepReport rep = run_verify_sweep(Genus(g), max_rank, max_degree, jobs);
    std::cout << render_sweep_tsv(rep);
    std::cerr << render_sweep_summary(rep);
    return rep.failures == 0 ? 0 : 1;
}

int run_hirsch(i64 g, i64 rf, i64 df, i64 re, i64 de, i64 max_dt, const std::string& format) {
    Genus genus(g);
    BundleType F{rf, df}, E{re, de};
    Enumeration en = enumerate_configs(genus, F, E, max_dt, default_jobs());
    if (format == "json")
        std::cout << render_hirsch_json(genus, F, E, max_dt, en).dump(2) << "\n";
    else if (format == "tsv")
        std::cout << render_hirsch_tsv(genus, en);
    else
        std::cout << render_hirsch_pretty(genus, F, E, en);
    for (const std::string& w : en.warnings) std::cerr << "warning: " << w << "\n";
    return 0;
}

int run_brauer(i64 g, i64 rank, i64 degree, bool trace, const std::string& format) {
    Derivation d = verify_main(Genus(g), BundleType{rank, degree});
    if (format == "json") {
        std::cout << render_derivation_json(d).dump(2) << "\n";
    } else if (trace) {
        std::cout << render_derivation_pretty(d, true);
    } else {
        std::cout << "verdict: " << (d.equal ? "equal" : "not-equal") << "   "
                  << d.start.generator << " transports to " << d.final_expr().generator
                  << " with coeff " << d.final_expr().coeff << " over " << d.steps.size()
                  << " edges\n";
    }
    return d.equal ? 0 : 1;
}

void check_format(const std::string& format) {
    if (format != "pretty" && format != "json" && format != "tsv")
        throw invalid_input("unknown format '" + format + "' (pretty, json or tsv)");
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"exact descent calculator for moduli types of bundles on a curve"};
    app.require_subcommand(1);

    i64 genus = 0, rank = 1, degree = 0;
    i64 max_rank = 1, max_degree = 1, jobs = moduli::default_jobs();
    i64 rank_f = 1, degree_f = 0, rank_e = 1, degree_e = 0, max_dt = 2;
    std::string format = "pretty";
    bool trace = false;

    CLI::App* chain = app.add_subcommand("chain", "reduction chain for a type");
    chain->add_option("--genus", genus, "curve genus (>= 2)")->required();
    chain->add_option("--rank", rank, "bundle rank (>= 1)")->required();
    chain->add_option("--degree", degree, "bundle degree")->required();
    chain->add_option("--format", format, "pretty|json|tsv");

    CLI::App* mu = app.add_subcommand("mu", "composite map ledger and fixed-determinant report");
    mu->add_option("--genus", genus)->required();
    mu->add_option("--rank", rank)->required();
    mu->add_option("--degree", degree)->required();
    mu->add_option("--format", format, "pretty|json|tsv");

    CLI::App* verify = app.add_subcommand("verify", "sweep all identities over a box of types");
    verify->add_option("--genus", genus)->required();
    verify->add_option("--max-rank", max_rank, "sweep ranks 1..N")->required();
    verify->add_option("--max-degree", max_degree, "sweep degrees -N..N")->required();
    verify->add_option("--jobs", jobs, "worker threads (default: available parallelism)");

    CLI::App* hirsch =
        app.add_subcommand("hirsch", "enumerate kernel/image/torsion configurations F -> E");
    hirsch->add_option("--genus", genus)->required();
    hirsch->add_option("--rank-f", rank_f, "rank of F")->required();
    hirsch->add_option("--degree-f", degree_f, "degree of F")->required();
    hirsch->add_option("--rank-e", rank_e, "rank of E")->required();
    hirsch->add_option("--degree-e", degree_e, "degree of E")->required();
    hirsch->add_option("--max-dt", max_dt, "torsion degree bound (default 2)");
    hirsch->add_option("--format", format, "pretty|json|tsv");

    CLI::App* brauer = app.add_subcommand("brauer", "class transport certificate");
    brauer->add_option("--genus", genus)->required();
    brauer->add_option("--rank", rank)->required();
    brauer->add_option("--degree", degree)->required();
    brauer->add_flag("--trace", trace, "print the full rule trace with licenses");
    brauer->add_option("--format", format, "pretty|json");

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }

    try {
        check_format(format);
        if (chain->parsed()) return run_chain(genus, rank, degree, format);
        if (mu->parsed()) return run_mu(genus, rank, degree, format);
        if (verify->parsed()) return run_verify(genus, max_rank, max_degree, jobs);
        if (hirsch->parsed())
            return run_hirsch(genus, rank_f, degree_f, rank_e, degree_e, max_dt, format);
        if (brauer->parsed()) return run_brauer(genus, rank, degree, trace, format);
    } catch (const moduli::invalid_input& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const moduli::error& e) {
        std::cerr << "internal error: " << e.what() << "\n";
        return 1;
    }
    return 2;
}
