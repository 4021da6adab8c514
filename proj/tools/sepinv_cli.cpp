#include <iostream>

#include <CLI11.hpp>

#include "sepinv/cli.hpp"

int main(int argc, char** argv) {
    using sepinv::cli::RunConfig;
    CLI::App app{"Separating invariants workbench"};
    app.require_subcommand(1);
    RunConfig cfg;
    std::size_t max_basis = 0, max_pairs = 0;
    std::uint64_t budget = 0;

    auto add_common = [&](CLI::App* sub) {
        sub->add_option("-o,--output", cfg.output, "Write the report (or DOT) to this file");
        sub->add_option("--max-basis", max_basis, "Groebner basis size cap")->check(CLI::PositiveNumber);
        sub->add_option("--max-pairs", max_pairs, "Groebner pair queue cap")->check(CLI::PositiveNumber);
        sub->add_option("--monomial-budget", budget, "Per-call monomial budget")->check(CLI::PositiveNumber);
    };
    auto add_scene = [&](CLI::App* sub) {
        sub->add_option("-s,--scene", cfg.scene_path, "Scene JSON file")->required()->check(CLI::ExistingFile);
        sub->add_option("--assume", cfg.assume, "Extra hypothesis flag (connected, normal, cohen_macaulay, irreducible)");
        add_common(sub);
    };

    auto* refl = app.add_subcommand("reflections", "Classify elements by fixed-locus codimension");
    add_scene(refl);

    auto* graph = app.add_subcommand("vsep-graph", "Component graph of the separating variety as DOT");
    add_scene(graph);
    graph->add_option("-k", cfg.k, "Report connectedness in this codimension only");

    auto* sep = app.add_subcommand("check-separating", "Decide whether candidates separate");
    add_scene(sep);
    sep->add_option("--method", cfg.method, "groebner or points")->check(CLI::IsMember({"groebner", "points"}));
    sep->add_option("--candidate", cfg.candidates, "Candidate invariant (repeatable; overrides the scene)");
    sep->add_option("--powers", cfg.powers, "Extension degrees for the points method")->delimiter(',');
    sep->add_option("--point-cap", cfg.point_cap, "Enumeration cap for the points method");

    auto* gamma = app.add_subcommand("gamma-bound", "Bounds on the size of a separating set");
    add_scene(gamma);

    auto* inv = app.add_subcommand("invariants", "Invariants of each degree up to a bound");
    add_scene(inv);
    inv->add_option("--max-degree", cfg.max_degree, "Largest degree (default |G|)");

    auto* gb = app.add_subcommand("gb", "Reduced Groebner basis of an ideal file");
    gb->add_option("-i,--ideal", cfg.ideal_path, "Ideal file")->required()->check(CLI::ExistingFile);
    gb->add_option("--order", cfg.order, "grevlex or lex")->check(CLI::IsMember({"grevlex", "lex"}));
    add_common(gb);

    auto* mol = app.add_subcommand("molien", "Molien series coefficients");
    add_scene(mol);
    mol->add_option("-t,--terms", cfg.terms, "Number of coefficients")->check(CLI::PositiveNumber);

    auto* cross = app.add_subcommand("crosscheck-1-5", "Compare V_sep connectedness with X connectedness plus generation");
    cross->alias("crosscheck");
    add_scene(cross);
    cross->add_option("-k", cfg.k, "Single codimension (default all)");

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::CallForAllHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return sepinv::cli::bad_input;
    }
    cfg.subcommand = app.get_subcommands().front()->get_name();
    if (max_basis) cfg.max_basis = max_basis;
    if (max_pairs) cfg.max_pairs = max_pairs;
    if (budget) cfg.monomial_budget = budget;
    return sepinv::cli::run(cfg, std::cout, std::cerr);
}
