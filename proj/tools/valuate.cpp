#include <iostream>

#include <CLI11.hpp>

#include "valuate/cli_run.hpp"

using valuate::Command;

namespace {

void add_caps_flags(CLI::App* app, Command& cmd) {
    app->add_option("--sigma-cap", cmd.caps.sigma_cap,
                    "cap for the sigma scan (0 = 2*degree + 16)");
    app->add_option("--antimatter-deg-cap", cmd.caps.antimatter_deg_cap,
                    "degree cap for the antimatter witness search");
    app->add_option("--antimatter-height-cap", cmd.caps.antimatter_height_cap,
                    "coefficient cap for the antimatter witness search");
    app->add_option("--curtiss-cap", cmd.caps.curtiss_cap, "cap on N in (1+x)^N multipliers");
    app->add_option("--node-budget", cmd.caps.node_budget,
                    "node budget per bounded search (0 = unlimited)");
    app->add_flag("--json", cmd.json_output, "emit a JSON report");
    app->add_option("--root", cmd.root_choice, "positive root to take: largest|smallest|index:K");
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"valuate: classify the additive monoid N0[a] of a positive algebraic number"};
    app.require_subcommand(1);

    Command cmd;
    std::string input, input2;

    auto* classify = app.add_subcommand("classify", "full factorization-hierarchy classification");
    classify->add_option("poly", input, "polynomial, or rational:n/d")->required();
    add_caps_flags(classify, cmd);

    auto* atoms = app.add_subcommand("atoms", "atom set of the monoid");
    atoms->add_option("poly", input, "polynomial, or rational:n/d")->required();
    add_caps_flags(atoms, cmd);

    auto* factor = app.add_subcommand("factor", "enumerate factorizations of one element");
    factor->add_option("poly", input, "polynomial, or rational:n/d")->required();
    factor->add_option("--element", cmd.element, "element as a polynomial in a with nonnegative coefficients")
        ->required();
    factor->add_option("--exponent-cap", cmd.exponent_cap,
                       "exponent cap when alpha < 1 (completeness is then not claimed)");
    add_caps_flags(factor, cmd);

    auto* iso = app.add_subcommand("iso", "monoid isomorphism of two atomic valuations");
    iso->add_option("poly1", input, "first polynomial")->required();
    iso->add_option("poly2", input2, "second polynomial")->required();
    add_caps_flags(iso, cmd);

    auto* family = app.add_subcommand("family", "instantiate a counterexample family");
    family->add_option("name", cmd.family_name,
                       "eisenstein | ffm-not-fgm | ohfm | fgm-not-ohfm | ufm-baseline")
        ->required();
    family->add_option("--d", cmd.family_d, "degree / rank parameter")->required();
    family->add_option("--p", cmd.family_param, "prime p (or rational q for eisenstein)")
        ->required();
    add_caps_flags(family, cmd);

    auto* survey = app.add_subcommand("survey", "sweep |A| - deg m over the families");
    survey->add_option("--d-min", cmd.d_min, "least degree");
    survey->add_option("--d-max", cmd.d_max, "greatest degree");
    survey->add_option("--p-min", cmd.p_min, "least prime");
    survey->add_option("--p-max", cmd.p_max, "greatest prime");
    survey->add_option("--jobs", cmd.jobs, "worker threads over instances");
    add_caps_flags(survey, cmd);

    auto* group = app.add_subcommand("group-check",
                                     "certify N0[beta] = Z[beta] when no conjugate is positive");
    group->add_option("poly", input, "irreducible polynomial with no positive root")->required();
    add_caps_flags(group, cmd);

    CLI11_PARSE(app, argc, argv);

    if (classify->parsed()) cmd.verb = Command::Verb::Classify;
    if (atoms->parsed()) cmd.verb = Command::Verb::Atoms;
    if (factor->parsed()) cmd.verb = Command::Verb::Factor;
    if (iso->parsed()) cmd.verb = Command::Verb::Iso;
    if (family->parsed()) cmd.verb = Command::Verb::Family;
    if (survey->parsed()) cmd.verb = Command::Verb::Survey;
    if (group->parsed()) cmd.verb = Command::Verb::GroupCheck;

    cmd.inputs.clear();
    if (!input.empty()) cmd.inputs.push_back(input);
    if (!input2.empty()) cmd.inputs.push_back(input2);

    return valuate::run_command(cmd, std::cout, std::cerr);
}
