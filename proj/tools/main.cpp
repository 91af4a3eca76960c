#include <cstdint>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "entgraph/commands.hpp"

namespace {

int finish(const entgraph::CommandOutcome& outcome) {
    if (!outcome.summary.empty()) {
        (outcome.exit_code == 0 ? std::cout : std::cerr) << outcome.summary;
    }
    return outcome.exit_code;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"Synthesize and analyze multi-qubit states with a prescribed "
                 "pairwise-entanglement graph"};
    app.require_subcommand(1);

    // synth
    std::string synth_graph, synth_out;
    double synth_alpha = -1.0;
    auto* synth = app.add_subcommand("synth", "Build a pure state realizing a graph file");
    synth->add_option("-g,--graph", synth_graph, "graph file")->required();
    synth->add_option("-o,--out", synth_out, "output state JSON")->required();
    auto* synth_alpha_opt =
        synth->add_option("--alpha", synth_alpha, "pin alpha of the construction");

    // analyze
    std::string analyze_state, analyze_dot, analyze_json;
    auto* analyze = app.add_subcommand("analyze", "Concurrence/PT report for a state file");
    analyze->add_option("-s,--state", analyze_state, "state or ensemble JSON")->required();
    auto* dot_opt = analyze->add_option("--dot", analyze_dot, "write realized graph as DOT");
    auto* json_opt = analyze->add_option("--json", analyze_json, "write report JSON");

    // verify
    std::string verify_graph, verify_state;
    auto* verify = app.add_subcommand("verify", "Check that a state realizes a graph");
    verify->add_option("-g,--graph", verify_graph, "graph file")->required();
    verify->add_option("-s,--state", verify_state, "state or ensemble JSON")->required();

    // catalog
    std::string cat_name, cat_out;
    int cat_n = 0;
    double cat_alpha = -1.0;
    std::vector<double> cat_params;
    auto* catalog = app.add_subcommand("catalog", "Write a named state to a file");
    catalog->add_option("name", cat_name,
                        "state name: zero bell w ghz chain3 bells3 star durstar star4")
        ->required();
    catalog->add_option("n", cat_n, "qubit count")->required();
    catalog->add_option("params", cat_params, "extra positional parameters (bell: i j; "
                                              "chain3: alpha beta gamma)");
    auto* cat_alpha_opt = catalog->add_option("--alpha", cat_alpha, "amplitude parameter");
    catalog->add_option("-o,--out", cat_out, "output state JSON")->required();

    // selftest
    int st_max_n = 8;
    int st_samples = 200;
    std::uint64_t st_seed = 12345;
    auto* selftest = app.add_subcommand("selftest", "Run the full verification suite");
    selftest->add_option("--max-n", st_max_n, "largest qubit count (3..8)");
    selftest->add_option("--samples", st_samples, "random graphs per N above 5");
    selftest->add_option("--seed", st_seed, "random seed");

    CLI11_PARSE(app, argc, argv);

    if (synth->parsed()) {
        entgraph::SynthOptions options;
        if (synth_alpha_opt->count() > 0) options.alpha = synth_alpha;
        return finish(entgraph::cmd_synth(synth_graph, synth_out, options));
    }
    if (analyze->parsed()) {
        std::optional<std::string> dot_path, json_path;
        if (dot_opt->count() > 0) dot_path = analyze_dot;
        if (json_opt->count() > 0) json_path = analyze_json;
        return finish(entgraph::cmd_analyze(analyze_state, dot_path, json_path));
    }
    if (verify->parsed()) {
        return finish(entgraph::cmd_verify(verify_graph, verify_state));
    }
    if (catalog->parsed()) {
        std::optional<double> alpha;
        if (cat_alpha_opt->count() > 0) alpha = cat_alpha;
        return finish(entgraph::cmd_catalog(cat_name, cat_n, cat_params, alpha, cat_out));
    }
    if (selftest->parsed()) {
        return finish(entgraph::cmd_selftest(st_max_n, st_samples, st_seed));
    }
    return 0;
}
