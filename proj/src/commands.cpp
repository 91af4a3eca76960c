#include "entgraph/commands.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <functional>
#include <sstream>

#include "entgraph/analysis.hpp"
#include "entgraph/errors.hpp"
#include "entgraph/graph.hpp"
#include "entgraph/json_io.hpp"
#include "entgraph/selftest.hpp"
#include "entgraph/states.hpp"
#include "entgraph/tolerances.hpp"

namespace entgraph {

namespace {

constexpr int kExitOk = 0;
constexpr int kExitMismatch = 1;
constexpr int kExitInput = 2;
constexpr int kExitNumerical = 3;

CommandOutcome guarded(const std::function<CommandOutcome()>& body) {
    try {
        return body();
    } catch (const parse_error& ex) {
        return {kExitInput, std::string("input error: ") + ex.what(), {}};
    } catch (const std::invalid_argument& ex) {
        return {kExitInput, std::string("input error: ") + ex.what(), {}};
    } catch (const synthesis_error& ex) {
        return {kExitMismatch, ex.what(), {}};
    } catch (const numerical_error& ex) {
        return {kExitNumerical, std::string("numerical error: ") + ex.what(), {}};
    }
}

std::string edge_list(const std::vector<Edge>& edges) {
    if (edges.empty()) return "(none)";
    std::string out;
    for (const auto& [i, j] : edges) {
        if (!out.empty()) out += " ";
        out += "(" + std::to_string(i) + "," + std::to_string(j) + ")";
    }
    return out;
}

std::string pair_table(const AnalysisReport& report) {
    std::string out = "pair   concurrence       pt_min            verdict\n";
    for (const auto& pr : report.pairs) {
        char buf[128];
        std::snprintf(buf, sizeof buf, "%d-%-4d %-17.12g %-17.12g %s\n", pr.i, pr.j,
                      pr.concurrence, pr.pt_min_eigenvalue,
                      pr.is_entangled ? "entangled" : "separable");
        out += buf;
    }
    return out;
}

std::map<Edge, double> concurrence_labels(const AnalysisReport& report) {
    std::map<Edge, double> labels;
    for (const auto& pr : report.pairs) {
        if (pr.is_entangled) labels[{pr.i, pr.j}] = pr.concurrence;
    }
    return labels;
}

SynthesisParams override_params(double alpha, int k) {
    if (!(alpha > 0.0) || !(alpha < 1.0)) {
        throw std::invalid_argument("--alpha must be in (0, 1)");
    }
    const double gamma = alpha * std::sqrt(2.0 / k);
    const double rest = 1.0 - alpha * alpha - gamma * gamma;
    if (rest < 0.0) {
        throw std::invalid_argument("--alpha too large: alpha^2 (1 + 2/k) exceeds 1");
    }
    return SynthesisParams::create(alpha, std::sqrt(rest), gamma, k);
}

} // namespace

CommandOutcome cmd_synth(const std::string& graph_path, const std::string& out_state_path,
                         const SynthOptions& options) {
    return guarded([&]() -> CommandOutcome {
        EntangledGraph g = parse_graph(read_text_file(graph_path));

        StateVector state = [&]() {
            if (options.alpha && g.edge_count() >= 1) {
                return general_construction(g, override_params(*options.alpha, g.edge_count()));
            }
            return synthesize(g);
        }();

        AnalysisReport report = verify_realization(g, state);
        std::string summary = pair_table(report);
        if (!report.match.value_or(false)) {
            summary += "mismatch: realized " + edge_list(report.realized_graph.edges()) +
                       " vs target " + edge_list(g.edges()) + "\n";
            return {kExitMismatch, summary, {}};
        }
        write_text_file(out_state_path, state_to_json(state));
        summary += "match: realized graph equals target (" + std::to_string(g.edge_count()) +
                   " edges)\nwrote " + out_state_path + "\n";
        return {kExitOk, summary, {out_state_path}};
    });
}

CommandOutcome cmd_analyze(const std::string& state_path,
                           const std::optional<std::string>& dot_out_path,
                           const std::optional<std::string>& json_out_path) {
    return guarded([&]() -> CommandOutcome {
        auto loaded = state_or_ensemble_from_json(read_text_file(state_path));
        AnalysisReport report = std::visit([](const auto& s) { return realized_graph(s); },
                                           loaded);

        std::string summary = pair_table(report);
        summary += "realized edges: " + edge_list(report.realized_graph.edges()) + "\n";

        CommandOutcome outcome{kExitOk, "", {}};
        if (dot_out_path) {
            const auto labels = concurrence_labels(report);
            write_text_file(*dot_out_path, emit_dot(report.realized_graph, &labels));
            summary += "wrote " + *dot_out_path + "\n";
            outcome.paths_written.push_back(*dot_out_path);
        }
        if (json_out_path) {
            write_text_file(*json_out_path, report_to_json(report));
            summary += "wrote " + *json_out_path + "\n";
            outcome.paths_written.push_back(*json_out_path);
        }
        outcome.summary = std::move(summary);
        return outcome;
    });
}

CommandOutcome cmd_verify(const std::string& graph_path, const std::string& state_path) {
    return guarded([&]() -> CommandOutcome {
        EntangledGraph g = parse_graph(read_text_file(graph_path));
        auto loaded = state_or_ensemble_from_json(read_text_file(state_path));
        AnalysisReport report =
            std::visit([&](const auto& s) { return verify_realization(g, s); }, loaded);

        std::string summary = pair_table(report);
        if (report.match.value_or(false)) {
            summary += "match: realized graph equals target\n";
            return {kExitOk, summary, {}};
        }
        std::vector<Edge> extra, missing;
        for (const auto& e : report.realized_graph.edges()) {
            if (!g.has_edge(e.first, e.second)) extra.push_back(e);
        }
        for (const auto& e : g.edges()) {
            if (!report.realized_graph.has_edge(e.first, e.second)) missing.push_back(e);
        }
        summary += "mismatch: extra edges " + edge_list(extra) + "; missing edges " +
                   edge_list(missing) + "\n";
        return {kExitMismatch, summary, {}};
    });
}

CommandOutcome cmd_catalog(const std::string& name, int n, const std::vector<double>& params,
                           std::optional<double> alpha, const std::string& out_state_path) {
    return guarded([&]() -> CommandOutcome {
        auto need_alpha = [&](double fallback) { return alpha.value_or(fallback); };

        StateVector state = [&]() -> StateVector {
            if (name == "zero") return separable_zero(n);
            if (name == "bell") {
                if (params.size() != 2) {
                    throw std::invalid_argument("catalog bell needs two vertex arguments: i j");
                }
                return bell_pair_product(n, static_cast<int>(params[0]),
                                         static_cast<int>(params[1]));
            }
            if (name == "w") return w_state(n);
            if (name == "ghz") return ghz_state(n);
            if (name == "chain3") {
                if (n != 3) throw std::invalid_argument("chain3 is defined for n = 3");
                if (params.empty()) return chain3(0.5, 0.5, 0.5);
                if (params.size() != 3) {
                    throw std::invalid_argument(
                        "catalog chain3 needs three amplitudes: alpha beta gamma");
                }
                return chain3(params[0], params[1], params[2]);
            }
            if (name == "bells3") {
                if (n != 3) throw std::invalid_argument("bells3 is defined for n = 3");
                return superposed_bells3(need_alpha(0.5));
            }
            if (name == "star") return star_state(n, need_alpha(0.5));
            if (name == "durstar") return dur_star(n);
            if (name == "star4") {
                if (n != 4) throw std::invalid_argument("star4 is defined for n = 4");
                return star4();
            }
            throw std::invalid_argument(
                "unknown catalog state '" + name +
                "' (known: zero bell w ghz chain3 bells3 star durstar star4)");
        }();

        write_text_file(out_state_path, state_to_json(state));
        return {kExitOk, "wrote " + out_state_path + "\n", {out_state_path}};
    });
}

CommandOutcome cmd_selftest(int max_n, int samples, std::uint64_t seed) {
    return guarded([&]() -> CommandOutcome {
        SelftestConfig config;
        config.max_n = max_n;
        config.samples = samples;
        config.seed = seed;

        CommandOutcome outcome{kExitOk, "", {}};
        std::string summary;
        int passed = 0;
        std::optional<CriterionResult> first_failure;

        const auto results = run_selftest(config);
        for (const auto& r : results) {
            summary += format_result_line(r) + "\n";
            if (r.passed) {
                ++passed;
            } else if (!first_failure) {
                first_failure = r;
            }
        }
        summary += "selftest: " + std::to_string(passed) + "/" +
                   std::to_string(results.size()) + " criteria passed\n";

        if (first_failure) {
            if (first_failure->failing_graph) {
                write_text_file("selftest_fail_graph.txt", *first_failure->failing_graph);
                summary += "dumped selftest_fail_graph.txt\n";
                outcome.paths_written.push_back("selftest_fail_graph.txt");
            }
            if (first_failure->failing_state_json && !first_failure->failing_state_json->empty()) {
                write_text_file("selftest_fail_state.json", *first_failure->failing_state_json);
                summary += "dumped selftest_fail_state.json\n";
                outcome.paths_written.push_back("selftest_fail_state.json");
            }
            outcome.exit_code = kExitMismatch;
        }
        outcome.summary = std::move(summary);
        return outcome;
    });
}

} // namespace entgraph
