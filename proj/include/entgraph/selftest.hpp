#pragma once

#include <cstdint>
#include <functional>
#include <optional>
#include <string>
#include <vector>

namespace entgraph {

struct SelftestConfig {
    int max_n = 8;          // exhaustive graphs up to min(max_n, 5), sampled above
    int samples = 200;      // random graphs per N above 5
    std::uint64_t seed = 12345;
};

struct CriterionResult {
    int id = 0;
    std::string name;
    bool passed = false;
    std::string detail;
    // First failing instance, when one exists in graph/state form.
    std::optional<std::string> failing_graph;
    std::optional<std::string> failing_state_json;
};

/// Run the full verification suite: graph round-trips, sparse support,
/// closed-form cross-checks, star-state phase boundary, W-state values,
/// known counterexamples, the three-qubit chain family, mixed molecules,
/// and concurrence/partial-transpose agreement. Deterministic for a fixed
/// config. The callback, when given, fires once per finished criterion.
std::vector<CriterionResult>
run_selftest(const SelftestConfig& config,
             const std::function<void(const CriterionResult&)>& on_result = nullptr);

std::string format_result_line(const CriterionResult& r);

} // namespace entgraph
