#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

namespace entgraph {

// Exit codes: 0 success, 1 verification mismatch / no realizing state,
// 2 input error, 3 numerical error.
struct CommandOutcome {
    int exit_code = 0;
    std::string summary;
    std::vector<std::string> paths_written;
};

struct SynthOptions {
    std::optional<double> alpha; // pins alpha; gamma = alpha*sqrt(2/k), beta from normalization
};

CommandOutcome cmd_synth(const std::string& graph_path, const std::string& out_state_path,
                         const SynthOptions& options = {});

CommandOutcome cmd_analyze(const std::string& state_path,
                           const std::optional<std::string>& dot_out_path = std::nullopt,
                           const std::optional<std::string>& json_out_path = std::nullopt);

CommandOutcome cmd_verify(const std::string& graph_path, const std::string& state_path);

CommandOutcome cmd_catalog(const std::string& name, int n, const std::vector<double>& params,
                           std::optional<double> alpha, const std::string& out_state_path);

CommandOutcome cmd_selftest(int max_n, int samples, std::uint64_t seed);

} // namespace entgraph
