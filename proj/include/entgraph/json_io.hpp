#pragma once

#include <string>
#include <variant>

#include "entgraph/analysis.hpp"
#include "entgraph/states.hpp"

namespace entgraph {

// State JSON: {"n_qubits": N, "amplitudes": [[re, im], ...]} with 2^N entries.
std::string state_to_json(const StateVector& s);
StateVector state_from_json(const std::string& text);

// Ensemble JSON: {"n_qubits": N, "components": [{"weight": w, "amplitudes": [...]}, ...]}.
std::string ensemble_to_json(const PureEnsemble& e);
PureEnsemble ensemble_from_json(const std::string& text);

/// Dispatch on the document shape: "amplitudes" at top level means a state,
/// "components" an ensemble.
std::variant<StateVector, PureEnsemble> state_or_ensemble_from_json(const std::string& text);

/// Report JSON with concurrences rounded to 12 significant digits.
std::string report_to_json(const AnalysisReport& r);

std::string read_text_file(const std::string& path);
void write_text_file(const std::string& path, const std::string& content);

} // namespace entgraph
