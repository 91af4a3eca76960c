#pragma once

#include <array>
#include <optional>
#include <string>
#include <vector>

#include "entgraph/cmatrix.hpp"
#include "entgraph/graph.hpp"
#include "entgraph/states.hpp"

namespace entgraph {

/// 4x4 density matrix of a qubit pair (i, j) in the basis |q_i q_j> ordered
/// 00, 01, 10, 11. Hermiticity and unit trace are checked on construction;
/// positivity is enforced where spectra are taken (clamp policy in
/// tolerances.hpp).
struct TwoQubitDensity {
    ComplexMatrix matrix;
    int i = 0;
    int j = 0;

    TwoQubitDensity(ComplexMatrix m, int i, int j);
};

struct PairReport {
    int i = 0;
    int j = 0;
    double concurrence = 0;
    double pt_min_eigenvalue = 0;
    bool is_entangled = false;
};

struct AnalysisReport {
    int n_qubits = 0;
    std::vector<PairReport> pairs; // lexicographic pair order
    EntangledGraph realized_graph;
    std::optional<EntangledGraph> target_graph;
    std::optional<bool> match;
};

/// Partial trace over all qubits except i and j (i < j).
TwoQubitDensity reduce_pair(const StateVector& s, int i, int j);
TwoQubitDensity reduce_pair(const PureEnsemble& e, int i, int j);

/// (sigma_y x sigma_y) conj(rho) (sigma_y x sigma_y). Hermitian, PSD, same
/// eigenvalue multiset as rho.
ComplexMatrix spin_flip(const TwoQubitDensity& rho);

/// Wootters concurrence. The eigenvalues of rho * spin_flip(rho) are obtained
/// from the Hermitian surrogate sqrt(rho) * spin_flip(rho) * sqrt(rho), which
/// shares the spectrum, so only Hermitian matrices are ever diagonalized.
double concurrence(const TwoQubitDensity& rho);

/// Minimum eigenvalue of the partial transpose. Negative iff entangled
/// (necessary and sufficient for two qubits).
double pt_min_eigenvalue(const TwoQubitDensity& rho);

/// Per-pair verdicts plus the extracted graph. A pair is an edge iff its
/// concurrence exceeds tol::edge_concurrence and a non-edge iff it is below
/// tol::nonedge_concurrence; values inside the dead band, or disagreement
/// with the partial-transpose sign, raise numerical_error.
AnalysisReport realized_graph(const StateVector& s);
AnalysisReport realized_graph(const PureEnsemble& e);

AnalysisReport verify_realization(const EntangledGraph& g, const StateVector& s);
AnalysisReport verify_realization(const EntangledGraph& g, const PureEnsemble& e);

// Closed-form oracles (pure formula evaluations; used by tests and selftest).
// Valid for the general construction on five or more qubits.

/// Reduced density matrix of an edge pair, from the pair's graph stats.
TwoQubitDensity cf_reduced_edge(const SynthesisParams& p, const GraphStats& st);

/// Reduced density matrix of a non-edge pair.
TwoQubitDensity cf_reduced_nonedge(const SynthesisParams& p, const GraphStats& st);

/// Spectrum of R = rho * spin_flip(rho) for a non-edge pair, descending:
/// {a*d, a*d, gamma^4((n_ij + sqrt(n_i n_j))/k)^2, gamma^4((n_ij - sqrt(n_i n_j))/k)^2}
/// with a = alpha^2 + gamma^2 (k - n_i - n_j)/k and d = beta^2.
std::array<double, 4> cf_nonedge_R_spectrum(const SynthesisParams& p, const GraphStats& st);

/// Minimum PT eigenvalue of the star-state hub pair, N >= 5:
/// (alpha^2/(2N)) (N - 2 - sqrt(N^2 - 4N + 8)); negative for every alpha > 0.
double cf_star_pt_min_edge(double alpha, int n);

/// Minimum PT eigenvalue of a star-state non-hub pair, N >= 5:
/// (N - 2 alpha^2 - sqrt(delta)) / (2N),
/// delta = N^2 - 4 alpha^2 (N-1) N + 4 alpha^4 (2 + (N-2) N).
double cf_star_pt_min_nonedge(double alpha, int n);

/// Separability threshold for star-state non-hub pairs: sqrt(N^2-2N)/(N-1).
double cf_star_alpha_bound(int n);

struct ConditionVerdict {
    std::string name;
    bool passed = false;
    double slack = 0; // >= 0 when satisfied
};

/// Diagnostic check of the two synthesis conditions:
/// cond2: 0 < gamma^2 k <= 4 alpha^2 (edges entangled),
/// cond1: (alpha beta)^2 >= gamma^4 > 0 (non-edges separable).
std::vector<ConditionVerdict> validate_params(const SynthesisParams& p);

} // namespace entgraph
