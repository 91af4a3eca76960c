#pragma once

#include <cstddef>
#include <cstdint>
#include <vector>

#include "entgraph/cmatrix.hpp"
#include "entgraph/graph.hpp"

namespace entgraph {

inline constexpr int kMinQubits = 2;
inline constexpr int kMaxQubits = 16; // 2^16 amplitudes; safety rail

/// Pure N-qubit state. Basis index b assigns qubit q the bit 2^(N-q), i.e.
/// qubit 1 is the most significant bit, matching left-to-right ket notation.
/// Normalized within tol::normalization by construction.
class StateVector {
public:
    StateVector(int n_qubits, std::vector<cplx> amplitudes);

    int n_qubits() const { return n_qubits_; }
    std::size_t dim() const { return amplitudes_.size(); }
    const std::vector<cplx>& amplitudes() const { return amplitudes_; }
    cplx amplitude(std::size_t index) const { return amplitudes_[index]; }

    /// Bit mask of qubit q (1-based) inside a basis index.
    std::size_t qubit_mask(int q) const;

    int nonzero_count() const;

    bool operator==(const StateVector& other) const = default;

private:
    int n_qubits_;
    std::vector<cplx> amplitudes_;
};

struct EnsembleComponent {
    double weight; // in (0, 1]
    StateVector state;
};

/// Mixed state as a weighted list of pure components; never materializes
/// 2^N x 2^N matrices. Weights sum to 1 within tol::normalization.
class PureEnsemble {
public:
    PureEnsemble(int n_qubits, std::vector<EnsembleComponent> components);

    int n_qubits() const { return n_qubits_; }
    const std::vector<EnsembleComponent>& components() const { return components_; }

private:
    int n_qubits_;
    std::vector<EnsembleComponent> components_;
};

/// Amplitude triple (alpha, beta, gamma) for the k-edge construction.
/// Construction enforces normalization; the entanglement/separability
/// conditions are reported separately by validate_params.
struct SynthesisParams {
    double alpha = 0;
    double beta = 0;
    double gamma = 0;
    int k = 0;

    static SynthesisParams create(double alpha, double beta, double gamma, int k);
};

/// The reference parameter choice: alpha = k/sqrt(k^2+2k+4), beta = 2*alpha/k,
/// gamma = alpha*sqrt(2/k). Normalized exactly; satisfies both synthesis
/// conditions for every k >= 1 (the separability one with equality).
SynthesisParams default_params(int k);

/// alpha|0..0> + beta|1..1> + sum over edges of (gamma/sqrt(k))|1>_i|1>_j|0..0>.
/// At most k+2 nonzero amplitudes.
StateVector general_construction(const EntangledGraph& g, const SynthesisParams& p);

// Named constructors.
StateVector separable_zero(int n);
StateVector bell_pair_product(int n, int i, int j);
StateVector w_state(int n);
StateVector ghz_state(int n);
StateVector chain3(double alpha, double beta, double gamma);
StateVector superposed_bells3(double alpha);
StateVector star_state(int n, double alpha);
StateVector dur_star(int n);
StateVector star4();

/// Uniform mixture of Bell-pair product states, one per edge.
PureEnsemble dur_molecule(const EntangledGraph& g);

/// Relabel qubits: the output amplitude at index b' equals the input
/// amplitude at b, where bit perm[q-1] of b' is bit q of b. perm must be a
/// bijection of {1..N} given as perm[q-1] = image of q.
StateVector permute_qubits(const StateVector& s, const std::vector<int>& perm);

/// Construct a pure state realizing g, dispatching between the catalog and
/// the general construction, always verifying the result before returning.
/// Throws synthesis_error with a near-miss concurrence table if nothing in
/// the search family realizes g.
StateVector synthesize(const EntangledGraph& g);

} // namespace entgraph
