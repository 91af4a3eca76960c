#pragma once

// Numeric policy shared by the matrix kernel and the analysis pipeline.
namespace entgraph::tol {

inline constexpr double hermiticity = 1e-10;     // max |m - m^dag| accepted as Hermitian
inline constexpr double psd_floor = -1e-10;      // eigenvalues in [psd_floor, 0) are clamped to 0
inline constexpr double jacobi_target = 1e-14;   // off-diagonal Frobenius norm at convergence
inline constexpr double sqrt_residual = 1e-10;   // max |s*s - m| for the matrix square root
inline constexpr double normalization = 1e-12;   // state vectors, ensemble weights, params

// Verdict bands for realized-graph extraction. Synthesized states separate
// these by orders of magnitude; anything inside the dead band is an error,
// not a judgement call.
inline constexpr double edge_concurrence = 1e-6;     // entangled iff C above this
inline constexpr double nonedge_concurrence = 1e-9;  // separable iff C below this
inline constexpr double pt_negative = 1e-9;          // entangled iff PT min below -this

} // namespace entgraph::tol
