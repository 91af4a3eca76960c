#include "entgraph/analysis.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

#include "entgraph/errors.hpp"
#include "entgraph/tolerances.hpp"

namespace entgraph {

TwoQubitDensity::TwoQubitDensity(ComplexMatrix m, int i_, int j_)
    : matrix(std::move(m)), i(i_), j(j_) {
    if (matrix.rows() != 4 || matrix.cols() != 4) {
        throw std::invalid_argument("two-qubit density matrix must be 4x4");
    }
    if (!is_hermitian(matrix, tol::hermiticity)) {
        throw numerical_error("two-qubit density matrix is not Hermitian within tolerance");
    }
    if (std::abs(trace(matrix) - cplx{1.0, 0.0}) > tol::hermiticity) {
        throw numerical_error("two-qubit density matrix trace differs from 1");
    }
}

TwoQubitDensity reduce_pair(const StateVector& s, int i, int j) {
    const int n = s.n_qubits();
    if (i < 1 || j > n || i >= j) {
        throw std::invalid_argument("reduce_pair requires 1 <= i < j <= N");
    }
    const std::size_t mi = s.qubit_mask(i);
    const std::size_t mj = s.qubit_mask(j);
    const std::size_t both = mi | mj;

    ComplexMatrix rho(4, 4);
    for (std::size_t base = 0; base < s.dim(); ++base) {
        if (base & both) continue;
        cplx amp[4];
        amp[0] = s.amplitude(base);
        amp[1] = s.amplitude(base | mj);
        amp[2] = s.amplitude(base | mi);
        amp[3] = s.amplitude(base | both);
        for (int r = 0; r < 4; ++r) {
            if (amp[r] == cplx{}) continue;
            for (int c = 0; c < 4; ++c) {
                rho(r, c) += amp[r] * std::conj(amp[c]);
            }
        }
    }
    return TwoQubitDensity(std::move(rho), i, j);
}

TwoQubitDensity reduce_pair(const PureEnsemble& e, int i, int j) {
    ComplexMatrix rho(4, 4);
    for (const auto& comp : e.components()) {
        TwoQubitDensity part = reduce_pair(comp.state, i, j);
        for (int r = 0; r < 4; ++r) {
            for (int c = 0; c < 4; ++c) {
                rho(r, c) += comp.weight * part.matrix(r, c);
            }
        }
    }
    return TwoQubitDensity(std::move(rho), i, j);
}

namespace {

ComplexMatrix sigma_y_pair() {
    ComplexMatrix f(4, 4);
    f(0, 3) = -1.0;
    f(1, 2) = 1.0;
    f(2, 1) = 1.0;
    f(3, 0) = -1.0;
    return f;
}

} // namespace

ComplexMatrix spin_flip(const TwoQubitDensity& rho) {
    static const ComplexMatrix f = sigma_y_pair();
    return multiply(multiply(f, conjugate(rho.matrix)), f);
}

double concurrence(const TwoQubitDensity& rho) {
    const ComplexMatrix root = hermitian_sqrt(rho.matrix);
    const ComplexMatrix surrogate = multiply(multiply(root, spin_flip(rho)), root);
    Spectrum sp = hermitian_eigenvalues(surrogate);

    double value = 0;
    for (size_t idx = 0; idx < sp.eigenvalues.size(); ++idx) {
        double lam = sp.eigenvalues[idx];
        if (lam < 0.0) {
            if (lam < tol::psd_floor) {
                throw numerical_error("concurrence: surrogate eigenvalue " + std::to_string(lam) +
                                      " below the PSD tolerance");
            }
            lam = 0.0;
        }
        value += (idx == 0 ? 1.0 : -1.0) * std::sqrt(lam);
    }
    return std::clamp(value, 0.0, 1.0);
}

double pt_min_eigenvalue(const TwoQubitDensity& rho) {
    Spectrum sp = hermitian_eigenvalues(partial_transpose_second(rho.matrix));
    return sp.eigenvalues.back();
}

namespace {

PairReport judge_pair(const TwoQubitDensity& rho) {
    PairReport pr;
    pr.i = rho.i;
    pr.j = rho.j;
    pr.concurrence = concurrence(rho);
    pr.pt_min_eigenvalue = pt_min_eigenvalue(rho);

    const bool edge_by_c = pr.concurrence > tol::edge_concurrence;
    const bool nonedge_by_c = pr.concurrence < tol::nonedge_concurrence;
    if (!edge_by_c && !nonedge_by_c) {
        throw numerical_error("ambiguous concurrence " + std::to_string(pr.concurrence) +
                              " for pair (" + std::to_string(pr.i) + ", " + std::to_string(pr.j) +
                              "): inside the dead band (" +
                              std::to_string(tol::nonedge_concurrence) + ", " +
                              std::to_string(tol::edge_concurrence) + "]");
    }
    const bool edge_by_pt = pr.pt_min_eigenvalue < -tol::pt_negative;
    if (edge_by_c != edge_by_pt) {
        throw numerical_error("concurrence and partial-transpose criteria disagree for pair (" +
                              std::to_string(pr.i) + ", " + std::to_string(pr.j) +
                              "): C = " + std::to_string(pr.concurrence) +
                              ", PT min = " + std::to_string(pr.pt_min_eigenvalue));
    }
    pr.is_entangled = edge_by_c;
    return pr;
}

template <typename StateLike>
AnalysisReport analyze_all_pairs(const StateLike& s) {
    const int n = s.n_qubits();
    std::vector<PairReport> pairs;
    std::vector<Edge> edges;
    for (const auto& [i, j] : all_pairs(n)) {
        PairReport pr = judge_pair(reduce_pair(s, i, j));
        if (pr.is_entangled) edges.push_back({i, j});
        pairs.push_back(pr);
    }
    AnalysisReport report{n, std::move(pairs), EntangledGraph(n, std::move(edges)),
                          std::nullopt, std::nullopt};
    return report;
}

template <typename StateLike>
AnalysisReport verify_against(const EntangledGraph& g, const StateLike& s) {
    if (g.n_vertices() != s.n_qubits()) {
        throw std::invalid_argument("graph vertex count differs from state qubit count");
    }
    AnalysisReport report = analyze_all_pairs(s);
    report.target_graph = g;
    report.match = (report.realized_graph == g);
    return report;
}

} // namespace

AnalysisReport realized_graph(const StateVector& s) { return analyze_all_pairs(s); }
AnalysisReport realized_graph(const PureEnsemble& e) { return analyze_all_pairs(e); }

AnalysisReport verify_realization(const EntangledGraph& g, const StateVector& s) {
    return verify_against(g, s);
}

AnalysisReport verify_realization(const EntangledGraph& g, const PureEnsemble& e) {
    return verify_against(g, e);
}

// --- closed-form oracles ---

TwoQubitDensity cf_reduced_edge(const SynthesisParams& p, const GraphStats& st) {
    if (!st.is_edge) {
        throw std::invalid_argument("cf_reduced_edge requires edge-pair stats");
    }
    const double a2 = p.alpha * p.alpha;
    const double b2 = p.beta * p.beta;
    const double g2 = p.gamma * p.gamma;
    const double k = st.k;
    ComplexMatrix m(4, 4);
    m(0, 0) = a2 + g2 * (k - st.n_i - st.n_j + 1) / k;
    m(1, 1) = g2 * (st.n_j - 1) / k;
    m(2, 2) = g2 * (st.n_i - 1) / k;
    m(3, 3) = b2 + g2 / k;
    m(0, 3) = m(3, 0) = p.alpha * p.gamma / std::sqrt(k);
    m(1, 2) = m(2, 1) = g2 * st.n_ij / k;
    return TwoQubitDensity(std::move(m), st.i, st.j);
}

TwoQubitDensity cf_reduced_nonedge(const SynthesisParams& p, const GraphStats& st) {
    if (st.is_edge) {
        throw std::invalid_argument("cf_reduced_nonedge requires non-edge-pair stats");
    }
    const double a2 = p.alpha * p.alpha;
    const double b2 = p.beta * p.beta;
    const double g2 = p.gamma * p.gamma;
    const double k = st.k;
    ComplexMatrix m(4, 4);
    m(0, 0) = a2 + g2 * (k - st.n_i - st.n_j) / k;
    m(1, 1) = g2 * st.n_j / k;
    m(2, 2) = g2 * st.n_i / k;
    m(3, 3) = b2;
    m(1, 2) = m(2, 1) = g2 * st.n_ij / k;
    return TwoQubitDensity(std::move(m), st.i, st.j);
}

std::array<double, 4> cf_nonedge_R_spectrum(const SynthesisParams& p, const GraphStats& st) {
    if (st.is_edge) {
        throw std::invalid_argument("cf_nonedge_R_spectrum requires non-edge-pair stats");
    }
    const double g2 = p.gamma * p.gamma;
    const double k = st.k;
    const double a = p.alpha * p.alpha + g2 * (k - st.n_i - st.n_j) / k;
    const double d = p.beta * p.beta;
    const double root = std::sqrt(static_cast<double>(st.n_i) * st.n_j);
    const double plus = g2 * (st.n_ij + root) / k;
    const double minus = g2 * (st.n_ij - root) / k;
    std::array<double, 4> lam{a * d, a * d, plus * plus, minus * minus};
    std::sort(lam.begin(), lam.end(), std::greater<double>());
    return lam;
}

namespace {

void check_star_n(int n) {
    if (n < 5) {
        throw std::invalid_argument("star closed forms require n >= 5");
    }
}

void check_star_alpha(double alpha) {
    if (!(alpha > 0.0) || alpha > 1.0) {
        throw std::invalid_argument("star closed forms require alpha in (0, 1]");
    }
}

} // namespace

double cf_star_pt_min_edge(double alpha, int n) {
    check_star_n(n);
    check_star_alpha(alpha);
    const double nd = n;
    return alpha * alpha * (nd - 2.0 - std::sqrt(nd * nd - 4.0 * nd + 8.0)) / (2.0 * nd);
}

double cf_star_pt_min_nonedge(double alpha, int n) {
    check_star_n(n);
    check_star_alpha(alpha);
    const double nd = n;
    const double a2 = alpha * alpha;
    const double delta =
        nd * nd - 4.0 * a2 * (nd - 1.0) * nd + 4.0 * a2 * a2 * (2.0 + (nd - 2.0) * nd);
    return (nd - 2.0 * a2 - std::sqrt(delta)) / (2.0 * nd);
}

double cf_star_alpha_bound(int n) {
    check_star_n(n);
    const double nd = n;
    return std::sqrt(nd * nd - 2.0 * nd) / (nd - 1.0);
}

std::vector<ConditionVerdict> validate_params(const SynthesisParams& p) {
    const double a2 = p.alpha * p.alpha;
    const double g2 = p.gamma * p.gamma;
    const double ab2 = (p.alpha * p.beta) * (p.alpha * p.beta);
    const double g4 = g2 * g2;

    // The reference params satisfy cond1 with algebraic equality, so both
    // checks tolerate rounding at the normalization scale.
    ConditionVerdict cond1{"cond1", false, ab2 - g4};
    cond1.passed = (cond1.slack >= -tol::normalization) && (g4 > 0.0);

    ConditionVerdict cond2{"cond2", false, 4.0 * a2 - g2 * p.k};
    cond2.passed = (cond2.slack >= -tol::normalization) && (g2 * p.k > 0.0);

    return {cond1, cond2};
}

} // namespace entgraph
