#pragma once

// Test-only oracles, kept independent of the library's numeric path:
// eigenvalues come from the characteristic polynomial (principal minors +
// Durand-Kerner root finding) instead of Jacobi rotations, and partial
// traces go through the full 2^N x 2^N density matrix.

#include <algorithm>
#include <array>
#include <complex>
#include <stdexcept>
#include <vector>

#include "entgraph/cmatrix.hpp"
#include "entgraph/states.hpp"

namespace oracle {

using entgraph::cplx;
using entgraph::ComplexMatrix;

// det of a k x k submatrix of m given by row/col index set.
inline cplx det_sub(const ComplexMatrix& m, const std::vector<int>& idx) {
    const int k = static_cast<int>(idx.size());
    if (k == 1) return m(idx[0], idx[0]);
    if (k == 2) {
        return m(idx[0], idx[0]) * m(idx[1], idx[1]) - m(idx[0], idx[1]) * m(idx[1], idx[0]);
    }
    cplx det = 0;
    for (int c = 0; c < k; ++c) {
        std::vector<int> rows(idx.begin() + 1, idx.end());
        std::vector<int> cols;
        for (int t = 0; t < k; ++t) {
            if (t != c) cols.push_back(idx[t]);
        }
        cplx minor = 0;
        // recurse on the (k-1)x(k-1) minor with explicit row/col selections
        const int kk = k - 1;
        if (kk == 2) {
            minor = m(rows[0], cols[0]) * m(rows[1], cols[1]) -
                    m(rows[0], cols[1]) * m(rows[1], cols[0]);
        } else {
            // kk == 3; inputs here are at most 4x4
            minor = m(rows[0], cols[0]) * (m(rows[1], cols[1]) * m(rows[2], cols[2]) -
                                           m(rows[1], cols[2]) * m(rows[2], cols[1])) -
                    m(rows[0], cols[1]) * (m(rows[1], cols[0]) * m(rows[2], cols[2]) -
                                           m(rows[1], cols[2]) * m(rows[2], cols[0])) +
                    m(rows[0], cols[2]) * (m(rows[1], cols[0]) * m(rows[2], cols[1]) -
                                           m(rows[1], cols[1]) * m(rows[2], cols[0]));
        }
        const double sign = (c % 2 == 0) ? 1.0 : -1.0;
        det += sign * m(idx[0], idx[c]) * minor;
    }
    return det;
}

// Characteristic polynomial of a 4x4 matrix:
// p(x) = x^4 - S1 x^3 + S2 x^2 - S3 x + S4 (sums of principal minors).
inline std::array<cplx, 5> char_poly_4(const ComplexMatrix& m) {
    cplx s1 = 0, s2 = 0, s3 = 0;
    for (int i = 0; i < 4; ++i) s1 += m(i, i);
    for (int i = 0; i < 4; ++i) {
        for (int j = i + 1; j < 4; ++j) {
            s2 += det_sub(m, {i, j});
        }
    }
    for (int i = 0; i < 4; ++i) {
        for (int j = i + 1; j < 4; ++j) {
            for (int k = j + 1; k < 4; ++k) {
                s3 += det_sub(m, {i, j, k});
            }
        }
    }
    const cplx s4 = det_sub(m, {0, 1, 2, 3});
    // coefficients for x^0 .. x^4
    return {s4, -s3, s2, -s1, cplx{1.0, 0.0}};
}

// All roots of a quartic via Durand-Kerner iteration.
inline std::array<cplx, 4> quartic_roots(const std::array<cplx, 5>& coeff) {
    auto eval = [&](cplx x) {
        cplx v = coeff[4];
        for (int d = 3; d >= 0; --d) v = v * x + coeff[d];
        return v;
    };
    std::array<cplx, 4> r;
    const cplx seed{0.4, 0.9};
    r[0] = seed;
    for (int t = 1; t < 4; ++t) r[t] = r[t - 1] * seed;

    for (int iter = 0; iter < 500; ++iter) {
        double moved = 0;
        for (int t = 0; t < 4; ++t) {
            cplx denom{1.0, 0.0};
            for (int u = 0; u < 4; ++u) {
                if (u != t) denom *= (r[t] - r[u]);
            }
            if (std::abs(denom) < 1e-300) continue;
            const cplx step = eval(r[t]) / denom;
            r[t] -= step;
            moved = std::max(moved, std::abs(step));
        }
        if (moved < 1e-15) break;
    }
    return r;
}

// Eigenvalues of a general (possibly non-Hermitian) 4x4 matrix, real parts
// sorted descending. Intended for matrices with real nonnegative spectra.
inline std::array<double, 4> eigenvalues_4(const ComplexMatrix& m) {
    auto roots = quartic_roots(char_poly_4(m));
    std::array<double, 4> vals{};
    for (int t = 0; t < 4; ++t) vals[t] = roots[t].real();
    std::sort(vals.begin(), vals.end(), std::greater<double>());
    return vals;
}

// Wootters concurrence straight from R = rho * spin_flip(rho), no Hermitian
// surrogate, no Jacobi.
inline double concurrence(const ComplexMatrix& rho) {
    ComplexMatrix f(4, 4);
    f(0, 3) = -1.0;
    f(1, 2) = 1.0;
    f(2, 1) = 1.0;
    f(3, 0) = -1.0;
    const ComplexMatrix rho_tilde =
        entgraph::multiply(entgraph::multiply(f, entgraph::conjugate(rho)), f);
    auto lam = eigenvalues_4(entgraph::multiply(rho, rho_tilde));
    double c = 0;
    for (int t = 0; t < 4; ++t) {
        const double v = std::max(0.0, lam[t]);
        c += (t == 0 ? 1.0 : -1.0) * std::sqrt(v);
    }
    return std::max(0.0, c);
}

// Minimum eigenvalue of the partial transpose, via the quartic roots.
inline double pt_min(const ComplexMatrix& rho) {
    auto lam = eigenvalues_4(entgraph::partial_transpose_second(rho));
    return lam[3];
}

// Pair reduction through the full density matrix.
inline ComplexMatrix reduce_pair_full(const entgraph::StateVector& s, int i, int j) {
    const int n = s.n_qubits();
    const std::size_t dim = s.dim();
    const std::size_t mi = std::size_t{1} << (n - i);
    const std::size_t mj = std::size_t{1} << (n - j);
    const std::size_t rest_mask = (dim - 1) & ~(mi | mj);

    ComplexMatrix rho(4, 4);
    for (std::size_t b = 0; b < dim; ++b) {
        for (std::size_t bp = 0; bp < dim; ++bp) {
            if ((b & rest_mask) != (bp & rest_mask)) continue;
            const int r = static_cast<int>(((b & mi) ? 2 : 0) | ((b & mj) ? 1 : 0));
            const int c = static_cast<int>(((bp & mi) ? 2 : 0) | ((bp & mj) ? 1 : 0));
            rho(r, c) += s.amplitude(b) * std::conj(s.amplitude(bp));
        }
    }
    return rho;
}

} // namespace oracle
