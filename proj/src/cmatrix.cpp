#include "entgraph/cmatrix.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

#include "entgraph/errors.hpp"
#include "entgraph/tolerances.hpp"

namespace entgraph {

ComplexMatrix::ComplexMatrix(int rows, int cols) : rows_(rows), cols_(cols) {
    if (rows < 1 || cols < 1) {
        throw std::invalid_argument("matrix dimensions must be positive");
    }
    data_.assign(static_cast<size_t>(rows) * cols, cplx{0.0, 0.0});
}

ComplexMatrix ComplexMatrix::identity(int n) {
    ComplexMatrix m(n, n);
    for (int i = 0; i < n; ++i) m(i, i) = 1.0;
    return m;
}

ComplexMatrix multiply(const ComplexMatrix& a, const ComplexMatrix& b) {
    if (a.cols() != b.rows()) {
        throw std::invalid_argument("multiply: dimension mismatch");
    }
    ComplexMatrix out(a.rows(), b.cols());
    for (int r = 0; r < a.rows(); ++r) {
        for (int k = 0; k < a.cols(); ++k) {
            const cplx ark = a(r, k);
            if (ark == cplx{}) continue;
            for (int c = 0; c < b.cols(); ++c) {
                out(r, c) += ark * b(k, c);
            }
        }
    }
    return out;
}

ComplexMatrix adjoint(const ComplexMatrix& m) {
    ComplexMatrix out(m.cols(), m.rows());
    for (int r = 0; r < m.rows(); ++r) {
        for (int c = 0; c < m.cols(); ++c) {
            out(c, r) = std::conj(m(r, c));
        }
    }
    return out;
}

ComplexMatrix conjugate(const ComplexMatrix& m) {
    ComplexMatrix out(m.rows(), m.cols());
    for (int r = 0; r < m.rows(); ++r) {
        for (int c = 0; c < m.cols(); ++c) {
            out(r, c) = std::conj(m(r, c));
        }
    }
    return out;
}

cplx trace(const ComplexMatrix& m) {
    cplx t = 0;
    for (int i = 0; i < std::min(m.rows(), m.cols()); ++i) t += m(i, i);
    return t;
}

double max_abs(const ComplexMatrix& m) {
    double v = 0;
    for (int r = 0; r < m.rows(); ++r) {
        for (int c = 0; c < m.cols(); ++c) {
            v = std::max(v, std::abs(m(r, c)));
        }
    }
    return v;
}

double max_abs_diff(const ComplexMatrix& a, const ComplexMatrix& b) {
    if (a.rows() != b.rows() || a.cols() != b.cols()) {
        throw std::invalid_argument("max_abs_diff: dimension mismatch");
    }
    double v = 0;
    for (int r = 0; r < a.rows(); ++r) {
        for (int c = 0; c < a.cols(); ++c) {
            v = std::max(v, std::abs(a(r, c) - b(r, c)));
        }
    }
    return v;
}

bool is_hermitian(const ComplexMatrix& m, double tolerance) {
    if (m.rows() != m.cols()) return false;
    for (int r = 0; r < m.rows(); ++r) {
        for (int c = r; c < m.cols(); ++c) {
            if (std::abs(m(r, c) - std::conj(m(c, r))) > tolerance) return false;
        }
    }
    return true;
}

namespace detail {

namespace {

double offdiag_norm(const ComplexMatrix& a) {
    double s = 0;
    for (int r = 0; r < a.rows(); ++r) {
        for (int c = 0; c < a.cols(); ++c) {
            if (r != c) s += std::norm(a(r, c));
        }
    }
    return std::sqrt(s);
}

} // namespace

void jacobi_hermitian(ComplexMatrix& a, ComplexMatrix* eigenvectors) {
    const int n = a.rows();
    if (eigenvectors) *eigenvectors = ComplexMatrix::identity(n);

    constexpr int max_sweeps = 80;
    for (int sweep = 0; sweep < max_sweeps; ++sweep) {
        if (offdiag_norm(a) < tol::jacobi_target) return;
        for (int p = 0; p < n - 1; ++p) {
            for (int q = p + 1; q < n; ++q) {
                const cplx apq = a(p, q);
                const double absb = std::abs(apq);
                if (absb == 0.0) continue;
                const cplx phase = apq / absb;
                const double app = a(p, p).real();
                const double aqq = a(q, q).real();

                // Pick the smaller-magnitude rotation angle zeroing a(p,q).
                const double theta = (aqq - app) / (2.0 * absb);
                const double t = (theta >= 0.0 ? 1.0 : -1.0) /
                                 (std::abs(theta) + std::sqrt(1.0 + theta * theta));
                const double c = 1.0 / std::sqrt(1.0 + t * t);
                const double s = t * c;

                // R differs from the identity in the (p,q) plane:
                // R(p,p) = c, R(p,q) = s*phase, R(q,p) = -s*conj(phase), R(q,q) = c.
                // Columns: A <- A R.
                for (int r = 0; r < n; ++r) {
                    const cplx arp = a(r, p);
                    const cplx arq = a(r, q);
                    a(r, p) = c * arp - s * std::conj(phase) * arq;
                    a(r, q) = s * phase * arp + c * arq;
                }
                // Rows: A <- R^dag A.
                for (int r = 0; r < n; ++r) {
                    const cplx apr = a(p, r);
                    const cplx aqr = a(q, r);
                    a(p, r) = c * apr - s * phase * aqr;
                    a(q, r) = s * std::conj(phase) * apr + c * aqr;
                }
                if (eigenvectors) {
                    ComplexMatrix& v = *eigenvectors;
                    for (int r = 0; r < n; ++r) {
                        const cplx vrp = v(r, p);
                        const cplx vrq = v(r, q);
                        v(r, p) = c * vrp - s * std::conj(phase) * vrq;
                        v(r, q) = s * phase * vrp + c * vrq;
                    }
                }
            }
        }
    }
    if (offdiag_norm(a) >= tol::jacobi_target) {
        throw numerical_error("Jacobi diagonalization did not converge");
    }
}

} // namespace detail

namespace {

ComplexMatrix checked_hermitian_input(const ComplexMatrix& m, const char* what) {
    if (m.rows() != m.cols()) {
        throw std::invalid_argument(std::string(what) + ": matrix must be square");
    }
    if (!is_hermitian(m, tol::hermiticity)) {
        throw numerical_error(std::string(what) + ": matrix is not Hermitian within tolerance");
    }
    // Work on the exactly-Hermitian average; entry noise below tolerance only.
    ComplexMatrix h(m.rows(), m.cols());
    for (int r = 0; r < m.rows(); ++r) {
        for (int c = 0; c < m.cols(); ++c) {
            h(r, c) = 0.5 * (m(r, c) + std::conj(m(c, r)));
        }
    }
    return h;
}

} // namespace

Spectrum hermitian_eigenvalues(const ComplexMatrix& m) {
    ComplexMatrix a = checked_hermitian_input(m, "hermitian_eigenvalues");
    detail::jacobi_hermitian(a, nullptr);
    Spectrum sp;
    sp.eigenvalues.reserve(a.rows());
    for (int i = 0; i < a.rows(); ++i) sp.eigenvalues.push_back(a(i, i).real());
    std::sort(sp.eigenvalues.begin(), sp.eigenvalues.end(), std::greater<double>());
    return sp;
}

ComplexMatrix hermitian_sqrt(const ComplexMatrix& m) {
    ComplexMatrix a = checked_hermitian_input(m, "hermitian_sqrt");
    ComplexMatrix v;
    detail::jacobi_hermitian(a, &v);

    const int n = a.rows();
    std::vector<double> roots(n);
    for (int i = 0; i < n; ++i) {
        double lam = a(i, i).real();
        if (lam < tol::psd_floor) {
            throw numerical_error("hermitian_sqrt: eigenvalue " + std::to_string(lam) +
                                  " below the PSD tolerance");
        }
        roots[i] = lam > 0.0 ? std::sqrt(lam) : 0.0;
    }

    ComplexMatrix out(n, n);
    for (int r = 0; r < n; ++r) {
        for (int c = 0; c < n; ++c) {
            cplx sum = 0;
            for (int i = 0; i < n; ++i) {
                sum += v(r, i) * roots[i] * std::conj(v(c, i));
            }
            out(r, c) = sum;
        }
    }

    if (max_abs_diff(multiply(out, out), m) > tol::sqrt_residual) {
        throw numerical_error("hermitian_sqrt: residual above tolerance");
    }
    return out;
}

ComplexMatrix partial_transpose_second(const ComplexMatrix& m) {
    if (m.rows() != 4 || m.cols() != 4) {
        throw std::invalid_argument("partial_transpose_second: expected a 4x4 matrix");
    }
    ComplexMatrix out(4, 4);
    for (int a = 0; a < 2; ++a) {
        for (int b = 0; b < 2; ++b) {
            for (int ap = 0; ap < 2; ++ap) {
                for (int bp = 0; bp < 2; ++bp) {
                    out(2 * a + b, 2 * ap + bp) = m(2 * a + bp, 2 * ap + b);
                }
            }
        }
    }
    return out;
}

} // namespace entgraph
