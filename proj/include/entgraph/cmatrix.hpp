#pragma once

#include <complex>
#include <vector>

namespace entgraph {

using cplx = std::complex<double>;

/// Dense row-major complex matrix, sized for this problem (4x4 on the hot
/// path, 2^N x small elsewhere). Value type, no views.
class ComplexMatrix {
public:
    ComplexMatrix() : rows_(0), cols_(0) {}
    ComplexMatrix(int rows, int cols);

    static ComplexMatrix identity(int n);

    int rows() const { return rows_; }
    int cols() const { return cols_; }

    cplx& operator()(int r, int c) { return data_[static_cast<size_t>(r) * cols_ + c]; }
    const cplx& operator()(int r, int c) const { return data_[static_cast<size_t>(r) * cols_ + c]; }

    bool operator==(const ComplexMatrix& other) const = default;

private:
    int rows_;
    int cols_;
    std::vector<cplx> data_;
};

// Real eigenvalues sorted descending.
struct Spectrum {
    std::vector<double> eigenvalues;
};

ComplexMatrix multiply(const ComplexMatrix& a, const ComplexMatrix& b);
ComplexMatrix adjoint(const ComplexMatrix& m);
ComplexMatrix conjugate(const ComplexMatrix& m);

cplx trace(const ComplexMatrix& m);
double max_abs(const ComplexMatrix& m);
double max_abs_diff(const ComplexMatrix& a, const ComplexMatrix& b);
bool is_hermitian(const ComplexMatrix& m, double tolerance);

/// Eigenvalues of a Hermitian matrix via cyclic complex Jacobi sweeps,
/// iterated until the off-diagonal Frobenius norm drops below
/// tol::jacobi_target. Throws numerical_error if the input is not Hermitian
/// within tol::hermiticity or the sweeps fail to converge.
Spectrum hermitian_eigenvalues(const ComplexMatrix& m);

/// Hermitian PSD square root. Eigenvalues in [tol::psd_floor, 0) are clamped
/// to zero; anything lower is a genuine non-PSD input and throws.
ComplexMatrix hermitian_sqrt(const ComplexMatrix& m);

/// Transpose on the second qubit of a two-qubit operator in the basis
/// |00>,|01>,|10>,|11>: out[ab,a'b'] = in[ab',a'b]. Involution; preserves
/// trace and Hermiticity.
ComplexMatrix partial_transpose_second(const ComplexMatrix& m);

namespace detail {
/// Full Jacobi diagonalization; eigenvalues unsorted on the diagonal of the
/// worked copy, eigenvectors accumulated as columns when requested.
void jacobi_hermitian(ComplexMatrix& a, ComplexMatrix* eigenvectors);
} // namespace detail

} // namespace entgraph
