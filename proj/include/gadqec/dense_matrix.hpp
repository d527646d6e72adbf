#pragma once

#include <complex>
#include <vector>

#include "gadqec/sparse_state.hpp"

namespace gadqec {

/// Row-major dense complex matrix for the small (<= 2-qubit and
/// codespace-sized) operators this library needs.
class DenseMatrix {
  public:
    DenseMatrix() : rows_(0), cols_(0) {}
    DenseMatrix(std::size_t rows, std::size_t cols)
        : rows_(rows), cols_(cols), entries_(rows * cols, cplx(0.0, 0.0)) {}
    DenseMatrix(std::size_t rows, std::size_t cols, std::vector<cplx> entries);

    static DenseMatrix identity(std::size_t n);

    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }

    cplx& at(std::size_t r, std::size_t c) { return entries_[r * cols_ + c]; }
    const cplx& at(std::size_t r, std::size_t c) const { return entries_[r * cols_ + c]; }
    const std::vector<cplx>& entries() const { return entries_; }

    DenseMatrix operator+(const DenseMatrix& o) const;
    DenseMatrix operator-(const DenseMatrix& o) const;
    DenseMatrix operator*(const DenseMatrix& o) const;
    DenseMatrix scaled(cplx f) const;
    DenseMatrix dagger() const;
    cplx trace() const;

    double max_abs() const;
    double frobenius_distance(const DenseMatrix& o) const;
    bool is_hermitian(double tol) const;

  private:
    std::size_t rows_, cols_;
    std::vector<cplx> entries_;
};

/// Kronecker product; dimensions multiply. Throws if the result would
/// exceed the configured size limit (2^24 entries per side).
DenseMatrix tensor_product(const DenseMatrix& a, const DenseMatrix& b);

struct EigResult {
    std::vector<double> eigenvalues;  // descending
    DenseMatrix eigenvectors;         // columns, same order
};

/// Eigendecomposition of a Hermitian matrix by cyclic Jacobi rotations.
/// Input must be Hermitian within 1e-12.
EigResult hermitian_eig(const DenseMatrix& m);

/// Pseudo-inverse square root of a positive semidefinite matrix:
/// eigenvalues >= rank_tol map to lambda^{-1/2}, smaller map to 0.
/// Throws if an eigenvalue lies below -rank_tol.
DenseMatrix inv_sqrt_psd(const DenseMatrix& m, double rank_tol);

/// exp(m) by scaling-and-squaring with a Taylor series.
DenseMatrix matrix_exp(const DenseMatrix& m);

}  // namespace gadqec
