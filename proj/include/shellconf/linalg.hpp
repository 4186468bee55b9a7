#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>
#include <vector>

namespace shellconf {

/// Dense row-major matrix, just enough surface for the radial solver.
class Matrix {
  public:
    Matrix() = default;
    Matrix(std::size_t rows, std::size_t cols, double fill = 0.0)
        : rows_(rows), cols_(cols), a_(rows * cols, fill) {}

    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }
    double& operator()(std::size_t i, std::size_t j) { return a_[i * cols_ + j]; }
    double operator()(std::size_t i, std::size_t j) const { return a_[i * cols_ + j]; }
    double* row(std::size_t i) { return a_.data() + i * cols_; }
    const double* row(std::size_t i) const { return a_.data() + i * cols_; }
    double* data() { return a_.data(); }
    const double* data() const { return a_.data(); }

    double symmetry_defect() const;

  private:
    std::size_t rows_ = 0, cols_ = 0;
    std::vector<double> a_;
};

struct EigenOptions {
    double rel_tol = 1e-13;  // off-diagonal 1-norm relative to the Frobenius norm
    int max_sweeps = 60;
};

/// Eigenpairs of a real symmetric matrix, ascending by eigenvalue.
/// eigenvectors.row(k) is the k-th (orthonormal) eigenvector.
struct SymmetricEigenSolution {
    std::vector<double> eigenvalues;
    Matrix eigenvectors;
    int rotations = 0;
};

struct EigensolverError : std::runtime_error {
    double residual;
    explicit EigensolverError(const std::string& what, double res)
        : std::runtime_error(what), residual(res) {}
};

/// Cyclic Jacobi with threshold sweeps. Eigenvalues are re-derived from
/// Rayleigh quotients of the rotated basis against the original matrix, which
/// removes the O(eps*||A||) drift the plain rotation updates accumulate.
SymmetricEigenSolution jacobi_eigensolve(const Matrix& A, const EigenOptions& opts = {});

}  // namespace shellconf
