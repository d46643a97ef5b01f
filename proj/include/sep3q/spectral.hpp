#pragma once

#include <Eigen/Dense>

#include "sep3q/types.hpp"

namespace sep3q {

/// Singular values sorted descending. Satisfies sum(values^2) == |m|_F^2.
struct SingularSpectrum {
  RVecX values;

  double largest() const { return values.size() ? values(0) : 0.0; }
  double sum() const { return values.sum(); }
};

namespace detail {

inline void require_small_finite(const MatX& m) {
  if (m.rows() > 8 || m.cols() > 8)
    throw std::invalid_argument("spectral: matrices larger than 8x8 are not supported");
  if (!all_finite(m))
    throw ConvergenceFailure("spectral: non-finite entries in input matrix");
}

}  // namespace detail

/// Singular values of a small dense complex matrix, descending.
/// Two-sided Jacobi: accurate to ~1e-12 relative to the largest value and
/// deterministic for identical input bits.
inline SingularSpectrum singular_values(const MatX& m) {
  detail::require_small_finite(m);
  Eigen::JacobiSVD<MatX> svd(m);
  if (svd.info() != Eigen::Success)
    throw ConvergenceFailure("singular value decomposition did not converge");
  SingularSpectrum out;
  out.values = svd.singularValues();
  return out;
}

struct HermitianEigen {
  RVecX eigenvalues;  // descending
  MatX eigenvectors;  // columns, orthonormal
};

/// Eigendecomposition of a Hermitian matrix with eigenvalues descending.
/// Input is symmetrized as (m + m^dagger)/2 before solving.
inline HermitianEigen hermitian_eigen(const MatX& m) {
  detail::require_small_finite(m);
  if (m.rows() != m.cols())
    throw std::invalid_argument("hermitian_eigen: matrix must be square");
  MatX h = (m + m.adjoint()) / 2.0;
  Eigen::SelfAdjointEigenSolver<MatX> es(h);
  if (es.info() != Eigen::Success)
    throw ConvergenceFailure("Hermitian eigendecomposition did not converge");
  const Eigen::Index n = m.rows();
  HermitianEigen out;
  out.eigenvalues.resize(n);
  out.eigenvectors.resize(n, n);
  for (Eigen::Index i = 0; i < n; ++i) {  // Eigen sorts ascending; flip
    out.eigenvalues(i) = es.eigenvalues()(n - 1 - i);
    out.eigenvectors.col(i) = es.eigenvectors().col(n - 1 - i);
  }
  return out;
}

}  // namespace sep3q
