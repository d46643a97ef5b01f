#pragma once

#include <sstream>
#include <string>

#include "sep3q/spectral.hpp"
#include "sep3q/types.hpp"

namespace sep3q {

/// A three-qubit pure state: 8 amplitudes a_{ijk} stored flat at 4i+2j+k
/// (qubit A most significant), unit Euclidean norm.
class PureState {
 public:
  const Amp8& amp() const { return amp_; }
  Complex amp(int i, int j, int k) const { return amp_(basis_index(i, j, k)); }

  static PureState trusted(const Amp8& a) { return PureState(a); }

 private:
  explicit PureState(const Amp8& a) : amp_(a) {}
  Amp8 amp_;
};

/// Builds a PureState from raw amplitudes.
///
/// With `normalize` set the vector is scaled to unit norm; otherwise the
/// norm must already be 1 within tol::norm.
inline PureState pure_from_amplitudes(const Amp8& raw, bool normalize = false) {
  if (!all_finite(raw))
    throw InvalidParams("pure state amplitudes must be finite");
  if (raw.cwiseAbs().maxCoeff() < tol::zero_vector)
    throw ZeroVector("pure state amplitudes are all (numerically) zero");
  const double n = raw.norm();
  if (normalize) return PureState::trusted(raw / n);
  if (std::abs(n - 1.0) > tol::norm) {
    std::ostringstream os;
    os << "pure state norm is " << n << ", expected 1 within " << tol::norm;
    throw NotNormalized(os.str());
  }
  return PureState::trusted(raw);
}

/// An 8x8 density matrix: Hermitian, unit trace, positive semidefinite
/// within the library tolerances.
class DensityMatrix {
 public:
  const Mat8& m() const { return m_; }

  static DensityMatrix trusted(const Mat8& m) { return DensityMatrix(m); }

 private:
  explicit DensityMatrix(const Mat8& m) : m_(m) {}
  Mat8 m_;
};

/// rho = |psi><psi|.
inline DensityMatrix density_from_pure(const PureState& psi) {
  Mat8 m = psi.amp() * psi.amp().adjoint();
  return DensityMatrix::trusted(m);
}

/// Validates an arbitrary 8x8 matrix as a density matrix, naming the first
/// violated invariant on failure.
inline DensityMatrix validate_density(const Mat8& m) {
  if (!all_finite(m)) throw InvalidParams("density matrix entries must be finite");
  const double herm_dev = (m - m.adjoint()).cwiseAbs().maxCoeff();
  if (herm_dev > tol::hermitian) {
    std::ostringstream os;
    os << "matrix is not Hermitian: max |m - m^dagger| = " << herm_dev;
    throw NotHermitian(os.str());
  }
  const Complex tr = m.trace();
  if (std::abs(tr - Complex(1.0, 0.0)) > tol::trace) {
    std::ostringstream os;
    os << "trace is " << tr.real() << ", expected 1 within " << tol::trace;
    throw TraceNotOne(os.str());
  }
  HermitianEigen eig = hermitian_eigen(MatX(m));
  const double min_eig = eig.eigenvalues(7);
  if (min_eig < tol::psd_floor) {
    std::ostringstream os;
    os << "matrix is not positive semidefinite: smallest eigenvalue " << min_eig;
    throw NotPositive(os.str());
  }
  return DensityMatrix::trusted(m);
}

/// Eigendecomposition of a density matrix restricted bookkeeping:
/// eigenvalues descending, eigenvalues below rank_tol clamped to zero and
/// excluded from the support rank.
struct EigDecomposition {
  RVecX eigenvalues;  // length 8, descending, clamped
  Mat8 eigenvectors;  // unitary, columns are eigenvectors
  int rank = 0;       // count of eigenvalues above rank_tol
};

inline EigDecomposition eig_hermitian(const DensityMatrix& rho,
                                      double rank_tol = tol::rank_default) {
  HermitianEigen eig = hermitian_eigen(MatX(rho.m()));
  EigDecomposition out;
  out.eigenvalues = eig.eigenvalues;
  out.eigenvectors = eig.eigenvectors;
  out.rank = 0;
  for (int i = 0; i < 8; ++i) {
    if (out.eigenvalues(i) > rank_tol) {
      ++out.rank;
    } else {
      out.eigenvalues(i) = 0.0;  // below support: treat as exact zero
    }
  }
  return out;
}

}  // namespace sep3q
