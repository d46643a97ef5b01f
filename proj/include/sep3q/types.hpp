#pragma once

#include <complex>
#include <stdexcept>
#include <string>

#include <Eigen/Dense>

namespace sep3q {

using Complex = std::complex<double>;

using Amp8 = Eigen::Matrix<Complex, 8, 1>;
using Amp4 = Eigen::Matrix<Complex, 4, 1>;
using Mat8 = Eigen::Matrix<Complex, 8, 8>;
using Mat2 = Eigen::Matrix<Complex, 2, 2>;

// Dynamic but stack-bounded: everything in this library is at most 8x8.
using MatX = Eigen::Matrix<Complex, Eigen::Dynamic, Eigen::Dynamic, 0, 8, 8>;
using VecX = Eigen::Matrix<Complex, Eigen::Dynamic, 1, 0, 9, 1>;
using RVecX = Eigen::Matrix<double, Eigen::Dynamic, 1, 0, 8, 1>;

namespace tol {
// Validation tolerances sit ~100x above double-precision accumulation
// error for 8x8 problems.
inline constexpr double norm = 1e-10;         // pure-state unit norm
inline constexpr double hermitian = 1e-12;    // entrywise m == m^dagger
inline constexpr double trace = 1e-10;        // trace(rho) == 1
inline constexpr double psd_floor = -1e-10;   // smallest admissible eigenvalue
inline constexpr double zero_vector = 1e-14;  // all-|amp| below this is "zero"
inline constexpr double rank_default = 1e-12; // eigenvalue support cutoff
inline constexpr double sep_default = 1e-8;   // pure-state |C| verdict cut
inline constexpr double verdict_default = 1e-6; // mixed certificate verdict cut
}  // namespace tol

struct Error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct ZeroVector : Error { using Error::Error; };
struct NotNormalized : Error { using Error::Error; };
struct NotHermitian : Error { using Error::Error; };
struct TraceNotOne : Error { using Error::Error; };
struct NotPositive : Error { using Error::Error; };
struct ConvergenceFailure : Error { using Error::Error; };
struct WrongRank : Error { using Error::Error; };
struct InvalidParams : Error { using Error::Error; };
struct ParseError : Error { using Error::Error; };
struct UnknownState : Error { using Error::Error; };
struct IoError : Error { using Error::Error; };

/// Flat index of basis ket |i>_A |j>_B |k>_C, qubit A most significant.
constexpr int basis_index(int i, int j, int k) { return 4 * i + 2 * j + k; }

inline bool is_finite(Complex v) {
  return std::isfinite(v.real()) && std::isfinite(v.imag());
}

template <typename Derived>
bool all_finite(const Eigen::MatrixBase<Derived>& m) {
  for (Eigen::Index c = 0; c < m.cols(); ++c)
    for (Eigen::Index r = 0; r < m.rows(); ++r)
      if (!is_finite(m(r, c))) return false;
  return true;
}

}  // namespace sep3q
