#pragma once

#include <array>
#include <cmath>

#include "sep3q/spectral.hpp"
#include "sep3q/states.hpp"
#include "sep3q/types.hpp"

namespace sep3q {

enum class Subsystem { A, B, C };

/// Transposes the indices of one qubit: for subsystem A, entry
/// ((i,j,k),(i',j',k')) moves to ((i',j,k),(i,j',k')), analogously for B, C.
/// Hermiticity and trace are preserved; negativity of the result witnesses
/// entanglement across that cut.
inline Mat8 partial_transpose(const DensityMatrix& rho, Subsystem sub) {
  Mat8 out;
  for (int i = 0; i < 2; ++i)
    for (int j = 0; j < 2; ++j)
      for (int k = 0; k < 2; ++k)
        for (int i2 = 0; i2 < 2; ++i2)
          for (int j2 = 0; j2 < 2; ++j2)
            for (int k2 = 0; k2 < 2; ++k2) {
              int r = basis_index(i, j, k), c = basis_index(i2, j2, k2);
              int rs, cs;
              switch (sub) {
                case Subsystem::A:
                  rs = basis_index(i2, j, k), cs = basis_index(i, j2, k2);
                  break;
                case Subsystem::B:
                  rs = basis_index(i, j2, k), cs = basis_index(i2, j, k2);
                  break;
                default:
                  rs = basis_index(i, j, k2), cs = basis_index(i2, j2, k);
              }
              out(r, c) = rho.m()(rs, cs);
            }
  return out;
}

/// Minimum eigenvalue of the partial transpose for each one-vs-two cut.
/// The flag is true when the cut looks positive (min eigenvalue above the
/// shared PSD floor); all three true for every separable state.
struct PptReport {
  struct Cut {
    double min_eigenvalue;
    bool ppt;
  };
  std::array<Cut, 3> cuts;  // order: A|BC, B|AC, C|AB

  bool all_ppt() const { return cuts[0].ppt && cuts[1].ppt && cuts[2].ppt; }
};

inline PptReport ppt_report(const DensityMatrix& rho) {
  PptReport rep;
  for (int s = 0; s < 3; ++s) {
    auto eig = hermitian_eigen(partial_transpose(rho, static_cast<Subsystem>(s)));
    double mn = eig.eigenvalues(eig.eigenvalues.size() - 1);
    rep.cuts[s] = {mn, mn >= tol::psd_floor};
  }
  return rep;
}

/// Two-qubit pure-state concurrence 2|a00 a11 - a01 a10|, index 2j + k.
inline double wootters_concurrence_pure(const Amp4& phi) {
  double n = phi.norm();
  if (std::abs(n - 1.0) > tol::norm)
    throw NotNormalized("wootters_concurrence_pure: norm is " + std::to_string(n));
  return 2.0 * std::abs(phi(0) * phi(3) - phi(1) * phi(2));
}

}  // namespace sep3q
