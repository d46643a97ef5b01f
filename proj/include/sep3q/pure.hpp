#pragma once

#include <array>
#include <cmath>

#include "sep3q/operators.hpp"
#include "sep3q/spectral.hpp"
#include "sep3q/states.hpp"
#include "sep3q/types.hpp"

namespace sep3q {

/// The vector of bilinear forms C^a = psi^T s^a psi (note: transpose, not
/// dagger; the forms are bilinear in the amplitudes). |C| = 0 exactly
/// characterizes full separability of a pure state.
struct CVector {
  VecX components;

  double norm() const { return components.norm(); }
};

/// The six determinant conditions in raw form. slice[0..2] are the summed
/// moduli of the two 2x2 slice determinants with the A, B, C index fixed;
/// cross[0..2] are the moduli of the three signed diagonal-plane sums. A
/// pure state is fully separable iff all six vanish.
struct Lemma1Residuals {
  std::array<double, 3> slice;
  std::array<double, 3> cross;

  double max() const {
    double m = 0;
    for (double v : slice) m = std::max(m, v);
    for (double v : cross) m = std::max(m, v);
    return m;
  }
};

enum class PureVerdict { Separable, Entangled };

inline CVector c_vector(const PureState& psi,
                        const SOperatorSet& ops = build_s_operators(OperatorVariant::Full9)) {
  CVector c;
  c.components.resize(ops.count());
  for (int a = 0; a < ops.count(); ++a)
    c.components(a) = psi.amp().transpose() * ops.matrices[a] * psi.amp();
  return c;
}

inline Lemma1Residuals lemma1_residuals(const PureState& psi) {
  auto a = [&psi](int i, int j, int k) { return psi.amp(i, j, k); };
  Lemma1Residuals r;
  r.slice[0] = std::abs(a(0, 0, 0) * a(0, 1, 1) - a(0, 0, 1) * a(0, 1, 0)) +
               std::abs(a(1, 0, 0) * a(1, 1, 1) - a(1, 0, 1) * a(1, 1, 0));
  r.slice[1] = std::abs(a(0, 0, 0) * a(1, 0, 1) - a(0, 0, 1) * a(1, 0, 0)) +
               std::abs(a(0, 1, 0) * a(1, 1, 1) - a(0, 1, 1) * a(1, 1, 0));
  r.slice[2] = std::abs(a(0, 0, 0) * a(1, 1, 0) - a(0, 1, 0) * a(1, 0, 0)) +
               std::abs(a(0, 0, 1) * a(1, 1, 1) - a(0, 1, 1) * a(1, 0, 1));
  r.cross[0] = std::abs(a(0, 0, 0) * a(1, 1, 1) - a(0, 1, 1) * a(1, 0, 0) +
                        a(0, 1, 0) * a(1, 0, 1) - a(0, 0, 1) * a(1, 1, 0));
  r.cross[1] = std::abs(a(0, 0, 0) * a(1, 1, 1) - a(1, 0, 1) * a(0, 1, 0) +
                        a(1, 0, 0) * a(0, 1, 1) - a(1, 1, 0) * a(0, 0, 1));
  r.cross[2] = std::abs(a(0, 0, 0) * a(1, 1, 1) - a(0, 1, 1) * a(1, 0, 0) +
                        a(0, 0, 1) * a(1, 1, 0) - a(0, 1, 0) * a(1, 0, 1));
  return r;
}

struct PureCheck {
  PureVerdict verdict;
  CVector c;
};

/// Exact separability decision: |C| below tol_sep means fully separable.
/// Always uses the full nine-operator set; the reduced set admits false
/// negatives and is never used for verdicts.
inline PureCheck is_fully_separable_pure(const PureState& psi,
                                         double tol_sep = tol::sep_default) {
  PureCheck out{PureVerdict::Entangled, c_vector(psi)};
  if (out.c.norm() < tol_sep) out.verdict = PureVerdict::Separable;
  return out;
}

/// Independent separability oracle with no reference to the detection
/// operators: nested Schmidt-rank test on the A|BC split, then B|C on the
/// dominant BC factor.
inline PureVerdict brute_force_product_check(const PureState& psi,
                                             double tol = tol::sep_default) {
  MatX a_bc(2, 4);
  for (int i = 0; i < 2; ++i)
    for (int jk = 0; jk < 4; ++jk) a_bc(i, jk) = psi.amp()(4 * i + jk);
  if (singular_values(a_bc).values(1) >= tol) return PureVerdict::Entangled;

  // For a product state both rows of a_bc are multiples of the BC factor;
  // the larger-norm row is a numerically safe representative.
  int row = a_bc.row(0).norm() >= a_bc.row(1).norm() ? 0 : 1;
  MatX bc(2, 2);
  for (int j = 0; j < 2; ++j)
    for (int k = 0; k < 2; ++k) bc(j, k) = a_bc(row, 2 * j + k);
  if (singular_values(bc).values(1) >= tol) return PureVerdict::Entangled;
  return PureVerdict::Separable;
}

}  // namespace sep3q
