#pragma once

#include <algorithm>
#include <vector>

#include "sep3q/sep3q.hpp"

namespace testutil {

using namespace sep3q;

// Independent Kronecker construction used to cross-check the operator tables.
inline Mat8 kron3(const Mat2& x, const Mat2& y, const Mat2& z) {
  Eigen::Matrix<Complex, 4, 4> xy;
  for (int i = 0; i < 2; ++i)
    for (int j = 0; j < 2; ++j) xy.block<2, 2>(2 * i, 2 * j) = x(i, j) * y;
  Mat8 out;
  for (int i = 0; i < 4; ++i)
    for (int j = 0; j < 4; ++j) out.block<2, 2>(2 * i, 2 * j) = xy(i, j) * z;
  return out;
}

inline PureState embed_two_qubit(const Amp4& phi) {
  Amp8 v = Amp8::Zero();
  for (int i = 0; i < 2; ++i)
    for (int j = 0; j < 2; ++j) v(basis_index(i, j, 0)) = phi(2 * i + j);
  return PureState::trusted(v);
}

inline Amp4 random_two_qubit(std::uint64_t seed) {
  SplitMix64 g(seed);
  Amp4 phi;
  for (int i = 0; i < 4; ++i) phi(i) = g.next_complex_normal();
  phi /= phi.norm();
  return phi;
}

// Relabels the qubits: position A of the output reads index `pa` of the
// input triple, and so on. (pa, pb, pc) must be a permutation of (0, 1, 2).
inline PureState permute_qubits(const PureState& psi, int pa, int pb, int pc) {
  Amp8 v;
  for (int i = 0; i < 2; ++i)
    for (int j = 0; j < 2; ++j)
      for (int k = 0; k < 2; ++k) {
        const int idx[3] = {i, j, k};
        v(basis_index(idx[pa], idx[pb], idx[pc])) = psi.amp(i, j, k);
      }
  return PureState::trusted(v);
}

inline std::vector<double> sorted_moduli(const VecX& v) {
  std::vector<double> m;
  for (Eigen::Index i = 0; i < v.size(); ++i) m.push_back(std::abs(v(i)));
  std::sort(m.begin(), m.end());
  return m;
}

}  // namespace testutil
