#pragma once

#include <array>
#include <cmath>
#include <cstdint>
#include <string>

#include "sep3q/rng.hpp"
#include "sep3q/states.hpp"
#include "sep3q/types.hpp"

namespace sep3q {

/// Parameters of the five-parameter diagonal-plus-corner family
/// diag((a+b)/2, c, d, e, e, d, c, (a+b)/2) with (a-b)/2 in the (0,7)/(7,0)
/// corners. Valid iff all parameters are nonnegative and
/// a + b + 2(c + d + e) = 1.
struct DCTParams {
  double a = 0, b = 0, c = 0, d = 0, e = 0;

  double trace_sum() const { return a + b + 2 * (c + d + e); }
};

inline PureState ghz() {
  Amp8 v = Amp8::Zero();
  v(0) = v(7) = 1.0 / std::sqrt(2.0);
  return PureState::trusted(v);
}

inline PureState w() {
  Amp8 v = Amp8::Zero();
  v(1) = v(2) = v(4) = 1.0 / std::sqrt(3.0);
  return PureState::trusted(v);
}

inline PureState product(const std::array<Complex, 2>& u,
                         const std::array<Complex, 2>& v,
                         const std::array<Complex, 2>& t) {
  auto unit = [](const std::array<Complex, 2>& q, const char* name) {
    double n = std::sqrt(std::norm(q[0]) + std::norm(q[1]));
    if (n < tol::zero_vector)
      throw ZeroVector(std::string("product: factor ") + name + " is zero");
    return std::array<Complex, 2>{q[0] / n, q[1] / n};
  };
  auto un = unit(u, "A"), vn = unit(v, "B"), tn = unit(t, "C");
  Amp8 amp;
  for (int i = 0; i < 2; ++i)
    for (int j = 0; j < 2; ++j)
      for (int k = 0; k < 2; ++k)
        amp(basis_index(i, j, k)) = un[i] * vn[j] * tn[k];
  return PureState::trusted(amp);
}

/// The four-member unextendible product basis {|0,1,+>, |1,+,0>, |+,0,1>,
/// |-,-,->}, in this order.
inline std::array<PureState, 4> shifts_upb() {
  const std::array<Complex, 2> zero{1, 0}, one{0, 1}, plus{1, 1}, minus{1, -1};
  return {product(zero, one, plus), product(one, plus, zero),
          product(plus, zero, one), product(minus, minus, minus)};
}

/// Normalized projector onto the orthogonal complement of the UPB span:
/// (I - sum |psi_i><psi_i|) / 4. Bound entangled (PPT across every cut,
/// yet detected by the mixed-state certificate).
inline DensityMatrix shifts_complement() {
  Mat8 p = Mat8::Zero();
  for (const auto& psi : shifts_upb()) p += psi.amp() * psi.amp().adjoint();
  Mat8 m = (Mat8::Identity() - p) / 4.0;
  return DensityMatrix::trusted(m);
}

inline DensityMatrix dct_state(const DCTParams& p) {
  for (auto [v, name] : {std::pair{p.a, "a"}, {p.b, "b"}, {p.c, "c"},
                         {p.d, "d"}, {p.e, "e"}})
    if (!(v >= 0))
      throw InvalidParams(std::string("dct_state: parameter ") + name +
                          " must be nonnegative, got " + std::to_string(v));
  if (std::abs(p.trace_sum() - 1.0) > tol::trace)
    throw InvalidParams("dct_state: a + b + 2(c + d + e) must equal 1, got " +
                        std::to_string(p.trace_sum()));
  Mat8 m = Mat8::Zero();
  const double diag[8] = {(p.a + p.b) / 2, p.c, p.d, p.e,
                          p.e, p.d, p.c, (p.a + p.b) / 2};
  for (int i = 0; i < 8; ++i) m(i, i) = diag[i];
  m(0, 7) = m(7, 0) = (p.a - p.b) / 2;
  return DensityMatrix::trusted(m);
}

namespace detail {

inline std::array<Complex, 2> random_qubit(SplitMix64& g) {
  while (true) {
    std::array<Complex, 2> q{g.next_complex_normal(), g.next_complex_normal()};
    double n = std::sqrt(std::norm(q[0]) + std::norm(q[1]));
    if (n > tol::zero_vector) return {q[0] / n, q[1] / n};
  }
}

}  // namespace detail

/// Haar-random direction: normalized i.i.d. complex Gaussian amplitudes.
inline PureState random_pure(std::uint64_t seed) {
  SplitMix64 g(seed);
  Amp8 v;
  for (int i = 0; i < 8; ++i) v(i) = g.next_complex_normal();
  return pure_from_amplitudes(v, true);
}

inline PureState random_product_pure(std::uint64_t seed) {
  SplitMix64 g(seed);
  auto u = detail::random_qubit(g);
  auto v = detail::random_qubit(g);
  auto t = detail::random_qubit(g);
  return product(u, v, t);
}

/// Convex mixture of k random product projectors with flat-Dirichlet
/// weights; fully separable by construction.
inline DensityMatrix random_separable_mixed(std::uint64_t seed, int k) {
  if (k < 1 || k > 16)
    throw InvalidParams("random_separable_mixed: k must be in [1, 16], got " +
                        std::to_string(k));
  SplitMix64 g(seed);
  double wsum = 0;
  std::array<double, 16> w{};
  for (int i = 0; i < k; ++i) {
    w[i] = -std::log(1.0 - g.next_uniform());
    wsum += w[i];
  }
  Mat8 m = Mat8::Zero();
  for (int i = 0; i < k; ++i) {
    auto psi = product(detail::random_qubit(g), detail::random_qubit(g),
                       detail::random_qubit(g));
    m += (w[i] / wsum) * (psi.amp() * psi.amp().adjoint());
  }
  return DensityMatrix::trusted(m);
}

/// Full-rank random state: G G^dagger / tr for a complex Gaussian G.
inline DensityMatrix random_density(std::uint64_t seed) {
  SplitMix64 g(seed);
  Mat8 gm;
  for (int r = 0; r < 8; ++r)
    for (int c = 0; c < 8; ++c) gm(r, c) = g.next_complex_normal();
  Mat8 m = gm * gm.adjoint();
  m /= m.trace().real();
  return DensityMatrix::trusted((m + m.adjoint()) / 2.0);
}

}  // namespace sep3q
