#pragma once

#include <array>
#include <cstdint>
#include <vector>

#include "sep3q/types.hpp"

namespace sep3q {

/// Which set of detection operators to use.
///
/// Full9 is the canonical nine-operator set; every verdict in this library
/// uses it. Reduced folds the six "surface" operators into three (plus the
/// shared diagonal-plane trio) and is exposed for experimentation only: a
/// vanishing reduced vector does NOT imply separability (see the
/// counterexample test in the pure-criterion suite).
enum class OperatorVariant { Full9, Reduced };

namespace detail {

// Dense entry tables for the detection operators, entries in {0, +-1, +-i}
// encoded as {0, +-1, +-2}. The operators are, in order,
//   s1 = -sy (x) sy (x) I1     s2 = -sy (x) sy (x) I2
//   s3 = -sy (x) I1 (x) sy     s4 = -sy (x) I2 (x) sy
//   s5 = -I1 (x) sy (x) sy     s6 = -I2 (x) sy (x) sy
//   s7 = -Iv (x) sy (x) sy     s8 = -sy (x) Iv (x) sy
//   s9 = -sy (x) sy (x) Iv
// with sy = [[0,-i],[i,0]], I1 = diag(1,0), I2 = diag(0,1), Iv = [[0,1],[1,0]].
// The reduced extras replace (s1,s2), (s3,s4), (s5,s6) by single operators
// built with It = diag(1,i) in place of I1/I2.
// A test regenerates every table from the Kronecker definitions and
// compares exactly.
inline constexpr std::array<std::array<std::int8_t, 64>, 9> kFullOpCodes{{
    {{ 0,  0,  0,  0,  0,  0,  1,  0,
      0,  0,  0,  0,  0,  0,  0,  0,
      0,  0,  0,  0, -1,  0,  0,  0,
      0,  0,  0,  0,  0,  0,  0,  0,
      0,  0, -1,  0,  0,  0,  0,  0,
      0,  0,  0,  0,  0,  0,  0,  0,
      1,  0,  0,  0,  0,  0,  0,  0,
      0,  0,  0,  0,  0,  0,  0,  0}},
    {{ 0,  0,  0,  0,  0,  0,  0,  0,
      0,  0,  0,  0,  0,  0,  0,  1,
      0,  0,  0,  0,  0,  0,  0,  0,
      0,  0,  0,  0,  0, -1,  0,  0,
      0,  0,  0,  0,  0,  0,  0,  0,
      0,  0,  0, -1,  0,  0,  0,  0,
      0,  0,  0,  0,  0,  0,  0,  0,
      0,  1,  0,  0,  0,  0,  0,  0}},
    {{ 0,  0,  0,  0,  0,  1,  0,  0,
      0,  0,  0,  0, -1,  0,  0,  0,
      0,  0,  0,  0,  0,  0,  0,  0,
      0,  0,  0,  0,  0,  0,  0,  0,
      0, -1,  0,  0,  0,  0,  0,  0,
      1,  0,  0,  0,  0,  0,  0,  0,
      0,  0,  0,  0,  0,  0,  0,  0,
      0,  0,  0,  0,  0,  0,  0,  0}},
    {{ 0,  0,  0,  0,  0,  0,  0,  0,
      0,  0,  0,  0,  0,  0,  0,  0,
      0,  0,  0,  0,  0,  0,  0,  1,
      0,  0,  0,  0,  0,  0, -1,  0,
      0,  0,  0,  0,  0,  0,  0,  0,
      0,  0,  0,  0,  0,  0,  0,  0,
      0,  0,  0, -1,  0,  0,  0,  0,
      0,  0,  1,  0,  0,  0,  0,  0}},
    {{ 0,  0,  0,  1,  0,  0,  0,  0,
      0,  0, -1,  0,  0,  0,  0,  0,
      0, -1,  0,  0,  0,  0,  0,  0,
      1,  0,  0,  0,  0,  0,  0,  0,
      0,  0,  0,  0,  0,  0,  0,  0,
      0,  0,  0,  0,  0,  0,  0,  0,
      0,  0,  0,  0,  0,  0,  0,  0,
      0,  0,  0,  0,  0,  0,  0,  0}},
    {{ 0,  0,  0,  0,  0,  0,  0,  0,
      0,  0,  0,  0,  0,  0,  0,  0,
      0,  0,  0,  0,  0,  0,  0,  0,
      0,  0,  0,  0,  0,  0,  0,  0,
      0,  0,  0,  0,  0,  0,  0,  1,
      0,  0,  0,  0,  0,  0, -1,  0,
      0,  0,  0,  0,  0, -1,  0,  0,
      0,  0,  0,  0,  1,  0,  0,  0}},
    {{ 0,  0,  0,  0,  0,  0,  0,  1,
      0,  0,  0,  0,  0,  0, -1,  0,
      0,  0,  0,  0,  0, -1,  0,  0,
      0,  0,  0,  0,  1,  0,  0,  0,
      0,  0,  0,  1,  0,  0,  0,  0,
      0,  0, -1,  0,  0,  0,  0,  0,
      0, -1,  0,  0,  0,  0,  0,  0,
      1,  0,  0,  0,  0,  0,  0,  0}},
    {{ 0,  0,  0,  0,  0,  0,  0,  1,
      0,  0,  0,  0,  0,  0, -1,  0,
      0,  0,  0,  0,  0,  1,  0,  0,
      0,  0,  0,  0, -1,  0,  0,  0,
      0,  0,  0, -1,  0,  0,  0,  0,
      0,  0,  1,  0,  0,  0,  0,  0,
      0, -1,  0,  0,  0,  0,  0,  0,
      1,  0,  0,  0,  0,  0,  0,  0}},
    {{ 0,  0,  0,  0,  0,  0,  0,  1,
      0,  0,  0,  0,  0,  0,  1,  0,
      0,  0,  0,  0,  0, -1,  0,  0,
      0,  0,  0,  0, -1,  0,  0,  0,
      0,  0,  0, -1,  0,  0,  0,  0,
      0,  0, -1,  0,  0,  0,  0,  0,
      0,  1,  0,  0,  0,  0,  0,  0,
      1,  0,  0,  0,  0,  0,  0,  0}},
}};

inline constexpr std::array<std::array<std::int8_t, 64>, 3> kReducedExtraOpCodes{{
    {{ 0,  0,  0,  0,  0,  0,  1,  0,
      0,  0,  0,  0,  0,  0,  0,  2,
      0,  0,  0,  0, -1,  0,  0,  0,
      0,  0,  0,  0,  0, -2,  0,  0,
      0,  0, -1,  0,  0,  0,  0,  0,
      0,  0,  0, -2,  0,  0,  0,  0,
      1,  0,  0,  0,  0,  0,  0,  0,
      0,  2,  0,  0,  0,  0,  0,  0}},
    {{ 0,  0,  0,  0,  0,  1,  0,  0,
      0,  0,  0,  0, -1,  0,  0,  0,
      0,  0,  0,  0,  0,  0,  0,  2,
      0,  0,  0,  0,  0,  0, -2,  0,
      0, -1,  0,  0,  0,  0,  0,  0,
      1,  0,  0,  0,  0,  0,  0,  0,
      0,  0,  0, -2,  0,  0,  0,  0,
      0,  0,  2,  0,  0,  0,  0,  0}},
    {{ 0,  0,  0,  1,  0,  0,  0,  0,
      0,  0, -1,  0,  0,  0,  0,  0,
      0, -1,  0,  0,  0,  0,  0,  0,
      1,  0,  0,  0,  0,  0,  0,  0,
      0,  0,  0,  0,  0,  0,  0,  2,
      0,  0,  0,  0,  0,  0, -2,  0,
      0,  0,  0,  0,  0, -2,  0,  0,
      0,  0,  0,  0,  2,  0,  0,  0}},
}};

inline Mat8 decode_op(const std::array<std::int8_t, 64>& codes) {
  static constexpr Complex lut[5] = {
      Complex(0, -1), Complex(-1, 0), Complex(0, 0), Complex(1, 0), Complex(0, 1)};
  Mat8 m;
  for (int r = 0; r < 8; ++r)
    for (int c = 0; c < 8; ++c) m(r, c) = lut[codes[8 * r + c] + 2];
  return m;
}

}  // namespace detail

/// The constant detection-operator matrices for one variant.
struct SOperatorSet {
  OperatorVariant variant;
  std::vector<Mat8> matrices;

  int count() const { return static_cast<int>(matrices.size()); }
};

/// Materializes the operator set (9 matrices for Full9, 6 for Reduced).
inline const SOperatorSet& build_s_operators(OperatorVariant variant) {
  static const SOperatorSet full = [] {
    SOperatorSet s{OperatorVariant::Full9, {}};
    for (const auto& codes : detail::kFullOpCodes)
      s.matrices.push_back(detail::decode_op(codes));
    return s;
  }();
  static const SOperatorSet reduced = [] {
    SOperatorSet s{OperatorVariant::Reduced, {}};
    for (const auto& codes : detail::kReducedExtraOpCodes)
      s.matrices.push_back(detail::decode_op(codes));
    for (int a = 6; a < 9; ++a)  // s7..s9 are shared between the variants
      s.matrices.push_back(detail::decode_op(detail::kFullOpCodes[a]));
    return s;
  }();
  return variant == OperatorVariant::Full9 ? full : reduced;
}

}  // namespace sep3q
