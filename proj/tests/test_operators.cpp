#include <catch2/catch_amalgamated.hpp>

#include "helpers.hpp"

using namespace sep3q;
using testutil::kron3;

namespace {

Mat2 sy() {
  Mat2 m;
  m << Complex(0, 0), Complex(0, -1), Complex(0, 1), Complex(0, 0);
  return m;
}

Mat2 diag2(Complex a, Complex b) {
  Mat2 m = Mat2::Zero();
  m(0, 0) = a;
  m(1, 1) = b;
  return m;
}

Mat2 flip2() {
  Mat2 m = Mat2::Zero();
  m(0, 1) = m(1, 0) = 1;
  return m;
}

}  // namespace

TEST_CASE("full operator tables match their Kronecker definitions exactly",
          "[operators]") {
  const Mat2 y = sy(), i1 = diag2(1, 0), i2 = diag2(0, 1), iv = flip2();
  const Mat8 expected[9] = {
      -kron3(y, y, i1), -kron3(y, y, i2), -kron3(y, i1, y),
      -kron3(y, i2, y), -kron3(i1, y, y), -kron3(i2, y, y),
      -kron3(iv, y, y), -kron3(y, iv, y), -kron3(y, y, iv),
  };
  const auto& ops = build_s_operators(OperatorVariant::Full9);
  REQUIRE(ops.count() == 9);
  for (int a = 0; a < 9; ++a)
    for (int r = 0; r < 8; ++r)
      for (int c = 0; c < 8; ++c)
        REQUIRE(ops.matrices[a](r, c) == expected[a](r, c));
}

TEST_CASE("reduced operator tables match their Kronecker definitions exactly",
          "[operators]") {
  const Mat2 y = sy(), it = diag2(1, Complex(0, 1)), iv = flip2();
  const Mat8 expected[6] = {
      -kron3(y, y, it), -kron3(y, it, y), -kron3(it, y, y),
      -kron3(iv, y, y), -kron3(y, iv, y), -kron3(y, y, iv),
  };
  const auto& ops = build_s_operators(OperatorVariant::Reduced);
  REQUIRE(ops.count() == 6);
  for (int a = 0; a < 6; ++a)
    for (int r = 0; r < 8; ++r)
      for (int c = 0; c < 8; ++c)
        REQUIRE(ops.matrices[a](r, c) == expected[a](r, c));
}

TEST_CASE("every operator is complex symmetric", "[operators]") {
  for (auto variant : {OperatorVariant::Full9, OperatorVariant::Reduced})
    for (const auto& s : build_s_operators(variant).matrices)
      for (int r = 0; r < 8; ++r)
        for (int c = 0; c < 8; ++c) REQUIRE(s(r, c) == s(c, r));
}

TEST_CASE("spot values", "[operators]") {
  const auto& ops = build_s_operators(OperatorVariant::Full9);
  REQUIRE(ops.matrices[8](0, 7) == Complex(1, 0));

  auto g = ghz();
  Complex c1 = g.amp().transpose() * ops.matrices[0] * g.amp();
  REQUIRE(c1 == Complex(0, 0));
}
