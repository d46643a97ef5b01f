#include <cstdlib>

#include <catch2/catch_amalgamated.hpp>

#include "helpers.hpp"

using namespace sep3q;

namespace {

const SOperatorSet& full_ops() { return build_s_operators(OperatorVariant::Full9); }

AMatrixSet a_for(const DensityMatrix& rho) { return build_a_matrices(rho, full_ops()); }

ZCandidate basis_z(int count, int idx) {
  ZCandidate z;
  z.z = VecX::Zero(count);
  z.z(idx) = 1.0;
  return z;
}

}  // namespace

TEST_CASE("A matrices of a basis product projector are zero", "[mixed]") {
  Amp8 v = Amp8::Zero();
  v(0) = 1;
  auto a = a_for(density_from_pure(pure_from_amplitudes(v)));
  REQUIRE(a.rank == 1);
  REQUIRE(a.count() == 9);
  for (const auto& m : a.matrices) REQUIRE(std::abs(m(0, 0)) < 1e-14);
}

TEST_CASE("A matrices of the GHZ projector carry the C components", "[mixed]") {
  auto a = a_for(density_from_pure(ghz()));
  REQUIRE(a.rank == 1);
  for (int i = 0; i < 6; ++i) REQUIRE(std::abs(a.matrices[i](0, 0)) < 1e-12);
  for (int i = 6; i < 9; ++i)
    REQUIRE(std::abs(a.matrices[i](0, 0)) == Catch::Approx(1.0).margin(1e-12));
}

TEST_CASE("A matrices of the maximally mixed state are the operators over "
          "eight, up to the eigenbasis gauge", "[mixed]") {
  auto a = a_for(DensityMatrix::trusted(Mat8::Identity() / 8.0));
  REQUIRE(a.rank == 8);
  // The eigenbasis of a fully degenerate spectrum is any unitary, so compare
  // the gauge-invariant part: singular values match s/8 and A stays symmetric.
  for (int i = 0; i < 9; ++i) {
    auto sa = singular_values(a.matrices[i]);
    auto ss = singular_values(MatX(full_ops().matrices[i] / 8.0));
    for (int j = 0; j < 8; ++j)
      REQUIRE(std::abs(sa.values(j) - ss.values(j)) < 1e-12);
  }
}

TEST_CASE("A matrices are complex symmetric", "[mixed][property]") {
  for (std::uint64_t s = 0; s < 10; ++s) {
    auto a = a_for(random_density(s));
    for (const auto& m : a.matrices)
      REQUIRE((m - m.transpose()).cwiseAbs().maxCoeff() < 1e-12);
  }
}

TEST_CASE("score on rank-1 sets is the aligned component sum", "[mixed]") {
  auto a = a_for(density_from_pure(w()));
  REQUIRE(a.rank == 1);
  SplitMix64 g(3);
  for (int trial = 0; trial < 20; ++trial) {
    ZCandidate z;
    z.z.resize(9);
    for (int i = 0; i < 9; ++i) z.z(i) = g.next_complex_normal();
    z.z /= z.z.norm();
    Complex total = 0;
    for (int i = 0; i < 9; ++i) total += z.z(i) * a.matrices[i](0, 0);
    REQUIRE(score(z, a) == Catch::Approx(std::abs(total)).margin(1e-12));
  }
}

TEST_CASE("score of all-zero A matrices vanishes", "[mixed]") {
  Amp8 v = Amp8::Zero();
  v(0) = 1;
  auto a = a_for(density_from_pure(pure_from_amplitudes(v)));
  REQUIRE(score(basis_z(9, 0), a) < 1e-13);
}

TEST_CASE("score on a basis vector reads one A matrix", "[mixed]") {
  auto a = a_for(shifts_complement());
  for (int i = 0; i < 9; ++i) {
    auto sv = singular_values(a.matrices[i]);
    double expected = 2.0 * sv.largest() - sv.sum();
    REQUIRE(score(basis_z(9, i), a) == Catch::Approx(expected).margin(1e-12));
  }
}

TEST_CASE("score rejects mismatched dimensions", "[mixed]") {
  auto a = a_for(shifts_complement());
  REQUIRE_THROWS_AS(score(basis_z(6, 0), a), InvalidParams);
}

TEST_CASE("closed-form candidate on rank-1 sets", "[mixed]") {
  auto ag = a_for(density_from_pure(ghz()));
  auto zg = optimal_z_rank1(ag);
  for (int i = 0; i < 6; ++i) REQUIRE(std::abs(zg.z(i)) < 1e-12);
  for (int i = 6; i < 9; ++i)
    REQUIRE(std::abs(zg.z(i)) == Catch::Approx(1 / std::sqrt(3.0)).margin(1e-12));
  REQUIRE(score(zg, ag) == Catch::Approx(std::sqrt(3.0)).margin(1e-12));

  Amp8 v = Amp8::Zero();
  v(0) = 1;
  auto a0 = a_for(density_from_pure(pure_from_amplitudes(v)));
  auto z0 = optimal_z_rank1(a0);
  REQUIRE(std::abs(z0.z(0) - Complex(1, 0)) < 1e-14);
  REQUIRE(score(z0, a0) < 1e-13);

  auto aw = a_for(density_from_pure(w()));
  REQUIRE(score(optimal_z_rank1(aw), aw) ==
          Catch::Approx(2 / std::sqrt(3.0)).margin(1e-12));

  REQUIRE_THROWS_AS(optimal_z_rank1(a_for(shifts_complement())), WrongRank);
}

TEST_CASE("refine honors its contract", "[mixed]") {
  auto a = a_for(shifts_complement());
  ZCandidate z0 = basis_z(9, 6);

  auto same = refine(z0, a, 0, 13);
  REQUIRE((same.z - z0.z).cwiseAbs().maxCoeff() == 0.0);

  double s0 = score(z0, a);
  for (int iters : {10, 100, 400}) {
    auto z = refine(z0, a, iters, 13);
    REQUIRE(score(z, a) >= s0);
  }

  auto ag = a_for(density_from_pure(ghz()));
  auto zstar = optimal_z_rank1(ag);
  auto polished = refine(zstar, ag, 200, 13);
  REQUIRE(std::abs(score(polished, ag) - score(zstar, ag)) < 1e-12);
}

TEST_CASE("random_search on separable inputs certifies nothing", "[mixed]") {
  SearchConfig cfg;
  cfg.samples = 1500;
  cfg.refine_iters = 30;
  Amp8 v = Amp8::Zero();
  v(5) = 1;
  auto res = random_search(a_for(density_from_pure(pure_from_amplitudes(v))), cfg);
  REQUIRE(res.certificate == 0.0);
}

TEST_CASE("random_search recovers the GHZ value from the closed form",
          "[mixed]") {
  SearchConfig cfg;
  cfg.samples = 10;
  cfg.refine_iters = 0;
  auto res = random_search(a_for(density_from_pure(ghz())), cfg);
  REQUIRE(res.certificate == Catch::Approx(std::sqrt(3.0)).margin(1e-12));
  REQUIRE(res.samples_evaluated == 9 + 1 + 10);
}

TEST_CASE("random_search validates its configuration", "[mixed]") {
  auto a = a_for(density_from_pure(ghz()));
  SearchConfig bad;
  bad.samples = 0;
  REQUIRE_THROWS_AS(random_search(a, bad), InvalidParams);
  SearchConfig neg;
  neg.refine_iters = -1;
  REQUIRE_THROWS_AS(random_search(a, neg), InvalidParams);
}

TEST_CASE("projector certificates equal the pure-state norm", "[mixed][property]") {
  SearchConfig cfg;
  cfg.samples = 64;
  cfg.refine_iters = 0;
  for (std::uint64_t s = 0; s < 100; ++s) {
    auto psi = random_pure(40000 + s);
    auto res = c_mixed(density_from_pure(psi), cfg);
    REQUIRE(std::abs(res.certificate - c_vector(psi).norm()) < 1e-8);
  }
}

TEST_CASE("separable mixtures stay below the numerical floor", "[mixed][property]") {
  SearchConfig cfg;
  cfg.samples = 1500;
  cfg.refine_iters = 30;
  // Mixtures of >= 4 products have a strictly negative score supremum, so
  // the clamp lands on exactly zero.
  for (std::uint64_t s = 0; s < 20; ++s) {
    auto res = c_mixed(random_separable_mixed(50000 + s, 4 + s % 13), cfg);
    REQUIRE(res.best_score <= 1e-7);
    REQUIRE(res.certificate == 0.0);
  }
}

TEST_CASE("the maximally mixed state earns no certificate", "[mixed]") {
  SearchConfig cfg;
  cfg.samples = 1500;
  cfg.refine_iters = 30;
  auto res = c_mixed(DensityMatrix::trusted(Mat8::Identity() / 8.0), cfg);
  REQUIRE(res.best_score < 0.0);
  REQUIRE(res.certificate == 0.0);
}

TEST_CASE("short product mixtures sit on the score boundary", "[mixed][property]") {
  // With 1-3 product terms the supremum is exactly zero and attained, so
  // rounding can land a hair either side of it; the certificate stays at
  // noise level and the verdict stays inconclusive.
  SearchConfig cfg;
  cfg.samples = 1500;
  cfg.refine_iters = 30;
  for (std::uint64_t s = 0; s < 9; ++s) {
    auto res = c_mixed(random_separable_mixed(90000 + s, 1 + s % 3), cfg);
    REQUIRE(std::abs(res.best_score) <= 1e-12);
    REQUIRE(res.certificate <= 1e-12);
    REQUIRE(mixed_verdict(res) == MixedVerdict::Inconclusive);
  }
}

TEST_CASE("score is invariant under a global phase on z", "[mixed][property]") {
  auto a = a_for(shifts_complement());
  SplitMix64 g(17);
  for (int trial = 0; trial < 10; ++trial) {
    ZCandidate z;
    z.z.resize(9);
    for (int i = 0; i < 9; ++i) z.z(i) = g.next_complex_normal();
    z.z /= z.z.norm();
    double base = score(z, a);
    for (double theta : {0.3, 1.1, 2.9}) {
      ZCandidate rot;
      rot.z = z.z * std::polar(1.0, theta);
      REQUIRE(score(rot, a) == Catch::Approx(base).margin(1e-12));
    }
  }
}

TEST_CASE("certificate grows with the sample budget", "[mixed][property]") {
  auto a = a_for(shifts_complement());
  double prev = -1;
  for (std::uint64_t n : {500, 1000, 2000, 4000}) {
    SearchConfig cfg;
    cfg.samples = n;
    cfg.refine_iters = 0;
    cfg.seed = 13;
    double cert = random_search(a, cfg).certificate;
    REQUIRE(cert >= prev);
    prev = cert;
  }
}

TEST_CASE("certificate grows along a mixing path toward GHZ", "[mixed][property]") {
  auto sep = random_separable_mixed(5, 4);
  auto gp = density_from_pure(ghz());
  SearchConfig cfg;
  cfg.samples = 4000;
  cfg.refine_iters = 150;
  cfg.seed = 13;
  double prev = -1;
  for (int i = 0; i <= 5; ++i) {
    double p = i / 5.0;
    Mat8 m = (1 - p) * sep.m() + p * gp.m();
    double cert = c_mixed(DensityMatrix::trusted(m), cfg).certificate;
    REQUIRE(cert >= prev - 1e-6);
    prev = cert;
  }
  REQUIRE(prev == Catch::Approx(std::sqrt(3.0)).margin(1e-6));
}

TEST_CASE("complex sampling contains the nonnegative real slice", "[mixed][property]") {
  // On the complement state the restriction is strict: nonnegative real z
  // never scores above the noise floor, while complex z certifies
  // entanglement outright.
  auto abar = a_for(shifts_complement());
  SearchConfig creal;
  creal.samples = 3000;
  creal.refine_iters = 100;
  creal.z_mode = ZMode::RealNonnegative;
  SearchConfig ccplx = creal;
  ccplx.z_mode = ZMode::Complex;
  auto rreal = random_search(abar, creal);
  auto rcplx = random_search(abar, ccplx);
  REQUIRE(rreal.certificate <= 1e-12);
  REQUIRE(rcplx.certificate > 0.1);

  // On the corner-block state both modes land near the same optimum; the
  // real slice converges faster there, so containment is asserted through
  // the guaranteed route: refining the real winner inside the complex
  // sphere can only keep or beat its value. The matched-budget comparison
  // gets a sampling-noise allowance.
  auto adct = a_for(dct_state({1.0 / 3, 0, 1.0 / 6, 1.0 / 6, 0}));
  auto dreal = random_search(adct, creal);
  auto dcplx = random_search(adct, ccplx);
  auto lifted = refine(dreal.best_z, adct, 200, 99, ZMode::Complex);
  REQUIRE(score(lifted, adct) >= dreal.certificate - 1e-12);
  REQUIRE(dcplx.certificate >= dreal.certificate - 0.1);
}

TEST_CASE("results are bit-identical across thread layouts", "[mixed]") {
  auto a = a_for(shifts_complement());
  SearchConfig cfg;
  cfg.samples = 20000;
  cfg.refine_iters = 50;
  cfg.seed = 13;

  cfg.threads = 1;
  auto r1 = random_search(a, cfg);
  cfg.threads = 4;
  auto r4 = random_search(a, cfg);
  REQUIRE(r1.certificate == r4.certificate);
  REQUIRE(r1.best_score == r4.best_score);
  REQUIRE((r1.best_z.z - r4.best_z.z).cwiseAbs().maxCoeff() == 0.0);

  setenv("SEP3Q_THREADS", "3", 1);
  cfg.threads = 0;
  auto renv = random_search(a, cfg);
  unsetenv("SEP3Q_THREADS");
  REQUIRE(renv.certificate == r1.certificate);
}

TEST_CASE("refinement gain is reported and nonnegative", "[mixed]") {
  SearchConfig cfg;
  cfg.samples = 2000;
  cfg.refine_iters = 100;
  cfg.seed = 13;
  auto res = c_mixed(shifts_complement(), cfg);
  REQUIRE(res.refinement_gain >= 0.0);
  REQUIRE(res.best_score == Catch::Approx(res.certificate).margin(1e-15));
  REQUIRE(res.certificate > 0.1);
}
