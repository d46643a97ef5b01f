#pragma once

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <cstdlib>
#include <limits>
#include <string>
#include <thread>
#include <vector>

#include "sep3q/operators.hpp"
#include "sep3q/rng.hpp"
#include "sep3q/spectral.hpp"
#include "sep3q/states.hpp"
#include "sep3q/types.hpp"

namespace sep3q {

/// The operator set conjugated into the support of rho: A^a =
/// sqrt(M) Phi^T s^a Phi sqrt(M), restricted to the r eigenvectors with
/// eigenvalue above rank_tol. Transpose, not adjoint: the A matrices stay
/// complex symmetric.
struct AMatrixSet {
  std::vector<MatX> matrices;
  int rank;

  int count() const { return static_cast<int>(matrices.size()); }
};

/// Unit vector on the search sphere, one complex entry per operator.
struct ZCandidate {
  VecX z;
};

enum class ZMode { Complex, RealNonnegative };

struct SearchConfig {
  std::uint64_t samples = 100000;
  std::uint64_t seed = 13;
  ZMode z_mode = ZMode::Complex;
  int refine_iters = 200;
  OperatorVariant operator_variant = OperatorVariant::Full9;
  double rank_tol = tol::rank_default;
  int threads = 0;  // 0 = hardware concurrency; SEP3Q_THREADS caps either way
};

struct SearchResult {
  double certificate;       // max(0, best_score)
  double best_score;        // may be negative
  ZCandidate best_z;
  std::uint64_t samples_evaluated;
  double refinement_gain;   // best_score minus the best sampled score
};

enum class MixedVerdict { EntangledCertified, Inconclusive };

inline MixedVerdict mixed_verdict(const SearchResult& r,
                                  double verdict_tol = tol::verdict_default) {
  return r.certificate > verdict_tol ? MixedVerdict::EntangledCertified
                                     : MixedVerdict::Inconclusive;
}

inline AMatrixSet build_a_matrices(const DensityMatrix& rho,
                                   const SOperatorSet& ops,
                                   double rank_tol = tol::rank_default) {
  auto eig = eig_hermitian(rho, rank_tol);
  const int r = eig.rank;
  Eigen::Matrix<Complex, 8, Eigen::Dynamic, 0, 8, 8> phi =
      eig.eigenvectors.leftCols(r);
  VecX sq(r);
  for (int i = 0; i < r; ++i) sq(i) = std::sqrt(eig.eigenvalues(i));

  AMatrixSet out{{}, r};
  out.matrices.reserve(ops.count());
  for (const auto& s : ops.matrices) {
    MatX a = sq.asDiagonal() * (phi.transpose() * s * phi) * sq.asDiagonal();
    out.matrices.push_back(((a + a.transpose()) / 2.0).eval());
  }
  return out;
}

/// 2*sigma_1 - sum(sigma) of T(z) = sum_a z_a A^a, i.e. the largest singular
/// value minus all the others. Positive anywhere on the sphere certifies
/// entanglement.
inline double score(const ZCandidate& zc, const AMatrixSet& a) {
  if (zc.z.size() != a.count())
    throw InvalidParams("score: z has " + std::to_string(zc.z.size()) +
                        " components, operator set has " +
                        std::to_string(a.count()));
  MatX t = MatX::Zero(a.rank, a.rank);
  for (int i = 0; i < a.count(); ++i) t += zc.z(i) * a.matrices[i];
  auto sv = singular_values(t);
  return 2.0 * sv.largest() - sv.sum();
}

/// Closed-form argmax for rank-1 sets, where score(z) = |sum_a z_a c_a|
/// with c_a the sole entry of A^a: align z against conj(c).
inline ZCandidate optimal_z_rank1(const AMatrixSet& a) {
  if (a.rank != 1)
    throw WrongRank("optimal_z_rank1: rank is " + std::to_string(a.rank));
  ZCandidate zc;
  zc.z.resize(a.count());
  for (int i = 0; i < a.count(); ++i) zc.z(i) = std::conj(a.matrices[i](0, 0));
  double n = zc.z.norm();
  if (n < tol::zero_vector) {
    zc.z.setZero();
    zc.z(0) = 1.0;
  } else {
    zc.z /= n;
  }
  return zc;
}

namespace detail {

inline ZCandidate draw_z(std::uint64_t seed, std::uint64_t index, int count,
                         ZMode mode) {
  SplitMix64 g(substream_seed(seed, index));
  ZCandidate zc;
  zc.z.resize(count);
  for (int i = 0; i < count; ++i) {
    if (mode == ZMode::Complex)
      zc.z(i) = g.next_complex_normal();
    else
      zc.z(i) = std::abs(g.next_normal());
  }
  double n = zc.z.norm();
  if (n < tol::zero_vector) {
    zc.z.setZero();
    zc.z(0) = 1.0;
  } else {
    zc.z /= n;
  }
  return zc;
}

inline int resolve_threads(int requested, std::uint64_t samples) {
  int t = requested > 0 ? requested
                        : static_cast<int>(std::thread::hardware_concurrency());
  if (t < 1) t = 1;
  if (const char* cap = std::getenv("SEP3Q_THREADS")) {
    int c = std::atoi(cap);
    if (c >= 1) t = std::min(t, c);
  }
  if (samples < static_cast<std::uint64_t>(t))
    t = samples > 0 ? static_cast<int>(samples) : 1;
  return t;
}

struct Best {
  double score = -std::numeric_limits<double>::infinity();
  std::uint64_t id = ~0ULL;
  ZCandidate z;

  void offer(double s, std::uint64_t i, const ZCandidate& cand) {
    if (s > score || (s == score && i < id)) {
      score = s;
      id = i;
      z = cand;
    }
  }
  void merge(const Best& o) { offer(o.score, o.id, o.z); }
};

// Refinement draws from a substream index no sample can reach.
inline constexpr std::uint64_t kRefineStream = ~0ULL;

}  // namespace detail

/// Derivative-free hill climb on the sphere: Gaussian perturbation with a
/// step that grows on accepted moves and shrinks on rejected ones. Only
/// strict improvements are accepted, so score(result) >= score(z0).
/// RealNonnegative mode keeps every component on the nonnegative real axis.
inline ZCandidate refine(const ZCandidate& z0, const AMatrixSet& a, int iters,
                         std::uint64_t seed = 0, ZMode mode = ZMode::Complex) {
  ZCandidate cur = z0;
  if (iters <= 0) return cur;
  double cur_score = score(cur, a);
  SplitMix64 g(substream_seed(seed, detail::kRefineStream));
  double sigma = 0.1;
  const int n = static_cast<int>(cur.z.size());
  for (int it = 0; it < iters; ++it) {
    ZCandidate prop = cur;
    for (int i = 0; i < n; ++i) {
      if (mode == ZMode::Complex)
        prop.z(i) += sigma * g.next_complex_normal();
      else
        prop.z(i) = std::abs(prop.z(i).real() + sigma * g.next_normal());
    }
    double pn = prop.z.norm();
    if (pn < tol::zero_vector) continue;
    prop.z /= pn;
    double s = score(prop, a);
    if (s > cur_score) {
      cur = prop;
      cur_score = s;
      sigma = std::min(sigma * 1.6, 0.5);
    } else {
      sigma = std::max(sigma * 0.7, 1e-7);
    }
  }
  return cur;
}

/// Candidate stage (basis vectors, the rank-1 closed form when applicable,
/// cfg.samples random draws) followed by refinement of the winner. Sample i
/// depends only on (seed, i), and ties break toward the lowest candidate id,
/// so the result is bit-identical for any thread count.
inline SearchResult random_search(const AMatrixSet& a, const SearchConfig& cfg) {
  if (cfg.samples < 1) throw InvalidParams("random_search: samples must be >= 1");
  if (cfg.refine_iters < 0)
    throw InvalidParams("random_search: refine_iters must be >= 0");
  const int k = a.count();

  detail::Best best;
  std::uint64_t next_id = 0;
  for (int i = 0; i < k; ++i) {
    ZCandidate e;
    e.z = VecX::Zero(k);
    e.z(i) = 1.0;
    best.offer(score(e, a), next_id++, e);
  }
  if (a.rank == 1) {
    ZCandidate zc = optimal_z_rank1(a);
    best.offer(score(zc, a), next_id++, zc);
  }
  const std::uint64_t sample_id0 = next_id;

  const int nthreads = detail::resolve_threads(cfg.threads, cfg.samples);
  if (nthreads == 1) {
    for (std::uint64_t i = 0; i < cfg.samples; ++i) {
      ZCandidate zc = detail::draw_z(cfg.seed, i, k, cfg.z_mode);
      best.offer(score(zc, a), sample_id0 + i, zc);
    }
  } else {
    std::vector<detail::Best> partial(nthreads);
    std::vector<std::thread> pool;
    pool.reserve(nthreads);
    const std::uint64_t chunk = (cfg.samples + nthreads - 1) / nthreads;
    for (int t = 0; t < nthreads; ++t) {
      pool.emplace_back([&, t] {
        const std::uint64_t lo = t * chunk;
        const std::uint64_t hi = std::min(cfg.samples, lo + chunk);
        for (std::uint64_t i = lo; i < hi; ++i) {
          ZCandidate zc = detail::draw_z(cfg.seed, i, k, cfg.z_mode);
          partial[t].offer(score(zc, a), sample_id0 + i, zc);
        }
      });
    }
    for (auto& th : pool) th.join();
    for (const auto& p : partial) best.merge(p);
  }

  SearchResult res;
  res.samples_evaluated = sample_id0 + cfg.samples;
  res.best_z = refine(best.z, a, cfg.refine_iters, cfg.seed, cfg.z_mode);
  res.best_score = cfg.refine_iters > 0 ? score(res.best_z, a) : best.score;
  res.refinement_gain = res.best_score - best.score;
  res.certificate = std::max(0.0, res.best_score);
  return res;
}

/// The full certificate pipeline. A positive certificate proves
/// entanglement; zero is inconclusive (never "separable").
inline SearchResult c_mixed(const DensityMatrix& rho, const SearchConfig& cfg) {
  return random_search(
      build_a_matrices(rho, build_s_operators(cfg.operator_variant), cfg.rank_tol),
      cfg);
}

}  // namespace sep3q
