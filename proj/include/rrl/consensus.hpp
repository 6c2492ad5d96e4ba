#pragma once

// Discrete-time averaging dynamics x(t+1) = R x(t) driven by the degree-scaled
// adjacency weights. Steps run in O(N*m) straight off the band structure; no
// matrix is ever formed. The empirical contraction rate fitted from the error
// trace is the quantity the essential spectral radius predicts.

#include <cmath>
#include <cstdint>
#include <numeric>
#include <random>
#include <stdexcept>
#include <string>
#include <vector>

#include "rrl/graph.hpp"

namespace rrl::consensus {

// Below this, the disagreement norm is treated as roundoff floor, not signal.
inline constexpr double kErrorFloor = 1e-13;

// A rate fit needs at least this many above-floor samples to mean anything.
inline constexpr int kMinFitWindow = 20;

struct Trajectory {
  int N = 0;
  int m = 0;
  int steps = 0;
  double mean = 0.0;                // conserved average of the state
  bool bipartite = false;           // even cycle: the weight matrix is periodic
  std::vector<double> errors;       // errors[t] = ||x(t) - mean|| for t = 0..steps
  std::vector<double> final_state;
};

struct RateEstimate {
  double rate = 1.0;
  bool fitted = false;
  int window_begin = 0;
  int window_end = 0;
  std::string note;
};

inline std::vector<double> random_state(int N, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  std::uniform_real_distribution<double> unif(0.0, 1.0);
  std::vector<double> x(static_cast<std::size_t>(N));
  for (double& v : x) v = unif(rng);
  return x;
}

inline Trajectory run_from_state(const RingLattice& g, std::vector<double> x,
                                 int steps) {
  if (steps < 0) throw std::invalid_argument("steps must be nonnegative");
  if (static_cast<int>(x.size()) != g.N)
    throw std::invalid_argument("state size does not match N");

  const int N = g.N;
  const double inv_deg = 1.0 / (2.0 * g.m);

  Trajectory tr;
  tr.N = N;
  tr.m = g.m;
  tr.steps = steps;
  tr.bipartite = (N % 2 == 0 && g.m == 1);
  tr.mean = std::accumulate(x.begin(), x.end(), 0.0) / N;
  tr.errors.reserve(static_cast<std::size_t>(steps) + 1);

  // Disagreement is measured against the state's own average: measuring
  // against the initial mean would turn the slow rounding drift of the mean
  // (well under the conservation gate, but nonzero) into a false error floor.
  auto disagreement = [N](const std::vector<double>& s) {
    const double mu = std::accumulate(s.begin(), s.end(), 0.0) / N;
    double q = 0.0;
    for (double v : s) {
      const double d = v - mu;
      q += d * d;
    }
    return std::sqrt(q);
  };

  std::vector<double> y(static_cast<std::size_t>(N));
  tr.errors.push_back(disagreement(x));
  for (int t = 0; t < steps; ++t) {
    for (int i = 0; i < N; ++i) {
      double acc = 0.0;
      for (int off = 1; off <= g.m; ++off)
        acc += x[static_cast<std::size_t>((i + off) % N)] +
               x[static_cast<std::size_t>((i - off + N) % N)];
      y[static_cast<std::size_t>(i)] = acc * inv_deg;
    }
    x.swap(y);
    const double mean_now = std::accumulate(x.begin(), x.end(), 0.0) / N;
    if (std::fabs(mean_now - tr.mean) > 1e-10 * std::max(1.0, std::fabs(tr.mean)))
      throw std::runtime_error("averaging step failed to conserve the mean");
    tr.errors.push_back(disagreement(x));
  }
  tr.final_state = std::move(x);
  return tr;
}

inline Trajectory run(const RingLattice& g, int steps, std::uint64_t seed) {
  return run_from_state(g, random_state(g.N, seed), steps);
}

// Least-squares slope of log(error) over the last half of the above-floor
// samples; the early half is discarded so transients from subdominant modes
// do not bias the fit.
inline RateEstimate empirical_rate(const Trajectory& tr) {
  RateEstimate est;
  if (tr.bipartite) {
    est.rate = 1.0;
    est.note = "bipartite: the dynamics oscillate and never converge";
    return est;
  }

  int last = -1;
  for (int t = 0; t < static_cast<int>(tr.errors.size()); ++t)
    if (tr.errors[static_cast<std::size_t>(t)] > kErrorFloor) last = t;
  if (last + 1 < kMinFitWindow) {
    est.note = "fewer than " + std::to_string(kMinFitWindow) +
               " error samples above the noise floor";
    return est;
  }

  est.window_begin = (last + 1) / 2;
  est.window_end = last;
  double st = 0.0, sy = 0.0, stt = 0.0, sty = 0.0;
  int count = 0;
  for (int t = est.window_begin; t <= est.window_end; ++t) {
    const double e = tr.errors[static_cast<std::size_t>(t)];
    if (e <= 0.0) continue;
    const double y = std::log(e);
    st += t;
    sy += y;
    stt += static_cast<double>(t) * t;
    sty += t * y;
    ++count;
  }
  if (count < 2) {
    est.note = "degenerate fit window";
    return est;
  }
  const double slope = (count * sty - st * sy) / (count * stt - st * st);
  est.rate = std::exp(slope);
  est.fitted = true;
  return est;
}

}  // namespace rrl::consensus
