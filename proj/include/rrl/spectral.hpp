// spectral.hpp — closed-form spectra of ring-lattice matrices and their extremal structure.
//
// Everything here is a function of (N, m, j) through the Dirichlet kernel sampled
// at x_j = 2*pi*j/N: with t_j = D_m(x_j),
//   adjacency             a_j = 2 (t_j - 1/2)
//   laplacian             l_j = 1 + 2 (m - t_j)          = 2m - a_j
//   averaging (randic)    r_j = (t_j - 1/2) / m            in [-1, 1], r_0 = 1
//   normalized laplacian  h_j = l_j / (2m)
// and the spectrum is symmetric: value(N - j) = value(j).
#pragma once

#include <algorithm>
#include <cmath>
#include <stdexcept>
#include <vector>

#include "rrl/dirichlet.hpp"
#include "rrl/graph.hpp"

namespace rrl {

inline constexpr double kIndexTieTol = 1e-12;  // ties on kernel values

inline double kernel_sample(const RingLattice& g, int j) {
  return dirichlet::eval(g.m, 2.0 * g.theta() * j);
}

inline void require_eigenindex(const RingLattice& g, int j) {
  if (j < 0 || j >= g.N)
    throw std::invalid_argument("eigenvalue index j must satisfy 0 <= j <= N-1");
}

inline double adjacency_eigenvalue(const RingLattice& g, int j) {
  require_eigenindex(g, j);
  return 2.0 * (kernel_sample(g, j) - 0.5);
}

inline double laplacian_eigenvalue(const RingLattice& g, int j) {
  require_eigenindex(g, j);
  return 1.0 + 2.0 * (g.m - kernel_sample(g, j));
}

inline double randic_eigenvalue(const RingLattice& g, int j) {
  require_eigenindex(g, j);
  return (kernel_sample(g, j) - 0.5) / g.m;
}

inline double normalized_laplacian_eigenvalue(const RingLattice& g, int j) {
  require_eigenindex(g, j);
  return (1.0 + 2.0 * (g.m - kernel_sample(g, j))) / (2.0 * g.m);
}

inline double eigenvalue(const RingLattice& g, MatrixKind kind, int j) {
  switch (kind) {
    case MatrixKind::adjacency: return adjacency_eigenvalue(g, j);
    case MatrixKind::laplacian: return laplacian_eigenvalue(g, j);
    case MatrixKind::randic: return randic_eigenvalue(g, j);
    case MatrixKind::normalized_laplacian: return normalized_laplacian_eigenvalue(g, j);
  }
  throw std::logic_error("unknown matrix kind");
}

struct SpectrumReport {
  MatrixKind kind{};
  int N = 0;
  int m = 0;
  std::vector<double> values;  // indexed j = 0..N-1
};

inline SpectrumReport full_spectrum(const RingLattice& g, MatrixKind kind) {
  SpectrumReport s;
  s.kind = kind;
  s.N = g.N;
  s.m = g.m;
  s.values.resize(g.N);
  for (int j = 0; j < g.N; ++j) s.values[j] = eigenvalue(g, kind, j);
  return s;
}

// Index pairs (j, N-j) that carry equal eigenvalues.
inline std::vector<std::pair<int, int>> symmetric_pairs(int N) {
  std::vector<std::pair<int, int>> p;
  for (int j = 1; 2 * j < N; ++j) p.emplace_back(j, N - j);
  return p;
}

// Algebraic connectivity: the first nontrivial laplacian eigenvalue. Lies in
// (0, 2m], hitting 2m exactly when 2m = N - 2.
inline double fiedler_value(const RingLattice& g) { return laplacian_eigenvalue(g, 1); }

// Smallest index attaining the minimum kernel sample over j = 2..n
// (ties resolved to the smallest index, tolerance kIndexTieTol).
inline int spectral_radius_index(const RingLattice& g) {
  const int n = g.n();
  double best = kernel_sample(g, 2);
  for (int j = 3; j <= n; ++j) best = std::min(best, kernel_sample(g, j));
  for (int j = 2; j <= n; ++j)
    if (kernel_sample(g, j) <= best + kIndexTieTol) return j;
  throw std::logic_error("unreachable");
}

// Largest laplacian eigenvalue; in (2m+1, 4m], = 4m exactly for even N, m = 1.
inline double laplacian_spectral_radius(const RingLattice& g) {
  return laplacian_eigenvalue(g, spectral_radius_index(g));
}

namespace detail {

// Abscissas of the kernel's interior minima with closed forms, m = 2..5.
inline double first_min_x(int m) {
  switch (m) {
    case 2: return std::acos(-0.25);
    case 3: return std::acos((std::sqrt(7.0) - 1.0) / 6.0);
    case 4: {
      const double a = (6.0 * std::cos((4.0 * std::atan(1.0 / std::sqrt(5.0)) -
                                        std::numbers::pi) / 3.0) - 1.0) / 8.0;
      if (std::fabs(a) > 1.0) throw std::logic_error("first_min_x: arccos argument out of range");
      return std::acos(a);
    }
    case 5: {
      const double t = std::atan(std::sqrt(55.0) / 11.0);
      const double c1 = std::sqrt(std::sqrt(11.0) - 5.0 * std::cos((t + std::numbers::pi) / 3.0));
      const double c2 = std::sqrt(std::sqrt(11.0) - 5.0 * std::cos((t - std::numbers::pi) / 3.0));
      const double c3 = std::sqrt(std::sqrt(11.0) + 5.0 * std::cos(t / 3.0));
      const double a = (std::pow(11.0, 0.25) * (c1 + c2 + c3) - 1.0) / 10.0;
      if (std::fabs(a) > 1.0) throw std::logic_error("first_min_x: arccos argument out of range");
      return std::acos(a);
    }
    default: throw std::logic_error("first_min_x: only m = 2..5 have closed forms");
  }
}

inline double second_min_x(int m) {
  switch (m) {
    case 4: {
      const double a = (-6.0 * std::cos(4.0 * std::atan(1.0 / std::sqrt(5.0)) / 3.0) - 1.0) / 8.0;
      if (std::fabs(a) > 1.0) throw std::logic_error("second_min_x: arccos argument out of range");
      return std::acos(a);
    }
    case 5: {
      const double t = std::atan(std::sqrt(55.0) / 11.0);
      const double c1 = std::sqrt(std::sqrt(11.0) - 5.0 * std::cos((t + std::numbers::pi) / 3.0));
      const double c2 = std::sqrt(std::sqrt(11.0) - 5.0 * std::cos((t - std::numbers::pi) / 3.0));
      const double c3 = std::sqrt(std::sqrt(11.0) + 5.0 * std::cos(t / 3.0));
      const double a = (std::pow(11.0, 0.25) * (c1 - c2 - c3) - 1.0) / 10.0;
      if (std::fabs(a) > 1.0) throw std::logic_error("second_min_x: arccos argument out of range");
      return std::acos(a);
    }
    default: throw std::logic_error("second_min_x: only m = 4, 5 have closed forms");
  }
}

}  // namespace detail

// Integer candidates for the spectral-radius index, available for
// m in {1, 2, 3, 4, 5} and m = n-1; throws for 6 <= m <= n-2.
inline std::vector<int> closed_form_jstar_candidates(const RingLattice& g) {
  const int n = g.n();
  std::vector<int> c;
  if (g.m == 1) {
    c = {n};
  } else if (g.m == n - 1) {
    c = {2};
  } else if (g.m >= 2 && g.m <= 5) {
    const double scale = g.N / (2.0 * std::numbers::pi);  // x -> fractional index
    auto push = [&](double x) {
      const double b = x * scale;
      c.push_back(static_cast<int>(std::floor(b)));
      c.push_back(static_cast<int>(std::ceil(b)));
    };
    push(detail::first_min_x(g.m));
    if (g.m >= 4) push(detail::second_min_x(g.m));
  } else {
    throw std::domain_error("no closed form for 6 <= m <= n-2");
  }
  std::sort(c.begin(), c.end());
  c.erase(std::unique(c.begin(), c.end()), c.end());
  return c;
}

// Proven lower bound on the spectral-radius index.
inline int jstar_lower_bound(const RingLattice& g) { return 1 + g.N / (2 * g.m + 1); }

// Conjectured upper bound: ceil(3N/(4m+2) - 1/2), evaluated in exact integer
// arithmetic as floor((6N + 4m + 1) / (8m + 4)).
inline int jstar_upper_conjectured(const RingLattice& g) {
  return (6 * g.N + 4 * g.m + 1) / (8 * g.m + 4);
}

// Half-width above which the conjectured upper bound collapses to 2.
inline double m_tilde(int N) { return (3.0 * N - 5.0) / 10.0; }

inline constexpr double kDefaultEstimatorAlpha = 0.1313;

// Point estimate of the spectral-radius index, clamped into
// [jstar_lower_bound, jstar_upper_conjectured].
inline int jstar_estimate(const RingLattice& g, double alpha = kDefaultEstimatorAlpha) {
  const int n = g.n();
  const int lo = jstar_lower_bound(g);
  const int hi = jstar_upper_conjectured(g);
  int est;
  if (g.m == 1) {
    est = n;
  } else if (g.m >= 2 && g.m <= 5) {
    const double b = detail::first_min_x(g.m) * g.N / (2.0 * std::numbers::pi);
    est = static_cast<int>(std::ceil(b - 0.5));
  } else if (g.m == n - 1) {
    est = 2;
  } else {
    est = static_cast<int>(std::floor(alpha * lo + (1.0 - alpha) * hi + 0.5));
  }
  return std::clamp(est, lo, hi);
}

// Threshold half-width m*(N): the cubic below has a smallest root x* in (0, 1)
// and m* = arcsin(sqrt(x*)) / theta. For every integer m >= m*, the first two
// nontrivial averaging-matrix eigenvalues satisfy r_1 + r_2 <= 0.
struct CubicThreshold {
  double a2 = 0, a1 = 0, a0 = 0;  // monic cubic coefficients
  double q = 0, r = 0;            // depressed-cubic auxiliaries
  double discriminant = 0;        // q^3 + r^2, provably >= 0 here
  double x_star = 0;              // smallest root, in (0, 1)
  double m_star = 0;
};

inline CubicThreshold crossover_threshold(int N) {
  if (N < 4) throw std::invalid_argument("crossover threshold needs N >= 4");
  const double theta = std::numbers::pi / N;
  const double c = std::cos(2.0 * theta);
  CubicThreshold t;
  t.a2 = -(c + 5.0) / 2.0;
  t.a1 = (4.0 * c * c + 7.0 * c + 13.0) / 8.0;
  t.a0 = -(3.0 * c + 1.0) * (3.0 * c + 1.0) / 16.0;
  t.q = t.a1 / 3.0 - t.a2 * t.a2 / 9.0;
  t.r = (t.a1 * t.a2 - 3.0 * t.a0) / 6.0 - t.a2 * t.a2 * t.a2 / 27.0;
  t.discriminant = t.q * t.q * t.q + t.r * t.r;
  if (N == 6) {
    // c = 1/2 makes the discriminant vanish (double root 5/4); the remaining
    // simple root is exactly 1/4 and rounding can push q^3 + r^2 fractionally
    // negative, so take the exact value instead of the surd expression.
    t.x_star = 0.25;
  } else {
    const double s = std::sqrt(std::max(t.discriminant, 0.0));
    t.x_star = -t.a2 / 3.0 + std::cbrt(t.r + s) + std::cbrt(t.r - s);
  }
  if (!(t.x_star > 0.0 && t.x_star < 1.0))
    throw std::runtime_error("crossover threshold: root escaped (0, 1); numerical failure");
  const double resid =
      ((t.x_star + t.a2) * t.x_star + t.a1) * t.x_star + t.a0;
  if (std::fabs(resid) > 1e-8)
    throw std::runtime_error("crossover threshold: cubic residual above 1e-8; numerical failure");
  t.m_star = std::asin(std::sqrt(t.x_star)) / theta;
  return t;
}

inline double m_star(int N) { return crossover_threshold(N).m_star; }

// Essential spectral radius of the averaging matrix: max_j |r_j| over j != 0,
// attained at j = 1 or at the spectral-radius index.
inline double essential_spectral_radius(const RingLattice& g) {
  const double lam1 = randic_eigenvalue(g, 1);
  const double lamj = randic_eigenvalue(g, spectral_radius_index(g));
  return std::max(lam1, -lamj);
}

struct GammaIndex {
  int gamma = 0;                // smallest index attaining the radius
  std::vector<int> ties;        // every attaining index in 1..n, ascending
};

// Indices where |r_j| reaches the essential spectral radius (ties within
// kIndexTieTol on the kernel scale |t_j - 1/2| = m |r_j|).
inline GammaIndex gamma_index(const RingLattice& g) {
  const int n = g.n();
  double best = 0.0;
  for (int j = 1; j <= n; ++j)
    best = std::max(best, std::fabs(kernel_sample(g, j) - 0.5));
  GammaIndex out;
  for (int j = 1; j <= n; ++j)
    if (std::fabs(kernel_sample(g, j) - 0.5) >= best - kIndexTieTol) out.ties.push_back(j);
  out.gamma = out.ties.front();
  return out;
}

// Conjectured value of the gamma index (main case table).
inline int gamma_conjectured(const RingLattice& g) {
  const int n = g.n();
  if (g.N >= 8 && g.m == 1) return n;
  if ((g.N >= 6 && g.N <= 7 && g.m == 1) || ((g.N == 9 || g.N == 10) && g.m == 2)) return 3;
  if (g.m >= std::min(static_cast<double>(n - 1), std::max(m_star(g.N), m_tilde(g.N)))) return 2;
  return 1;
}

// Side claim accompanying the conjecture: gamma = 1 is said to also attain the
// radius in these cases. Checked against observed ties in sweeps; not asserted.
inline bool gamma_conjecture_claims_one(const RingLattice& g) {
  const int n = g.n();
  if (g.N % 2 == 1 && g.N >= 5 && g.m == 1) return true;
  if (g.N == 10 && g.m == 2) return true;
  if (g.N % 2 == 0 && g.m == n - 1) return true;
  const double thr = std::max(m_star(g.N), m_tilde(g.N));
  return std::fabs(g.m - thr) <= 1e-9;
}

struct ExtremalReport {
  int N = 0, m = 0;
  double fiedler = 0;
  double spectral_radius = 0;
  int j_star = 0;
  int j_lower = 0;
  int j_upper_conjectured = 0;
  int j_star_estimate_conjectured = 0;
  GammaIndex gamma;
  double sigma = 0;
  double m_star = 0;
  double m_tilde = 0;
};

inline ExtremalReport extremal_report(const RingLattice& g) {
  ExtremalReport r;
  r.N = g.N;
  r.m = g.m;
  r.fiedler = fiedler_value(g);
  r.j_star = spectral_radius_index(g);
  r.spectral_radius = laplacian_eigenvalue(g, r.j_star);
  r.j_lower = jstar_lower_bound(g);
  r.j_upper_conjectured = jstar_upper_conjectured(g);
  r.j_star_estimate_conjectured = jstar_estimate(g);
  r.gamma = gamma_index(g);
  r.sigma = essential_spectral_radius(g);
  r.m_star = crossover_threshold(g.N).m_star;
  r.m_tilde = m_tilde(g.N);
  return r;
}

}  // namespace rrl
