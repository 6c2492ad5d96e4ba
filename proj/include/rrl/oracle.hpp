#pragma once

// Independent cross-checks for the closed-form results. Everything here is
// deliberately dumb: direct DFT summation, dense Jacobi iteration, BFS and
// backtracking on the explicit graph. None of it shares code with the
// kernel-based formulas it is used to verify.

#include <algorithm>
#include <bit>
#include <cmath>
#include <cstdint>
#include <numbers>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "rrl/graph.hpp"

namespace rrl::oracle {

// A circulant's eigenvalues are real only when the generator is palindromic;
// anything above this imaginary residue means the input (or the code) is wrong.
inline constexpr double kImagTol = 1e-9;

// Dense matrices beyond this size are refused rather than silently thrashing.
inline constexpr int kDenseLimit = 4096;

// Exact chromatic number is exponential; past this size we refuse.
inline constexpr int kChromaticLimit = 16;

struct DenseSymmetric {
  int N = 0;
  std::vector<double> a;  // row-major N*N

  double& at(int i, int j) { return a[static_cast<std::size_t>(i) * N + j]; }
  double at(int i, int j) const { return a[static_cast<std::size_t>(i) * N + j]; }
};

// Eigenvalues of a real circulant in index order, by direct Fourier summation
// over the nonzero generator entries. Throws if any eigenvalue comes out
// measurably complex.
inline std::vector<double> spectrum_dft(const Circulant& c) {
  const int N = c.N;
  std::vector<int> support;
  for (int k = 0; k < N; ++k)
    if (c.gen[static_cast<std::size_t>(k)] != 0.0) support.push_back(k);

  std::vector<double> cs(static_cast<std::size_t>(N)), sn(static_cast<std::size_t>(N));
  for (int i = 0; i < N; ++i) {
    const double ang = 2.0 * std::numbers::pi * i / N;
    cs[static_cast<std::size_t>(i)] = std::cos(ang);
    sn[static_cast<std::size_t>(i)] = std::sin(ang);
  }

  std::vector<double> out(static_cast<std::size_t>(N));
  for (int j = 0; j < N; ++j) {
    double re = 0.0, im = 0.0;
    for (int k : support) {
      const int idx = static_cast<int>((static_cast<std::int64_t>(j) * k) % N);
      const double w = c.gen[static_cast<std::size_t>(k)];
      re += w * cs[static_cast<std::size_t>(idx)];
      im -= w * sn[static_cast<std::size_t>(idx)];
    }
    if (std::fabs(im) >= kImagTol)
      throw std::runtime_error("circulant eigenvalue has imaginary part " +
                               std::to_string(im) + " at index " + std::to_string(j));
    out[static_cast<std::size_t>(j)] = re;
  }
  return out;
}

inline std::vector<double> spectrum_dft(const RingLattice& g, MatrixKind kind) {
  return spectrum_dft(matrix_view(g, kind));
}

// Fourier spectra for every band width 1 <= m < N/2 at once, as direct
// cosine/sine summation with the k and N-k rings folded in one band at a
// time. Nothing here touches the closed forms; it is the same sum as
// spectrum_dft, just sharing the partial sums that consecutive m have in
// common, which turns a full verification pass from cubic to quadratic.
// Result is indexed [m-1][j].
inline std::vector<std::vector<double>> spectra_dft_all_m(int N, MatrixKind kind) {
  if (N < 4) throw std::invalid_argument("need N >= 4");
  const int n_upper = N / 2;  // m runs to n_upper - 1

  std::vector<double> cs(static_cast<std::size_t>(N)), sn(static_cast<std::size_t>(N));
  for (int i = 0; i < N; ++i) {
    const double ang = 2.0 * std::numbers::pi * i / N;
    cs[static_cast<std::size_t>(i)] = std::cos(ang);
    sn[static_cast<std::size_t>(i)] = std::sin(ang);
  }

  std::vector<double> sum_cos(static_cast<std::size_t>(N), 0.0);
  std::vector<double> sum_sin(static_cast<std::size_t>(N), 0.0);
  std::vector<std::vector<double>> out;
  out.reserve(static_cast<std::size_t>(n_upper - 1));

  for (int m = 1; m < n_upper; ++m) {
    // fold in the offset-m ring: generator entries at k = m and k = N - m
    int idx_a = 0, idx_b = 0;  // (j*m) % N and (j*(N-m)) % N, stepped additively
    for (int j = 0; j < N; ++j) {
      sum_cos[static_cast<std::size_t>(j)] +=
          cs[static_cast<std::size_t>(idx_a)] + cs[static_cast<std::size_t>(idx_b)];
      sum_sin[static_cast<std::size_t>(j)] +=
          sn[static_cast<std::size_t>(idx_a)] + sn[static_cast<std::size_t>(idx_b)];
      idx_a += m;
      if (idx_a >= N) idx_a -= N;
      idx_b += N - m;
      if (idx_b >= N) idx_b -= N;
    }

    const double d = 2.0 * m;
    std::vector<double> ev(static_cast<std::size_t>(N));
    for (int j = 0; j < N; ++j) {
      const double s = sum_cos[static_cast<std::size_t>(j)];
      const double im = -sum_sin[static_cast<std::size_t>(j)];
      double value = 0.0, imag = 0.0;
      switch (kind) {
        case MatrixKind::adjacency: value = s; imag = im; break;
        case MatrixKind::laplacian: value = d - s; imag = -im; break;
        case MatrixKind::randic: value = s / d; imag = im / d; break;
        case MatrixKind::normalized_laplacian:
          value = 1.0 - s / d;
          imag = -im / d;
          break;
      }
      if (std::fabs(imag) >= kImagTol)
        throw std::runtime_error("circulant eigenvalue has imaginary part " +
                                 std::to_string(imag) + " at N=" + std::to_string(N) +
                                 " m=" + std::to_string(m) + " j=" + std::to_string(j));
      ev[static_cast<std::size_t>(j)] = value;
    }
    out.push_back(std::move(ev));
  }
  return out;
}

inline DenseSymmetric materialize(const RingLattice& g, MatrixKind kind) {
  if (g.N > kDenseLimit)
    throw std::length_error("dense materialization capped at N = " +
                            std::to_string(kDenseLimit));
  const Circulant c = matrix_view(g, kind);
  DenseSymmetric M;
  M.N = g.N;
  M.a.resize(static_cast<std::size_t>(g.N) * g.N);
  for (int i = 0; i < g.N; ++i)
    for (int j = 0; j < g.N; ++j) M.at(i, j) = c.at(i, j);
  return M;
}

// Cyclic Jacobi eigenvalue iteration, values only, ascending. Plain and
// quadratically convergent; the residual gate below makes silent
// non-convergence impossible.
inline std::vector<double> jacobi_eigenvalues(DenseSymmetric M) {
  const int N = M.N;
  if (N == 0) return {};
  if (N == 1) return {M.at(0, 0)};

  double scale = 0.0;
  for (double v : M.a) scale = std::max(scale, std::fabs(v));
  if (scale == 0.0) return std::vector<double>(static_cast<std::size_t>(N), 0.0);

  auto off_norm = [&M, N] {
    double s = 0.0;
    for (int i = 0; i < N; ++i)
      for (int j = i + 1; j < N; ++j) s += M.at(i, j) * M.at(i, j);
    return std::sqrt(2.0 * s);
  };

  // Rotations touch only the upper triangle; the lower one goes stale and is
  // never read again.
  double* a = M.a.data();
  const auto rotate = [a, N](int k1, int j1, int k2, int j2, double s,
                             double tau) {
    double& x = a[static_cast<std::size_t>(k1) * N + j1];
    double& y = a[static_cast<std::size_t>(k2) * N + j2];
    const double g = x, h = y;
    x = g - s * (h + g * tau);
    y = h + s * (g - h * tau);
  };

  const int kMaxSweeps = 40;
  for (int sweep = 0; sweep < kMaxSweeps; ++sweep) {
    if (off_norm() <= 1e-13 * scale * N) break;
    for (int p = 0; p < N - 1; ++p) {
      for (int q = p + 1; q < N; ++q) {
        const double apq = M.at(p, q);
        if (std::fabs(apq) <= 1e-300) continue;
        const double theta = (M.at(q, q) - M.at(p, p)) / (2.0 * apq);
        const double t = (theta >= 0.0 ? 1.0 : -1.0) /
                         (std::fabs(theta) + std::sqrt(1.0 + theta * theta));
        const double c = 1.0 / std::sqrt(1.0 + t * t);
        const double s = t * c;
        const double tau = s / (1.0 + c);

        M.at(p, p) -= t * apq;
        M.at(q, q) += t * apq;
        M.at(p, q) = 0.0;
        for (int k = 0; k < p; ++k) rotate(k, p, k, q, s, tau);
        for (int k = p + 1; k < q; ++k) rotate(p, k, k, q, s, tau);
        for (int k = q + 1; k < N; ++k) rotate(p, k, q, k, s, tau);
      }
    }
  }
  if (off_norm() > 1e-8 * scale * N)
    throw std::runtime_error("jacobi iteration failed to converge");

  std::vector<double> ev(static_cast<std::size_t>(N));
  for (int i = 0; i < N; ++i) ev[static_cast<std::size_t>(i)] = M.at(i, i);
  std::sort(ev.begin(), ev.end());
  return ev;
}

struct SpectrumComparison {
  double max_abs_dev = 0.0;
  int worst_index = -1;

  bool within(double tol) const { return max_abs_dev <= tol; }
};

inline SpectrumComparison max_index_deviation(const std::vector<double>& a,
                                              const std::vector<double>& b) {
  if (a.size() != b.size())
    throw std::invalid_argument("spectrum size mismatch");
  SpectrumComparison r;
  for (std::size_t i = 0; i < a.size(); ++i) {
    const double d = std::fabs(a[i] - b[i]);
    if (d > r.max_abs_dev) {
      r.max_abs_dev = d;
      r.worst_index = static_cast<int>(i);
    }
  }
  if (r.worst_index < 0 && !a.empty()) r.worst_index = 0;
  return r;
}

// Multiset distance: both inputs are sorted before the index-wise compare, so
// the result is ordering-independent.
inline SpectrumComparison max_sorted_deviation(std::vector<double> a,
                                               std::vector<double> b) {
  std::sort(a.begin(), a.end());
  std::sort(b.begin(), b.end());
  return max_index_deviation(a, b);
}

namespace detail {

inline std::vector<int> bfs_distances(const RingLattice& g, int root) {
  std::vector<int> dist(static_cast<std::size_t>(g.N), -1);
  std::vector<int> queue;
  queue.reserve(static_cast<std::size_t>(g.N));
  dist[static_cast<std::size_t>(root)] = 0;
  queue.push_back(root);
  for (std::size_t head = 0; head < queue.size(); ++head) {
    const int u = queue[head];
    for (int off = 1; off <= g.m; ++off) {
      for (int v : {(u + off) % g.N, (u - off + g.N) % g.N}) {
        if (dist[static_cast<std::size_t>(v)] < 0) {
          dist[static_cast<std::size_t>(v)] = dist[static_cast<std::size_t>(u)] + 1;
          queue.push_back(v);
        }
      }
    }
  }
  return dist;
}

}  // namespace detail

// Shortest cycle length. Per-root BFS gives an estimate that never
// undershoots; the minimum over roots is exact. 3 is a floor for any graph,
// so we can stop early the moment a triangle shows up.
inline int exact_girth(const RingLattice& g) {
  int best = g.N + 1;
  for (int root = 0; root < g.N && best > 3; ++root) {
    std::vector<int> dist(static_cast<std::size_t>(g.N), -1);
    std::vector<int> parent(static_cast<std::size_t>(g.N), -1);
    std::vector<int> queue;
    dist[static_cast<std::size_t>(root)] = 0;
    queue.push_back(root);
    for (std::size_t head = 0; head < queue.size(); ++head) {
      const int u = queue[head];
      if (2 * dist[static_cast<std::size_t>(u)] >= best) break;
      for (int off = 1; off <= g.m; ++off) {
        for (int v : {(u + off) % g.N, (u - off + g.N) % g.N}) {
          if (dist[static_cast<std::size_t>(v)] < 0) {
            dist[static_cast<std::size_t>(v)] = dist[static_cast<std::size_t>(u)] + 1;
            parent[static_cast<std::size_t>(v)] = u;
            queue.push_back(v);
          } else if (v != parent[static_cast<std::size_t>(u)] && v != u) {
            best = std::min(best, dist[static_cast<std::size_t>(u)] +
                                      dist[static_cast<std::size_t>(v)] + 1);
          }
        }
      }
    }
  }
  return best;
}

// Vertex transitivity makes every eccentricity equal, so one BFS from
// vertex 0 fixes both the diameter and the radius.
inline std::pair<int, int> exact_diameter_radius(const RingLattice& g) {
  const auto dist = detail::bfs_distances(g, 0);
  int ecc = 0;
  for (int d : dist) ecc = std::max(ecc, d);
  return {ecc, ecc};
}

namespace detail {

struct ColorSearch {
  int N = 0;
  int colors = 0;
  std::vector<std::uint32_t> adj;      // neighbor bitmask per vertex
  std::vector<int> color;              // 0 = uncolored, else 1..colors
  std::vector<std::uint32_t> seen;     // colors used by neighbors (bit c-1)

  bool extend(int assigned) {
    if (assigned == N) return true;
    // DSATUR order: most saturated vertex first, degree is constant here so
    // ties fall back to the smallest index.
    int pick = -1, best_sat = -1;
    for (int v = 0; v < N; ++v) {
      if (color[static_cast<std::size_t>(v)] != 0) continue;
      const int sat = std::popcount(seen[static_cast<std::size_t>(v)]);
      if (sat > best_sat) {
        best_sat = sat;
        pick = v;
      }
    }
    for (int c = 1; c <= colors; ++c) {
      if (seen[static_cast<std::size_t>(pick)] & (1u << (c - 1))) continue;
      color[static_cast<std::size_t>(pick)] = c;
      std::vector<int> touched;
      for (int u = 0; u < N; ++u) {
        if (!(adj[static_cast<std::size_t>(pick)] & (1u << u))) continue;
        if (!(seen[static_cast<std::size_t>(u)] & (1u << (c - 1)))) {
          seen[static_cast<std::size_t>(u)] |= 1u << (c - 1);
          touched.push_back(u);
        }
      }
      if (extend(assigned + 1)) return true;
      for (int u : touched) seen[static_cast<std::size_t>(u)] &= ~(1u << (c - 1));
      color[static_cast<std::size_t>(pick)] = 0;
    }
    return false;
  }
};

}  // namespace detail

// Exact chromatic number by DSATUR-ordered backtracking. Vertices 0..m are
// pairwise adjacent, so m+1 colors are a hard floor to start from.
inline int exact_chromatic(const RingLattice& g) {
  if (g.N > kChromaticLimit)
    throw std::length_error("exact chromatic number capped at N = " +
                            std::to_string(kChromaticLimit));
  detail::ColorSearch s;
  s.N = g.N;
  s.adj.assign(static_cast<std::size_t>(g.N), 0u);
  for (int v = 0; v < g.N; ++v)
    for (int off = 1; off <= g.m; ++off) {
      s.adj[static_cast<std::size_t>(v)] |= 1u << ((v + off) % g.N);
      s.adj[static_cast<std::size_t>(v)] |= 1u << ((v - off + g.N) % g.N);
    }
  for (int k = g.m + 1; ; ++k) {
    s.colors = k;
    s.color.assign(static_cast<std::size_t>(g.N), 0);
    s.seen.assign(static_cast<std::size_t>(g.N), 0u);
    if (s.extend(0)) return k;
  }
}

}  // namespace rrl::oracle
