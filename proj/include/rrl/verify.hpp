#pragma once

// End-to-end spectrum verification: the kernel-based closed forms against the
// direct DFT (index by index, every admissible pair) and against a dense
// Jacobi eigensolve (as multisets, on a budgeted subset, since dense solves
// grow cubically).

#include <algorithm>
#include <chrono>
#include <string>
#include <vector>

#include "rrl/oracle.hpp"
#include "rrl/spectral.hpp"
#include "rrl/textio.hpp"

namespace rrl {

// Dense route tolerance. Jacobi residuals land far below this; the closed
// forms have to meet it after sorting.
inline constexpr double kDenseTol = 1e-8;

// Dense spot-check sizes past the exhaustive range.
inline constexpr int kDenseFullLimit = 64;
inline constexpr int kDenseStride[] = {96, 128, 192, 256, 384, 512};

struct VerifyRouteReport {
  std::string route;
  long long spectra = 0;
  double max_abs_dev = 0.0;
  int worst_N = 0;
  int worst_m = 0;
  int worst_index = -1;
  MatrixKind worst_kind = MatrixKind::adjacency;
  bool pass = false;
};

struct VerifyReport {
  int n_max = 0;
  double tol = 0.0;
  VerifyRouteReport dft;
  VerifyRouteReport dense;
  double seconds = 0.0;

  bool pass() const { return dft.pass && dense.pass; }
};

namespace detail {

inline void fold_in(VerifyRouteReport& rep, const oracle::SpectrumComparison& cmp,
                    const RingLattice& g, MatrixKind kind) {
  ++rep.spectra;
  if (cmp.max_abs_dev > rep.max_abs_dev) {
    rep.max_abs_dev = cmp.max_abs_dev;
    rep.worst_N = g.N;
    rep.worst_m = g.m;
    rep.worst_index = cmp.worst_index;
    rep.worst_kind = kind;
  }
}

inline std::vector<int> dense_band_widths(const RingLattice& g) {
  std::vector<int> ms{1, 2, g.n() / 2, g.n() - 1};
  std::sort(ms.begin(), ms.end());
  ms.erase(std::unique(ms.begin(), ms.end()), ms.end());
  ms.erase(std::remove_if(ms.begin(), ms.end(),
                          [&g](int m) { return m < 1 || m >= g.n(); }),
           ms.end());
  return ms;
}

}  // namespace detail

inline VerifyReport verify_spectra(int n_max, double tol = 1e-9) {
  if (n_max < 4) throw std::invalid_argument("verification requires n_max >= 4");
  const auto t0 = std::chrono::steady_clock::now();

  VerifyReport rep;
  rep.n_max = n_max;
  rep.tol = tol;
  rep.dft.route = "dft";
  rep.dense.route = "dense";

  for (int N = 4; N <= n_max; ++N) {
    for (MatrixKind k : kAllKinds) {
      const auto all_m = oracle::spectra_dft_all_m(N, k);
      for (int m = 1; m < N / 2; ++m) {
        const RingLattice g(N, m);
        const auto cmp = oracle::max_index_deviation(
            all_m[static_cast<std::size_t>(m - 1)], full_spectrum(g, k).values);
        detail::fold_in(rep.dft, cmp, g, k);
      }
    }
  }

  auto dense_check = [&rep](const RingLattice& g, MatrixKind k) {
    const auto cmp = oracle::max_sorted_deviation(
        oracle::jacobi_eigenvalues(oracle::materialize(g, k)),
        full_spectrum(g, k).values);
    detail::fold_in(rep.dense, cmp, g, k);
  };

  for (int N = 4; N <= std::min(n_max, kDenseFullLimit); ++N)
    for (int m = 1; m < N / 2; ++m)
      for (MatrixKind k : kAllKinds) dense_check(RingLattice(N, m), k);
  for (int N : kDenseStride) {
    if (N > n_max || N > oracle::kDenseLimit) continue;
    const RingLattice probe(N, 1);
    for (int m : detail::dense_band_widths(probe))
      for (MatrixKind k : kAllKinds) dense_check(RingLattice(N, m), k);
  }

  rep.dft.pass = rep.dft.max_abs_dev <= tol;
  rep.dense.pass = rep.dense.max_abs_dev <= kDenseTol;
  rep.seconds =
      std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
  return rep;
}

inline std::string verify_text(const VerifyReport& rep) {
  auto line = [](const VerifyRouteReport& r, double tol) {
    std::string s = "  " + r.route + ": " + std::to_string(r.spectra) +
                    " spectra, max |dev| = " + textio::fmt15(r.max_abs_dev) +
                    " (tol " + textio::fmt15(tol) + ")";
    if (r.spectra > 0 && r.max_abs_dev > 0.0)
      s += " worst at N=" + std::to_string(r.worst_N) + " m=" +
           std::to_string(r.worst_m) + " j=" + std::to_string(r.worst_index) +
           " kind=" + std::string(kind_name(r.worst_kind));
    s += r.pass ? "  [ok]\n" : "  [FAIL]\n";
    return s;
  };
  std::string out = "spectra verified up to N = " + std::to_string(rep.n_max) + "\n";
  out += line(rep.dft, rep.tol);
  out += line(rep.dense, kDenseTol);
  return out;
}

}  // namespace rrl
