#include <catch2/catch_amalgamated.hpp>

#include <map>
#include <utility>

#include "rrl/oracle.hpp"
#include "rrl/spectral.hpp"

using namespace rrl;
using Catch::Approx;

TEST_CASE("dft route reproduces the closed-form spectra index by index") {
  for (int N = 4; N <= 128; N += (N < 24 ? 1 : 7)) {
    for (int m = 1; m < N / 2; ++m) {
      const RingLattice g(N, m);
      for (MatrixKind k : kAllKinds) {
        const auto dft = oracle::spectrum_dft(g, k);
        const auto closed = full_spectrum(g, k).values;
        const auto cmp = oracle::max_index_deviation(dft, closed);
        INFO("N=" << N << " m=" << m << " kind=" << kind_name(k)
                  << " worst j=" << cmp.worst_index);
        CHECK(cmp.within(1e-9));
      }
    }
  }
}

TEST_CASE("batched dft agrees with the per-instance dft") {
  for (int N : {4, 5, 6, 9, 16, 33, 64}) {
    for (MatrixKind k : kAllKinds) {
      const auto batched = oracle::spectra_dft_all_m(N, k);
      REQUIRE(static_cast<int>(batched.size()) == N / 2 - 1);
      for (int m = 1; m < N / 2; ++m) {
        const auto single = oracle::spectrum_dft(RingLattice(N, m), k);
        const auto cmp = oracle::max_index_deviation(
            batched[static_cast<std::size_t>(m - 1)], single);
        INFO("N=" << N << " m=" << m << " kind=" << kind_name(k));
        CHECK(cmp.within(1e-12));
      }
    }
  }
  CHECK_THROWS_AS(oracle::spectra_dft_all_m(3, MatrixKind::adjacency),
                  std::invalid_argument);
}

TEST_CASE("dft route rejects circulants with complex spectrum") {
  Circulant c;
  c.N = 4;
  c.gen = {0.0, 1.0, 0.0, 0.0};  // one-sided shift, eigenvalues are i^j
  CHECK_THROWS_AS(oracle::spectrum_dft(c), std::runtime_error);
}

TEST_CASE("materialized matrices are symmetric with the right rows") {
  const RingLattice g(9, 2);
  const auto M = oracle::materialize(g, MatrixKind::laplacian);
  for (int i = 0; i < g.N; ++i) {
    CHECK(M.at(i, i) == 4.0);
    double row = 0.0;
    for (int j = 0; j < g.N; ++j) {
      row += M.at(i, j);
      CHECK(M.at(i, j) == M.at(j, i));
    }
    CHECK(row == Approx(0.0).margin(1e-12));
  }
  CHECK_THROWS_AS(oracle::materialize(RingLattice(4097, 1), MatrixKind::adjacency),
                  std::length_error);
}

TEST_CASE("jacobi solves tiny matrices it can be checked against by hand") {
  oracle::DenseSymmetric t;
  t.N = 2;
  t.a = {2.0, 1.0, 1.0, 2.0};
  const auto ev = oracle::jacobi_eigenvalues(t);
  REQUIRE(ev.size() == 2);
  CHECK(ev[0] == Approx(1.0).margin(1e-12));
  CHECK(ev[1] == Approx(3.0).margin(1e-12));

  const auto cyc = oracle::jacobi_eigenvalues(
      oracle::materialize(RingLattice(4, 1), MatrixKind::laplacian));
  REQUIRE(cyc.size() == 4);
  CHECK(cyc[0] == Approx(0.0).margin(1e-10));
  CHECK(cyc[1] == Approx(2.0).margin(1e-10));
  CHECK(cyc[2] == Approx(2.0).margin(1e-10));
  CHECK(cyc[3] == Approx(4.0).margin(1e-10));
}

TEST_CASE("jacobi route matches the closed-form spectra as multisets") {
  for (int N = 4; N <= 32; ++N) {
    for (int m = 1; m < N / 2; ++m) {
      const RingLattice g(N, m);
      for (MatrixKind k : kAllKinds) {
        const auto dense = oracle::jacobi_eigenvalues(oracle::materialize(g, k));
        const auto closed = full_spectrum(g, k).values;
        const auto cmp = oracle::max_sorted_deviation(dense, closed);
        INFO("N=" << N << " m=" << m << " kind=" << kind_name(k));
        CHECK(cmp.within(1e-8));
      }
    }
  }
  for (int m : {1, 5, 11}) {
    const RingLattice g(48, m);
    const auto dense =
        oracle::jacobi_eigenvalues(oracle::materialize(g, MatrixKind::randic));
    const auto closed = full_spectrum(g, MatrixKind::randic).values;
    CHECK(oracle::max_sorted_deviation(dense, closed).within(1e-8));
  }
}

TEST_CASE("spectrum comparisons report the worst index and reject size mismatch") {
  const std::vector<double> a{0.0, 1.0, 2.0};
  const std::vector<double> b{0.0, 1.5, 2.0};
  const auto cmp = oracle::max_index_deviation(a, b);
  CHECK(cmp.max_abs_dev == Approx(0.5));
  CHECK(cmp.worst_index == 1);
  CHECK_FALSE(cmp.within(1e-3));
  CHECK(oracle::max_sorted_deviation({2.0, 0.0}, {0.0, 2.0}).within(1e-15));
  CHECK_THROWS_AS(oracle::max_index_deviation(a, {1.0}), std::invalid_argument);
}

TEST_CASE("girth: cycles keep their length, any wider band collapses to triangles") {
  CHECK(oracle::exact_girth(RingLattice(9, 1)) == 9);
  CHECK(oracle::exact_girth(RingLattice(12, 1)) == 12);
  CHECK(oracle::exact_girth(RingLattice(9, 2)) == 3);
  CHECK(oracle::exact_girth(RingLattice(10, 3)) == 3);
  CHECK(oracle::exact_girth(RingLattice(101, 7)) == 3);
  // the convenience formula disagrees here and the oracle is the referee
  CHECK(basic_properties(RingLattice(9, 2)).girth_formula == 5);
}

TEST_CASE("diameter and radius agree with the ceiling formula") {
  for (int N = 4; N <= 64; ++N) {
    for (int m = 1; m < N / 2; ++m) {
      const RingLattice g(N, m);
      const auto [diam, rad] = oracle::exact_diameter_radius(g);
      const auto props = basic_properties(g);
      CHECK(diam == props.diameter);
      CHECK(rad == props.radius);
      CHECK(diam == (g.n() + g.m - 1) / g.m);
    }
  }
}

TEST_CASE("chromatic number: exhaustive small-N comparison against the formula") {
  // the formula m+1+(N mod (m+1)) overshoots for exactly these instances
  const std::map<std::pair<int, int>, int> overshoot{
      {{8, 2}, 4}, {{10, 3}, 5}, {{11, 2}, 4},
      {{11, 3}, 6}, {{12, 4}, 6}, {{13, 4}, 7}};
  for (int N = 4; N <= 13; ++N) {
    for (int m = 1; m < N / 2; ++m) {
      const RingLattice g(N, m);
      const int exact = oracle::exact_chromatic(g);
      const int formula = basic_properties(g).chromatic_formula;
      INFO("N=" << N << " m=" << m);
      const auto it = overshoot.find({N, m});
      if (it != overshoot.end()) {
        CHECK(exact == it->second);
        CHECK(formula == exact + 1);
      } else {
        CHECK(exact == formula);
      }
      CHECK(exact >= m + 1);
    }
  }
  CHECK(oracle::exact_chromatic(RingLattice(5, 1)) == 3);
  CHECK(oracle::exact_chromatic(RingLattice(6, 1)) == 2);
  CHECK_THROWS_AS(oracle::exact_chromatic(RingLattice(17, 1)), std::length_error);
}
