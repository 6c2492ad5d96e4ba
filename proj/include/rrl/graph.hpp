// graph.hpp — regular ring lattices: construction, circulant generators, basic properties.
#pragma once

#include <numbers>
#include <stdexcept>
#include <string>
#include <vector>

namespace rrl {

// Ring lattice on N vertices where each vertex is joined to its m nearest
// neighbours on each side. Admissible range: N >= 4, 1 <= m < floor(N/2),
// so the graph is connected, 2m-regular and never complete.
struct RingLattice {
  int N;
  int m;

  RingLattice(int N_, int m_) : N(N_), m(m_) {
    if (N < 4) throw std::invalid_argument("ring lattice: N must be at least 4");
    if (m < 1 || m >= N / 2)
      throw std::invalid_argument("ring lattice: m must satisfy 1 <= m < floor(N/2)");
  }

  int n() const { return N / 2; }           // half the order, rounded down
  int degree() const { return 2 * m; }
  double theta() const { return std::numbers::pi / N; }
};

// 0/1 first row of the adjacency matrix: ones at offsets 1..m and N-m..N-1.
inline std::vector<int> generator(const RingLattice& g) {
  std::vector<int> w(g.N, 0);
  for (int k = 1; k <= g.m; ++k) {
    w[k] = 1;
    w[g.N - k] = 1;
  }
  return w;
}

// Rotate v right by j positions (row j of the circulant generated by v).
// j may be any integer; j % N == 0 is the identity.
template <typename T>
std::vector<T> cyclic_permutation(const std::vector<T>& v, long long j) {
  const long long N = static_cast<long long>(v.size());
  if (N == 0) return {};
  long long s = j % N;
  if (s < 0) s += N;
  std::vector<T> out(v.size());
  for (long long i = 0; i < N; ++i) out[i] = v[((i - s) % N + N) % N];
  return out;
}

enum class MatrixKind { adjacency, laplacian, randic, normalized_laplacian };

inline const char* kind_name(MatrixKind k) {
  switch (k) {
    case MatrixKind::adjacency: return "adjacency";
    case MatrixKind::laplacian: return "laplacian";
    case MatrixKind::randic: return "randic";
    case MatrixKind::normalized_laplacian: return "normalized_laplacian";
  }
  throw std::logic_error("unknown matrix kind");
}

inline MatrixKind parse_kind(const std::string& s) {
  if (s == "adjacency") return MatrixKind::adjacency;
  if (s == "laplacian") return MatrixKind::laplacian;
  if (s == "randic") return MatrixKind::randic;
  if (s == "normalized_laplacian") return MatrixKind::normalized_laplacian;
  throw std::invalid_argument("unknown matrix kind: " + s);
}

inline constexpr MatrixKind kAllKinds[] = {MatrixKind::adjacency, MatrixKind::laplacian,
                                           MatrixKind::randic, MatrixKind::normalized_laplacian};

// Circulant matrix held as its first row only; entries come from rotation.
struct Circulant {
  int N = 0;
  std::vector<double> gen;

  double at(int i, int j) const {
    int d = j - i;
    if (d < 0) d += N;
    return gen[d];
  }
  std::vector<double> row(int i) const {
    std::vector<double> r(N);
    for (int j = 0; j < N; ++j) r[j] = at(i, j);
    return r;
  }
};

inline Circulant matrix_view(const RingLattice& g, MatrixKind kind) {
  Circulant c;
  c.N = g.N;
  c.gen.assign(g.N, 0.0);
  const double d = g.degree();
  for (int k = 1; k <= g.m; ++k) {
    double v = 0.0;
    switch (kind) {
      case MatrixKind::adjacency: v = 1.0; break;
      case MatrixKind::laplacian: v = -1.0; break;
      case MatrixKind::randic: v = 1.0 / d; break;
      case MatrixKind::normalized_laplacian: v = -1.0 / d; break;
    }
    c.gen[k] = v;
    c.gen[g.N - k] = v;
  }
  if (kind == MatrixKind::laplacian) c.gen[0] = d;
  if (kind == MatrixKind::normalized_laplacian) c.gen[0] = 1.0;
  return c;
}

struct PropertyReport {
  int N = 0;
  int m = 0;
  int degree = 0;
  long long edges = 0;
  long long volume = 0;           // sum of degrees
  int chromatic_formula = 0;      // m + 1 + (N mod (m+1)); an upper-bound construction
  int girth_formula = 0;          // ceil(N/m)
  int diameter = 0;               // ceil(n/m)
  int radius = 0;
  int circumference = 0;          // N (Hamiltonian)
  bool bipartite = false;         // exactly the even cycles
  bool eulerian = true;           // even regular degree
  bool hamiltonian = true;
  bool periphery_is_all_vertices = true;   // vertex-transitive
  bool center_is_all_vertices = true;
};

inline PropertyReport basic_properties(const RingLattice& g) {
  PropertyReport p;
  p.N = g.N;
  p.m = g.m;
  p.degree = g.degree();
  p.edges = static_cast<long long>(g.m) * g.N;
  p.volume = 2 * p.edges;
  p.chromatic_formula = g.m + 1 + g.N % (g.m + 1);
  p.girth_formula = (g.N + g.m - 1) / g.m;
  p.diameter = (g.n() + g.m - 1) / g.m;
  p.radius = p.diameter;
  p.circumference = g.N;
  p.bipartite = (g.m == 1 && g.N % 2 == 0);
  return p;
}

}  // namespace rrl
