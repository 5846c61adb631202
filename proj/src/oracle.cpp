#include "apollonian/oracle.hpp"

#include <algorithm>
#include <numeric>
#include <string>

#include "apollonian/errors.hpp"

namespace apollonian {

LaplacianMinor laplacian_minor(const Graph& g, std::span<const int> deleted) {
  std::vector<char> drop(g.vertex_count(), 0);
  for (int v : deleted) {
    if (v < 0 || v >= g.vertex_count()) throw usage_error("deleted vertex out of range");
    drop[v] = 1;
  }
  std::vector<int> keep;
  std::vector<int> index(g.vertex_count(), -1);
  for (int v = 0; v < g.vertex_count(); ++v) {
    if (!drop[v]) {
      index[v] = static_cast<int>(keep.size());
      keep.push_back(v);
    }
  }
  const auto deg = g.degrees();
  LaplacianMinor minor;
  minor.order = static_cast<int>(keep.size());
  minor.entries.assign(minor.order, std::vector<mpz_class>(minor.order, 0));
  for (int i = 0; i < minor.order; ++i) minor.entries[i][i] = deg[keep[i]];
  for (const auto& [u, v] : g.edges) {
    if (index[u] >= 0 && index[v] >= 0) {
      minor.entries[index[u]][index[v]] -= 1;
      minor.entries[index[v]][index[u]] -= 1;
    }
  }
  return minor;
}

mpz_class bareiss_determinant(IntMatrix m) {
  const int n = static_cast<int>(m.size());
  for (const auto& row : m) {
    if (static_cast<int>(row.size()) != n) throw usage_error("determinant needs a square matrix");
  }
  if (n == 0) return 1;

  mpz_class prev_pivot = 1;
  int sign = 1;
  for (int k = 0; k + 1 < n; ++k) {
    if (m[k][k] == 0) {
      int swap_row = -1;
      for (int i = k + 1; i < n; ++i) {
        if (m[i][k] != 0) {
          swap_row = i;
          break;
        }
      }
      if (swap_row < 0) return 0;  // no nonzero pivot: singular
      std::swap(m[k], m[swap_row]);
      sign = -sign;
    }
    for (int i = k + 1; i < n; ++i) {
      for (int j = k + 1; j < n; ++j) {
        mpz_class num = m[k][k] * m[i][j] - m[i][k] * m[k][j];
        if (!mpz_divisible_p(num.get_mpz_t(), prev_pivot.get_mpz_t())) {
          throw consistency_error("fraction-free elimination hit an inexact division at pivot " +
                                  std::to_string(k));
        }
        mpz_divexact(m[i][j].get_mpz_t(), num.get_mpz_t(), prev_pivot.get_mpz_t());
      }
      m[i][k] = 0;
    }
    prev_pivot = m[k][k];
  }
  return sign < 0 ? mpz_class(-m[n - 1][n - 1]) : m[n - 1][n - 1];
}

namespace {

void check_size_guard(const Graph& g, int size_guard) {
  if (g.vertex_count() > size_guard) {
    throw size_guard_error("determinant oracle refused: " + std::to_string(g.vertex_count()) +
                           " vertices exceed the guard of " + std::to_string(size_guard));
  }
}

}  // namespace

mpz_class tree_count_kirchhoff(const Graph& g, int size_guard) {
  check_size_guard(g, size_guard);
  if (!is_connected(g)) return 0;
  const int root = g.hubs[0];
  mpz_class det = bareiss_determinant(laplacian_minor(g, std::span(&root, 1)).entries);
  if (det == 0) {
    throw consistency_error("zero spanning-tree determinant on a connected graph");
  }
  return det;
}

mpz_class c_count_oracle(int n, int size_guard) {
  if (n == 0) return 0;  // the triangle minus its hub edges is edgeless
  return tree_count_kirchhoff(strip_hub_edges(build_iterative(n)), size_guard);
}

mpz_class rooted_forest_count(const Graph& g, std::span<const int> roots, int size_guard) {
  check_size_guard(g, size_guard);
  if (roots.empty()) throw usage_error("rooted forest count needs at least one root");
  for (int r : roots) {
    if (std::find(g.hubs.begin(), g.hubs.end(), r) == g.hubs.end()) {
      throw usage_error("root " + std::to_string(r) + " is not a hub vertex");
    }
  }
  return bareiss_determinant(laplacian_minor(g, roots).entries);
}

namespace {

// Union-find over vertex ids; detects the cycle that disqualifies a subset.
class Forest {
 public:
  explicit Forest(int n) : parent_(n) { std::iota(parent_.begin(), parent_.end(), 0); }

  int find(int x) {
    while (parent_[x] != x) {
      parent_[x] = parent_[parent_[x]];
      x = parent_[x];
    }
    return x;
  }

  bool join(int a, int b) {
    const int ra = find(a);
    const int rb = find(b);
    if (ra == rb) return false;
    parent_[ra] = rb;
    return true;
  }

 private:
  std::vector<int> parent_;
};

struct SubsetShape {
  bool acyclic = false;
  int components = 0;
  std::array<int, 3> hub_root{};  // representatives of the three hubs
};

SubsetShape shape_of(const Graph& g, const std::vector<Edge>& subset) {
  Forest forest(g.vertex_count());
  int joins = 0;
  for (const auto& [u, v] : subset) {
    if (!forest.join(u, v)) return {};  // cycle
    ++joins;
  }
  SubsetShape shape;
  shape.acyclic = true;
  shape.components = g.vertex_count() - joins;
  for (int i = 0; i < 3; ++i) shape.hub_root[i] = forest.find(g.hubs[i]);
  return shape;
}

// Hub edges present in the subset, as indices into g.hub_edges.
std::vector<int> hub_edges_in(const Graph& g, const std::vector<Edge>& subset) {
  std::vector<int> present;
  for (int i = 0; i < 3; ++i) {
    if (std::find(subset.begin(), subset.end(), g.hub_edges[i]) != subset.end()) {
      present.push_back(i);
    }
  }
  return present;
}

// For a spanning tree whose only hub edge is hub_edges[0] = (h0,h1):
// true when the third hub hangs on h0's side once that edge is removed.
bool third_hub_on_h0_side(const Graph& g, const std::vector<Edge>& subset) {
  Forest forest(g.vertex_count());
  for (const auto& e : subset) {
    if (e != g.hub_edges[0]) forest.join(e.first, e.second);
  }
  return forest.find(g.hubs[2]) == forest.find(g.hubs[0]);
}

}  // namespace

SubgraphClass classify_subset(const Graph& g, const std::vector<Edge>& subset) {
  const int v = g.vertex_count();
  const int k = static_cast<int>(subset.size());
  const SubsetShape shape = shape_of(g, subset);
  if (!shape.acyclic) return SubgraphClass::Other;
  const auto present = hub_edges_in(g, subset);
  const auto& [r0, r1, r2] = shape.hub_root;

  if (k == v - 1 && shape.components == 1) {
    if (present.empty()) return SubgraphClass::C;
    if (present.size() == 1 && present[0] == 0 && third_hub_on_h0_side(g, subset)) {
      return SubgraphClass::E;
    }
    if (present.size() == 2 && present[0] == 0 && present[1] == 1) return SubgraphClass::F;
    return SubgraphClass::Other;
  }
  if (k == v - 2 && shape.components == 2) {
    if (present.empty()) {
      if (r0 != r1 && r1 == r2) return SubgraphClass::B;
      if (r1 != r0 && r0 == r2) return SubgraphClass::Bp;
      if (r2 != r0 && r0 == r1) return SubgraphClass::Bpp;
      return SubgraphClass::Other;
    }
    if (present.size() == 1 && present[0] == 0 && r2 != r0) return SubgraphClass::D;
    return SubgraphClass::Other;
  }
  if (k == v - 3 && shape.components == 3) {
    if (r0 != r1 && r1 != r2 && r0 != r2) return SubgraphClass::A;
    return SubgraphClass::Other;
  }
  return SubgraphClass::Other;
}

namespace {

// Calls fn with every k-subset of the edge list.
template <typename Fn>
void for_each_subset(const std::vector<Edge>& edges, int k, Fn&& fn) {
  const int n = static_cast<int>(edges.size());
  if (k < 0 || k > n) return;
  std::vector<int> pick(k);
  std::iota(pick.begin(), pick.end(), 0);
  std::vector<Edge> subset(k);
  while (true) {
    for (int i = 0; i < k; ++i) subset[i] = edges[pick[i]];
    fn(subset);
    int i = k - 1;
    while (i >= 0 && pick[i] == n - k + i) --i;
    if (i < 0) return;
    ++pick[i];
    for (int j = i + 1; j < k; ++j) pick[j] = pick[j - 1] + 1;
  }
}

void bump(ClassifiedCensus& census, SubgraphClass tag) {
  switch (tag) {
    case SubgraphClass::A: ++census.a; break;
    case SubgraphClass::B: ++census.b; break;
    case SubgraphClass::Bp: ++census.bp; break;
    case SubgraphClass::Bpp: ++census.bpp; break;
    case SubgraphClass::C: ++census.c; break;
    case SubgraphClass::D: ++census.d; break;
    case SubgraphClass::E: ++census.e; break;
    case SubgraphClass::F: ++census.f; break;
    case SubgraphClass::Other: break;
  }
}

}  // namespace

ClassifiedCensus classify_exhaustive(const Graph& g) {
  if (g.edge_count() > kClassifyEdgeGuard) {
    throw size_guard_error("exhaustive classification refused: " + std::to_string(g.edge_count()) +
                           " edges exceed the guard of " + std::to_string(kClassifyEdgeGuard));
  }
  const int v = g.vertex_count();
  ClassifiedCensus census;
  for (int k : {v - 1, v - 2, v - 3}) {
    for_each_subset(g.edges, k, [&](const std::vector<Edge>& subset) {
      bump(census, classify_subset(g, subset));
      if (k == v - 1) {
        const SubsetShape shape = shape_of(g, subset);
        if (shape.acyclic && shape.components == 1) ++census.s;
      }
    });
  }
  if (census.d != census.a || census.e != census.b || census.f != census.a) {
    throw consistency_error("hub-edge bijection counts broken by exhaustive enumeration");
  }
  if (census.b != census.bp || census.b != census.bpp) {
    throw consistency_error("the three one-hub-apart classes are not symmetric");
  }
  return census;
}

}  // namespace apollonian
