#ifndef APOLLONIAN_GRAPH_HPP
#define APOLLONIAN_GRAPH_HPP

#include <array>
#include <cstdint>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include <gmpxx.h>

namespace apollonian {

/// Undirected edge, always stored as (min, max).
using Edge = std::pair<int, int>;

inline Edge make_edge(int u, int v) { return u < v ? Edge{u, v} : Edge{v, u}; }

/// Explicit representation of the Apollonian network A(n).
///
/// Vertices are dense ids 0..V-1. The three hubs are the outmost vertices
/// of the construction; hub edges are the three edges joining them.
/// `birth[v]` is the construction step at which v appeared (hubs: 0).
/// Immutable after construction; safe to share across threads.
struct Graph {
  int step = 0;
  std::vector<int> birth;
  std::vector<Edge> edges;  // sorted, unique
  std::array<int, 3> hubs{0, 1, 2};
  std::array<Edge, 3> hub_edges{Edge{0, 1}, Edge{0, 2}, Edge{1, 2}};

  int vertex_count() const { return static_cast<int>(birth.size()); }
  int edge_count() const { return static_cast<int>(edges.size()); }
  bool has_edge(int u, int v) const;

  std::vector<int> degrees() const;
  /// Sorted adjacency lists.
  std::vector<std::vector<int>> adjacency() const;
};

/// Explicit construction is refused beyond this step (V_17 > 64 million);
/// the formula-only operations cover anything larger.
inline constexpr int kMaxExplicitStep = 16;

/// A(n) by iterated triangle subdivision: each triangle created at step
/// t-1 receives one new vertex joined to its three corners. Hubs are the
/// vertices of A(0); new vertices are numbered in lexicographic order of
/// the parent triangles, which makes every run byte-stable.
Graph build_iterative(int n);

/// A(n) by gluing three copies of A(n-1) along three pairs of hub edges,
/// one shared edge per pair of copies. Same vertex/edge counts, degree
/// multiset and spanning-tree count as build_iterative(n); the vertex
/// numbering differs.
Graph build_merged(int n);

/// (V_n, E_n) = ((3^n + 5)/2, 3 (3^n + 1)/2), exact for any n >= 0.
std::pair<mpz_class, mpz_class> order_size(int n);

/// Checks every structural invariant (counts vs. formulas, E = 3V - 6,
/// hub adjacency, simple graph, birth-step census). Throws
/// consistency_error with the first violation.
void validate(const Graph& g);

enum class ExportFormat { edge_list, dot, json };

/// "edge-list", "dot" or "json"; anything else is a usage_error.
ExportFormat parse_export_format(std::string_view name);

/// Deterministic serialization. edge-list: one "u v" line per edge in
/// sorted order. dot: undirected graph with hubs drawn as double circles.
/// json: vertices with birth steps, edges, hubs and hub edges.
std::string export_graph(const Graph& g, ExportFormat format);

/// Copy of g with the three hub edges removed (the result no longer
/// satisfies the E = 3V - 6 invariant; meant for the oracle module).
Graph strip_hub_edges(Graph g);

std::int64_t triangle_count(const Graph& g);

bool is_connected(const Graph& g);

}  // namespace apollonian

#endif  // APOLLONIAN_GRAPH_HPP
