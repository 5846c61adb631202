#ifndef APOLLONIAN_ORACLE_HPP
#define APOLLONIAN_ORACLE_HPP

#include <span>
#include <vector>

#include <gmpxx.h>

#include "apollonian/graph.hpp"

namespace apollonian {

/// Dense square matrix of exact integers, row major.
using IntMatrix = std::vector<std::vector<mpz_class>>;

/// Graph Laplacian (degree diagonal minus adjacency) with the rows and
/// columns of `deleted` removed. Degrees count all edges of g, including
/// those incident to deleted vertices.
struct LaplacianMinor {
  int order = 0;
  IntMatrix entries;
};

LaplacianMinor laplacian_minor(const Graph& g, std::span<const int> deleted);

/// Exact determinant by fraction-free (Bareiss) elimination. Every
/// division is checked to be exact and a remainder throws
/// consistency_error. A column without any nonzero pivot means a singular
/// matrix: the determinant is zero and is reported as such.
mpz_class bareiss_determinant(IntMatrix m);

/// tree_count_kirchhoff refuses graphs above this many vertices.
inline constexpr int kDeterminantSizeGuard = 200;

/// Number of spanning trees via the matrix-tree theorem: determinant of
/// the Laplacian with hub 0's row and column deleted. Returns 0 for a
/// disconnected graph; a zero determinant on a connected graph throws
/// consistency_error.
mpz_class tree_count_kirchhoff(const Graph& g, int size_guard = kDeterminantSizeGuard);

/// c_n from first principles: spanning trees of A(n) with the three hub
/// edges deleted (0 for n = 0, where nothing remains connected).
mpz_class c_count_oracle(int n, int size_guard = kDeterminantSizeGuard);

/// All-minors matrix-tree count: spanning forests with one tree per root,
/// as the determinant of the Laplacian minus all root rows/columns.
/// `roots` must be a non-empty subset of the hubs.
mpz_class rooted_forest_count(const Graph& g, std::span<const int> roots,
                              int size_guard = kDeterminantSizeGuard);

/// Tags assigned by the exhaustive classifier. A: spanning 3-forest with
/// the hubs pairwise separated. B/Bp/Bpp: hub-edge-free spanning 2-forest
/// with hub 0 / 1 / 2 alone in its tree. C: hub-edge-free spanning tree.
/// D: spanning 2-forest containing hub edge (h0,h1) with the third hub in
/// the other tree. E: spanning tree whose only hub edge is (h0,h1), third
/// hub attached on h0's side. F: spanning tree containing exactly hub
/// edges (h0,h1) and (h0,h2). Other: any other spanning forest.
enum class SubgraphClass { A, B, Bp, Bpp, C, D, E, F, Other };

/// Class of one spanning subgraph (edge subset of g). Subsets that are
/// not spanning forests with V-1, V-2 or V-3 edges are Other.
SubgraphClass classify_subset(const Graph& g, const std::vector<Edge>& subset);

/// Exact class counts from exhaustive enumeration.
struct ClassifiedCensus {
  mpz_class a, b, bp, bpp, c, d, e, f;
  mpz_class s;  // all spanning trees
};

/// classify_exhaustive refuses graphs above this many edges.
inline constexpr int kClassifyEdgeGuard = 20;

/// Enumerates every edge subset of size V-1, V-2 and V-3 and classifies
/// it. The hub-edge bijections (d = a, e = b, f = a) and the symmetry
/// b = bp = bpp are asserted on the result; a violation throws
/// consistency_error.
ClassifiedCensus classify_exhaustive(const Graph& g);

}  // namespace apollonian

#endif  // APOLLONIAN_ORACLE_HPP
