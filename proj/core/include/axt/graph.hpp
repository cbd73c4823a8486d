#pragma once

#include <array>
#include <compare>
#include <cstddef>
#include <span>
#include <utility>
#include <vector>

namespace axt {

using Edge = std::pair<int, int>;

/// Simple undirected graph on dense vertex ids 0..n-1.
///
/// Immutable after construction: every "mutation" in this library returns a
/// fresh Graph (plus a relabeling map where vertices move). Adjacency lists
/// are kept sorted, so neighbor scans are deterministic and membership tests
/// are logarithmic. Construction validates symmetry, irreflexivity and id
/// range; duplicate input edges are collapsed.
class Graph {
public:
  Graph() = default;

  /// Builds a graph from an edge list. Throws input_error on an out-of-range
  /// endpoint or a self-loop, naming the offending pair.
  Graph(int n, std::span<const Edge> edges);
  Graph(int n, std::initializer_list<Edge> edges);

  int order() const noexcept { return n_; }
  std::size_t edge_count() const noexcept { return m_; }

  bool has_edge(int u, int v) const;
  std::span<const int> neighbors(int v) const;
  int degree(int v) const;
  bool has_vertex(int v) const noexcept { return v >= 0 && v < n_; }

  /// All edges as (u, v) with u < v, lexicographically sorted.
  std::vector<Edge> edge_list() const;

  bool is_connected() const;

  bool operator==(const Graph& other) const = default;

private:
  int n_ = 0;
  std::size_t m_ = 0;
  std::vector<std::vector<int>> adj_;
};

/// Three pairwise adjacent vertices, stored in increasing order.
struct Triangle {
  std::array<int, 3> v{};

  /// Canonicalizes (sorts) and rejects repeated ids.
  static Triangle of(int a, int b, int c);

  bool contains(int x) const noexcept { return v[0] == x || v[1] == x || v[2] == x; }
  auto operator<=>(const Triangle&) const = default;
};

/// All 3-cliques of g, each exactly once, in increasing lexicographic order.
std::vector<Triangle> enumerate_triangles(const Graph& g);

/// Result of deleting a vertex set: the induced subgraph on the survivors,
/// relabeled to a contiguous range, with maps in both directions
/// (to_new[old] == -1 for deleted vertices).
struct VertexDeletion {
  Graph graph;
  std::vector<int> to_old;
  std::vector<int> to_new;
};

VertexDeletion delete_vertices(const Graph& g, std::span<const int> removed);

/// Edge-preserving-bijection test via degree refinement plus backtracking.
/// Deliberately naive: throws input_error when either order exceeds
/// max_order, guarding against exponential blowup on inputs this was never
/// meant for.
bool are_isomorphic(const Graph& g, const Graph& h, int max_order = 12);

}  // namespace axt
