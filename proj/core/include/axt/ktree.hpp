#pragma once

#include <optional>
#include <span>
#include <vector>

#include "axt/graph.hpp"

namespace axt {

/// One attachment of the k-tree construction: `vertex` joined to the k
/// mutually adjacent vertices in `clique`.
struct EliminationStep {
  int vertex = -1;
  std::vector<int> clique;

  bool operator==(const EliminationStep&) const = default;
};

/// Certificate of k-tree-ness: replaying K_k on `base` and then attaching
/// each step's vertex to its clique reproduces the certified graph exactly.
/// Steps are stored in construction order (reverse of the peel order).
struct EliminationOrder {
  int k = 0;
  std::vector<int> base;
  std::vector<EliminationStep> steps;

  bool operator==(const EliminationOrder&) const = default;
};

/// Decides whether g is a k-tree by repeatedly removing the lowest-id
/// simplicial vertex of degree exactly k; accepts iff the residue is K_k.
/// K_k itself is accepted with empty steps. Disconnected graphs of order > k
/// simply fail recognition (they are not an error).
std::optional<EliminationOrder> recognize_ktree(const Graph& g, int k);

/// Rebuilds the graph certified by an elimination order. Throws input_error
/// if the order is internally inconsistent (ids not forming a contiguous
/// range, an attachment clique incomplete at attach time, ...).
Graph replay_elimination(const EliminationOrder& order);

/// The perfect elimination ordering induced by a k-tree certificate: step
/// vertices last-attached-first, then the base clique.
std::vector<int> elimination_sequence(const EliminationOrder& order);

/// Vertices whose neighborhood induces a clique. Isolated and degree-1
/// vertices count.
std::vector<int> simplicial_vertices(const Graph& g);

/// A maximal clique together with the simplicial vertices witnessing it.
struct Simplex {
  std::vector<int> vertices;
  std::vector<int> witnesses;

  bool operator==(const Simplex&) const = default;
};

/// All simplexes of g (each clique listed once, with every witness).
std::vector<Simplex> simplexes(const Graph& g);

/// Necessary condition for alpha-excellence: no vertex may lie in two
/// simplexes. `offending` is the lowest such vertex when the check fails,
/// -1 otherwise.
struct SimplexDisjointness {
  bool ok = true;
  int offending = -1;
};

SimplexDisjointness check_simplex_disjointness(const Graph& g);

struct ChordalAlphaResult {
  int alpha = 0;
  std::vector<int> witness;
};

/// Maximum independent set of a chordal graph by the greedy sweep over a
/// perfect elimination ordering, linear in graph size. The ordering is
/// validated (every vertex's later neighborhood must be a clique); an
/// invalid ordering throws input_error.
ChordalAlphaResult chordal_alpha(const Graph& g, std::span<const int> elimination);

}  // namespace axt
