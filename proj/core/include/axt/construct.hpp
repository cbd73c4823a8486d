#pragma once

#include <cstdint>
#include <functional>
#include <unordered_set>
#include <vector>

#include "axt/graph.hpp"

namespace axt {

enum class GenMode { random, exhaustive };

struct GenSpec {
  int n = 3;
  int k = 2;
  std::uint64_t seed = 0;
  GenMode mode = GenMode::random;
};

/// Seeded random k-tree of order n: start from K_k, then attach each new
/// vertex to a k-clique drawn uniformly from all k-cliques of the current
/// graph. Identical seeds give identical edge sets. n < k is rejected.
Graph random_ktree(int n, int k, std::uint64_t seed);

/// All 2-trees of order n up to isomorphism, by exhaustive edge-attachment
/// with isomorphism dedup. Guarded by a cap (default 10) because the count
/// and the dedup cost grow quickly.
std::vector<Graph> enumerate_2trees(int n, int cap = 10);

/// Dispatch on GenSpec.mode; random mode yields a single graph.
std::vector<Graph> generate(const GenSpec& spec);

/// Corona H ∘ K_1: one new pendant vertex per vertex of H, with pendant of
/// v getting id order(H) + v.
Graph corona(const Graph& h);

/// Embeds a 2-tree into an alpha-excellent 2-tree as an induced subgraph:
/// greedily choose a maximal family of vertex-disjoint triangles, then give
/// every uncovered vertex v a two-vertex gadget (x adjacent to v and v's
/// lowest neighbor, y adjacent to v and x), completing a perfect 3-cover.
/// vertex_map[v] is v's id in the supergraph (the identity injection).
/// At most 2 new vertices per original vertex, so order at most triples.
struct Embedding {
  Graph graph;
  std::vector<int> vertex_map;
};

Embedding embed_excellent(const Graph& g);

/// Collision-tolerant dedup aid: hash of the edge list after relabeling
/// vertices by (degree, sorted neighbor degrees). Not a canonical form.
std::uint64_t graph_fingerprint(const Graph& g);

/// One explorer observation: excellence versus cover existence for a
/// sampled k-tree. agrees is the unsettled direction (excellent implies
/// has_cover); the converse (covered implies excellent) is settled, so a
/// covered non-excellent k-tree is a contradiction that aborts the run.
struct ExplorationRecord {
  std::uint64_t fingerprint = 0;
  int k = 0;
  int n = 0;
  bool excellent = false;
  bool has_cover = false;
  bool agrees = true;
};

struct ExploreOptions {
  int workers = 0;          // 0: hardware concurrency
  int oracle_budget = 40;
  /// Streaming sink: called once per record, serialized, in instance order,
  /// while later instances may still be in flight.
  std::function<void(const ExplorationRecord&)> on_record;
  /// Fingerprints to skip (resume support); matching instances are counted
  /// but not classified or emitted.
  const std::unordered_set<std::uint64_t>* skip_fingerprints = nullptr;
};

struct ExploreResult {
  std::vector<ExplorationRecord> records;              // instance order
  std::vector<ExplorationRecord> findings;             // excellent && !has_cover
  int skipped_budget = 0;
  int skipped_resume = 0;
  bool aborted = false;                                // contradiction seen
  ExplorationRecord contradiction;
};

/// Samples `budget` seeded k-trees with orders in [k+1, n_max] (orders not
/// divisible by k+1 serve as negative controls) and cross-tabulates oracle
/// excellence against perfect-cover existence. Deterministic for a fixed
/// seed regardless of worker count: every instance derives its own RNG
/// stream from (seed, instance index).
ExploreResult explore_converse(int k, int n_max, int budget, std::uint64_t seed,
                               const ExploreOptions& options = {});

}  // namespace axt
