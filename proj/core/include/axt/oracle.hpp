#pragma once

#include <vector>

#include "axt/graph.hpp"

namespace axt {

/// Knob for the exact searches. Instances above max_order are refused with
/// budget_error rather than answered approximately.
struct OracleLimits {
  int max_order = 40;
};

struct AlphaResult {
  int alpha = 0;
  std::vector<int> witness;
};

/// Exact independence number with a witness. Branch and bound on the
/// highest-degree remaining vertex, seeded by a greedy lower bound and
/// pruned with a clique-cover upper bound.
AlphaResult alpha_bruteforce(const Graph& g, const OracleLimits& limits = {});

/// True iff v lies in some maximum independent set, decided through the
/// identity alpha(G - N[v]) == alpha(G) - 1.
bool vertex_in_alpha_set(const Graph& g, int v, const OracleLimits& limits = {});

/// Exact independent domination number i(G) with a witness (a minimum
/// maximal independent set).
AlphaResult independent_domination(const Graph& g, const OracleLimits& limits = {});

/// Common independence number: min over vertices of the largest independent
/// set containing that vertex.
int common_independence(const Graph& g, const OracleLimits& limits = {});

/// Definition-level classification of a graph.
///
/// Conventions for the empty graph: alpha, i and alpha_c are 0 and the
/// vacuous graph counts as well-covered and excellent, which keeps
/// identities like alpha(G - N[v]) total.
struct OracleReport {
  int alpha = 0;
  int i_dom = 0;
  int alpha_c = 0;
  bool well_covered = false;
  bool excellent = false;
  std::vector<int> per_vertex_max;  // per vertex: largest independent set through it
};

OracleReport classify(const Graph& g, const OracleLimits& limits = {});

/// Excellence alone (alpha_c == alpha), with early exit on the first vertex
/// outside every maximum independent set. Cheaper than classify() when the
/// domination number is not needed.
bool is_alpha_excellent(const Graph& g, const OracleLimits& limits = {});

/// Excellence of a 2-tree on the chordal fast path: one greedy alpha over a
/// perfect elimination ordering, then one restricted greedy per vertex.
/// Near-linear per vertex, no search budget. Throws input_error when g is
/// not a 2-tree.
bool fast_excellent_2tree(const Graph& g);

}  // namespace axt
