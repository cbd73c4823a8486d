#pragma once

#include <optional>
#include <string>
#include <vector>

#include "axt/graph.hpp"

namespace axt {

/// A perfect (k+1)-cover: pairwise disjoint (k+1)-cliques whose union is the
/// whole vertex set. Parts are stored sorted, and the part list itself is
/// sorted, so equal covers compare equal.
struct Cover {
  int k = 0;
  std::vector<std::vector<int>> parts;

  bool operator==(const Cover&) const = default;
};

/// Finds a perfect (k+1)-cover of g if one exists. Works on arbitrary
/// graphs, not only k-trees. Immediate absence when (k+1) does not divide
/// the order. Exact-cover backtracking over the (k+1)-cliques with unit
/// propagation on vertices left with a single surviving candidate; the
/// branch vertex is the uncovered one with fewest candidates (ties lowest
/// id).
std::optional<Cover> find_perfect_cover(const Graph& g, int k);

/// Number of distinct perfect (k+1)-covers, capped at limit (the search
/// stops once limit covers are found). limit must be >= 1.
int count_perfect_covers(const Graph& g, int k, int limit);

/// Validation verdict; `violation` describes the first violated clause when
/// not ok (part not a clique, overlap, uncovered vertex, ...).
struct CoverCheck {
  bool ok = true;
  std::string violation;
};

CoverCheck validate_cover(const Graph& g, const Cover& cover);

/// Checks the consequences a perfect (k+1)-cover forces on a k-tree:
/// alpha == n/(k+1), and every class of the (unique) proper (k+1)-coloring
/// is a maximum independent set. Alpha is computed on the chordal fast path
/// from the k-tree's elimination order. Throws input_error when g is not a
/// k-tree or the cover is invalid.
struct CoverConsequences {
  int expected_alpha = 0;  // n / (k+1)
  int alpha = 0;
  bool alpha_matches = false;
  std::vector<std::vector<int>> color_classes;
  bool classes_independent = false;
  bool classes_maximum = false;
  bool ok = false;
};

CoverConsequences cover_consequences(const Graph& g, const Cover& cover);

}  // namespace axt
