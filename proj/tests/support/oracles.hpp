#pragma once

// Test-only reference implementations, kept deliberately independent of the
// library's search code: plain subset enumeration and definition-level
// checks that the production algorithms are validated against.

#include <cstdint>
#include <vector>

#include "axt/family_e.hpp"
#include "axt/graph.hpp"

namespace axt::testing {

// Subset-enumeration oracles; order must stay small (<= ~20).
int brute_alpha(const Graph& g);
int brute_independent_domination(const Graph& g);
int brute_max_independent_through(const Graph& g, int v);
int brute_common_independence(const Graph& g);
bool brute_excellent(const Graph& g);
int brute_triangle_count(const Graph& g);

// Exact cover count over brute-enumerated (k+1)-cliques, no propagation.
int brute_cover_count(const Graph& g, int k, int limit);

// Perfect matching existence by direct augmentation-free recursion.
bool brute_has_perfect_matching(const Graph& g);

// Rose's three k-tree conditions, with "smallest separator" read as "every
// minimal separator". Exponential in order; intended for order <= 8.
bool rose_is_ktree(const Graph& g, int k);

// Labeled k-tree count C(n,k) * (k(n-k)+1)^(n-k-2) for n >= k+2.
std::uint64_t labeled_ktree_count(int n, int k);

// Generators for property tests.
Graph erdos_renyi(int n, double p, std::uint64_t seed);
Graph random_labeled_tree(int n, std::uint64_t seed);  // uniform via Pruefer

// Random member of the O1/O2 family, grown by `steps` operations.
LabeledTwoTree random_family_member(int steps, std::uint64_t seed);

bool is_independent_set(const Graph& g, const std::vector<int>& s);

}  // namespace axt::testing
