#include "axt/cover.hpp"

#include <algorithm>
#include <string>

#include "axt/errors.hpp"
#include "axt/ktree.hpp"

namespace axt {

namespace {

void extend_cliques(const Graph& g, std::vector<int>& current, std::span<const int> candidates,
                    int target, std::vector<std::vector<int>>& out) {
  if (static_cast<int>(current.size()) == target) {
    out.push_back(current);
    return;
  }
  for (std::size_t i = 0; i < candidates.size(); ++i) {
    int v = candidates[i];
    std::vector<int> next;
    for (std::size_t j = i + 1; j < candidates.size(); ++j)
      if (g.has_edge(v, candidates[j])) next.push_back(candidates[j]);
    current.push_back(v);
    if (static_cast<int>(current.size()) + static_cast<int>(next.size()) >= target)
      extend_cliques(g, current, next, target, out);
    current.pop_back();
  }
}

// All cliques of exactly `size` vertices, each once, lexicographically.
std::vector<std::vector<int>> cliques_of_size(const Graph& g, int size) {
  std::vector<std::vector<int>> out;
  std::vector<int> current;
  std::vector<int> all(static_cast<std::size_t>(g.order()));
  for (int v = 0; v < g.order(); ++v) all[static_cast<std::size_t>(v)] = v;
  extend_cliques(g, current, all, size, out);
  return out;
}

// Exact-cover search state over a fixed clique candidate pool.
struct CoverSearch {
  const Graph& g;
  int part_size;
  std::vector<std::vector<int>> cliques;          // candidate pool
  std::vector<std::vector<int>> cliques_of;       // vertex -> candidate indices
  std::vector<char> clique_alive;
  std::vector<char> covered;
  std::vector<int> cand_count;                    // per uncovered vertex
  std::vector<int> chosen;
  int uncovered;
  int limit;                                      // stop after this many covers
  int found = 0;
  std::vector<std::vector<int>> first_cover;

  CoverSearch(const Graph& graph, int k, int stop_limit)
      : g(graph), part_size(k + 1), uncovered(graph.order()), limit(stop_limit) {
    cliques = cliques_of_size(g, part_size);
    cliques_of.assign(static_cast<std::size_t>(g.order()), {});
    for (std::size_t c = 0; c < cliques.size(); ++c)
      for (int v : cliques[c]) cliques_of[static_cast<std::size_t>(v)].push_back(static_cast<int>(c));
    clique_alive.assign(cliques.size(), 1);
    covered.assign(static_cast<std::size_t>(g.order()), 0);
    cand_count.assign(static_cast<std::size_t>(g.order()), 0);
    for (int v = 0; v < g.order(); ++v)
      cand_count[static_cast<std::size_t>(v)] =
          static_cast<int>(cliques_of[static_cast<std::size_t>(v)].size());
  }

  // Selecting clique c covers its vertices and kills every candidate that
  // touches them. Returns false on a wipeout (some uncovered vertex left
  // with zero candidates); `trail` records killed cliques for undo.
  bool select(int c, std::vector<int>& trail, std::vector<int>& covered_trail) {
    for (int v : cliques[static_cast<std::size_t>(c)]) {
      covered[static_cast<std::size_t>(v)] = 1;
      covered_trail.push_back(v);
      --uncovered;
    }
    bool ok = true;
    for (int v : cliques[static_cast<std::size_t>(c)]) {
      for (int d : cliques_of[static_cast<std::size_t>(v)]) {
        if (!clique_alive[static_cast<std::size_t>(d)]) continue;
        clique_alive[static_cast<std::size_t>(d)] = 0;
        trail.push_back(d);
        for (int w : cliques[static_cast<std::size_t>(d)]) {
          if (covered[static_cast<std::size_t>(w)]) continue;
          if (--cand_count[static_cast<std::size_t>(w)] == 0) ok = false;
        }
      }
    }
    return ok;
  }

  void undo(const std::vector<int>& trail, const std::vector<int>& covered_trail) {
    for (auto it = trail.rbegin(); it != trail.rend(); ++it) {
      clique_alive[static_cast<std::size_t>(*it)] = 1;
      for (int w : cliques[static_cast<std::size_t>(*it)])
        if (!covered[static_cast<std::size_t>(w)]) ++cand_count[static_cast<std::size_t>(w)];
    }
    for (int v : covered_trail) {
      covered[static_cast<std::size_t>(v)] = 0;
      ++uncovered;
    }
  }

  void record_solution() {
    ++found;
    if (found == 1) {
      first_cover.clear();
      for (int c : chosen) first_cover.push_back(cliques[static_cast<std::size_t>(c)]);
    }
  }

  // True once `limit` covers have been found (telling callers to unwind).
  bool search() {
    if (uncovered == 0) {
      record_solution();
      return found >= limit;
    }
    // branch vertex: fewest surviving candidates, ties by lowest id
    int branch = -1, best = -1;
    for (int v = 0; v < g.order(); ++v) {
      if (covered[static_cast<std::size_t>(v)]) continue;
      int c = cand_count[static_cast<std::size_t>(v)];
      if (branch == -1 || c < best) {
        branch = v;
        best = c;
      }
      if (best == 0) return false;
    }
    // unit propagation happens naturally: a vertex with one candidate is
    // picked as the branch vertex and explored without real branching
    std::vector<int> options;
    for (int c : cliques_of[static_cast<std::size_t>(branch)])
      if (clique_alive[static_cast<std::size_t>(c)]) options.push_back(c);
    for (int c : options) {
      std::vector<int> trail, covered_trail;
      bool viable = select(c, trail, covered_trail);
      chosen.push_back(c);
      if (viable && search()) return true;  // hit the limit; unwind without undo
      chosen.pop_back();
      undo(trail, covered_trail);
    }
    return false;
  }
};

Cover canonicalize(int k, std::vector<std::vector<int>> parts) {
  for (auto& p : parts) std::sort(p.begin(), p.end());
  std::sort(parts.begin(), parts.end());
  return Cover{k, std::move(parts)};
}

}  // namespace

std::optional<Cover> find_perfect_cover(const Graph& g, int k) {
  if (k < 1) throw input_error("k must be >= 1");
  if (g.order() % (k + 1) != 0) return std::nullopt;
  if (g.order() == 0) return Cover{k, {}};
  CoverSearch search(g, k, 1);
  search.search();
  if (search.found == 0) return std::nullopt;
  return canonicalize(k, std::move(search.first_cover));
}

int count_perfect_covers(const Graph& g, int k, int limit) {
  if (k < 1) throw input_error("k must be >= 1");
  if (limit < 1) throw input_error("limit must be >= 1");
  if (g.order() % (k + 1) != 0) return 0;
  if (g.order() == 0) return 1;
  CoverSearch search(g, k, limit);
  search.search();
  return search.found;
}

CoverCheck validate_cover(const Graph& g, const Cover& cover) {
  std::vector<int> owner(static_cast<std::size_t>(g.order()), -1);
  for (std::size_t p = 0; p < cover.parts.size(); ++p) {
    const auto& part = cover.parts[p];
    if (static_cast<int>(part.size()) != cover.k + 1)
      return {false, "part " + std::to_string(p) + " has " + std::to_string(part.size()) +
                         " vertices, expected " + std::to_string(cover.k + 1)};
    for (int v : part) {
      if (!g.has_vertex(v))
        return {false, "part " + std::to_string(p) + " mentions unknown vertex " +
                           std::to_string(v)};
      if (owner[static_cast<std::size_t>(v)] >= 0)
        return {false, "vertex " + std::to_string(v) + " covered by parts " +
                           std::to_string(owner[static_cast<std::size_t>(v)]) + " and " +
                           std::to_string(p)};
      owner[static_cast<std::size_t>(v)] = static_cast<int>(p);
    }
    for (std::size_t i = 0; i < part.size(); ++i)
      for (std::size_t j = i + 1; j < part.size(); ++j)
        if (!g.has_edge(part[i], part[j]))
          return {false, "part " + std::to_string(p) + " is not a clique: missing edge (" +
                             std::to_string(part[i]) + ", " + std::to_string(part[j]) + ")"};
  }
  for (int v = 0; v < g.order(); ++v)
    if (owner[static_cast<std::size_t>(v)] < 0)
      return {false, "vertex " + std::to_string(v) + " uncovered"};
  return {true, ""};
}

CoverConsequences cover_consequences(const Graph& g, const Cover& cover) {
  auto check = validate_cover(g, cover);
  if (!check.ok) throw input_error("invalid cover: " + check.violation);
  auto order = recognize_ktree(g, cover.k);
  if (!order) throw input_error("cover_consequences requires a k-tree");

  CoverConsequences res;
  res.expected_alpha = g.order() / (cover.k + 1);
  res.alpha = chordal_alpha(g, elimination_sequence(*order)).alpha;
  res.alpha_matches = res.alpha == res.expected_alpha;

  // greedy coloring along the construction order: the attachment clique
  // carries k distinct colors, leaving exactly one for the new vertex
  std::vector<int> color(static_cast<std::size_t>(g.order()), -1);
  int next = 0;
  for (int v : order->base) color[static_cast<std::size_t>(v)] = next++;
  for (const auto& step : order->steps) {
    std::vector<char> used(static_cast<std::size_t>(cover.k + 1), 0);
    for (int w : step.clique) used[static_cast<std::size_t>(color[static_cast<std::size_t>(w)])] = 1;
    for (int c = 0; c <= cover.k; ++c)
      if (!used[static_cast<std::size_t>(c)]) {
        color[static_cast<std::size_t>(step.vertex)] = c;
        break;
      }
  }
  res.color_classes.assign(static_cast<std::size_t>(cover.k) + 1, {});
  for (int v = 0; v < g.order(); ++v)
    res.color_classes[static_cast<std::size_t>(color[static_cast<std::size_t>(v)])].push_back(v);

  res.classes_independent = true;
  for (const auto& cls : res.color_classes)
    for (std::size_t i = 0; i < cls.size() && res.classes_independent; ++i)
      for (std::size_t j = i + 1; j < cls.size(); ++j)
        if (g.has_edge(cls[i], cls[j])) {
          res.classes_independent = false;
          break;
        }
  res.classes_maximum = true;
  for (const auto& cls : res.color_classes)
    if (static_cast<int>(cls.size()) != res.alpha) res.classes_maximum = false;

  res.ok = res.alpha_matches && res.classes_independent && res.classes_maximum;
  return res;
}

}  // namespace axt
