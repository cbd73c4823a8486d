#include "axt/ktree.hpp"

#include <algorithm>
#include <map>
#include <set>
#include <string>

#include "axt/errors.hpp"

namespace axt {

namespace {

// Alive-neighborhood of v, collected by scanning the static adjacency list
// and skipping removed vertices.
std::vector<int> alive_neighbors(const Graph& g, int v, const std::vector<char>& alive) {
  std::vector<int> out;
  for (int w : g.neighbors(v))
    if (alive[static_cast<std::size_t>(w)]) out.push_back(w);
  return out;
}

bool pairwise_adjacent(const Graph& g, std::span<const int> vs) {
  for (std::size_t i = 0; i < vs.size(); ++i)
    for (std::size_t j = i + 1; j < vs.size(); ++j)
      if (!g.has_edge(vs[i], vs[j])) return false;
  return true;
}

}  // namespace

std::optional<EliminationOrder> recognize_ktree(const Graph& g, int k) {
  if (k < 1) throw input_error("k must be >= 1");
  int n = g.order();
  if (n < k) return std::nullopt;

  std::vector<char> alive(static_cast<std::size_t>(n), 1);
  std::vector<int> deg(static_cast<std::size_t>(n));
  for (int v = 0; v < n; ++v) deg[static_cast<std::size_t>(v)] = g.degree(v);

  // A vertex's alive degree only decreases, so it crosses k at most once;
  // the clique test for its (then fixed) alive neighborhood never changes
  // afterwards. Each vertex is therefore tested O(1) times.
  std::set<int> eligible;
  auto test_candidate = [&](int v) {
    if (deg[static_cast<std::size_t>(v)] != k) return;
    auto nbrs = alive_neighbors(g, v, alive);
    if (pairwise_adjacent(g, nbrs)) eligible.insert(v);
  };
  for (int v = 0; v < n; ++v) test_candidate(v);

  std::vector<EliminationStep> peeled;
  int alive_count = n;
  while (alive_count > k) {
    if (eligible.empty()) return std::nullopt;
    int v = *eligible.begin();
    eligible.erase(eligible.begin());
    EliminationStep step{v, alive_neighbors(g, v, alive)};
    alive[static_cast<std::size_t>(v)] = 0;
    --alive_count;
    for (int w : step.clique) {
      int& dw = deg[static_cast<std::size_t>(w)];
      if (dw == k) eligible.erase(w);
      --dw;
      if (dw == k) test_candidate(w);
    }
    peeled.push_back(std::move(step));
  }

  EliminationOrder order;
  order.k = k;
  for (int v = 0; v < n; ++v)
    if (alive[static_cast<std::size_t>(v)]) order.base.push_back(v);
  if (!pairwise_adjacent(g, order.base)) return std::nullopt;
  order.steps.assign(peeled.rbegin(), peeled.rend());
  return order;
}

Graph replay_elimination(const EliminationOrder& order) {
  if (order.k < 1) throw input_error("elimination order: k must be >= 1");
  if (static_cast<int>(order.base.size()) != order.k)
    throw input_error("elimination order: base must have exactly k vertices");

  int n = order.k + static_cast<int>(order.steps.size());
  std::vector<char> present(static_cast<std::size_t>(n), 0);
  auto claim = [&](int v) {
    if (v < 0 || v >= n)
      throw input_error("elimination order: vertex ids must form 0.." + std::to_string(n - 1));
    if (present[static_cast<std::size_t>(v)])
      throw input_error("elimination order: vertex " + std::to_string(v) + " repeated");
    present[static_cast<std::size_t>(v)] = 1;
  };

  std::vector<Edge> edges;
  for (int v : order.base) claim(v);
  for (std::size_t i = 0; i < order.base.size(); ++i)
    for (std::size_t j = i + 1; j < order.base.size(); ++j)
      edges.emplace_back(order.base[i], order.base[j]);

  // checking completeness of each attachment clique needs incremental
  // adjacency, so build as we go
  std::vector<std::set<int>> adj(static_cast<std::size_t>(n));
  auto add_edge = [&](int a, int b) {
    adj[static_cast<std::size_t>(a)].insert(b);
    adj[static_cast<std::size_t>(b)].insert(a);
  };
  for (const auto& [a, b] : edges) add_edge(a, b);

  for (const auto& step : order.steps) {
    if (static_cast<int>(step.clique.size()) != order.k)
      throw input_error("elimination order: attachment clique must have k vertices");
    for (int w : step.clique) {
      if (w < 0 || w >= n || !present[static_cast<std::size_t>(w)])
        throw input_error("elimination order: attachment to absent vertex " + std::to_string(w));
    }
    for (std::size_t i = 0; i < step.clique.size(); ++i)
      for (std::size_t j = i + 1; j < step.clique.size(); ++j)
        if (!adj[static_cast<std::size_t>(step.clique[i])].count(step.clique[j]))
          throw input_error("elimination order: attachment clique not complete at step");
    claim(step.vertex);
    for (int w : step.clique) {
      edges.emplace_back(step.vertex, w);
      add_edge(step.vertex, w);
    }
  }
  return Graph(n, edges);
}

std::vector<int> elimination_sequence(const EliminationOrder& order) {
  std::vector<int> seq;
  seq.reserve(order.base.size() + order.steps.size());
  for (auto it = order.steps.rbegin(); it != order.steps.rend(); ++it) seq.push_back(it->vertex);
  for (int v : order.base) seq.push_back(v);
  return seq;
}

std::vector<int> simplicial_vertices(const Graph& g) {
  std::vector<int> out;
  for (int v = 0; v < g.order(); ++v) {
    auto nbrs = g.neighbors(v);
    if (pairwise_adjacent(g, nbrs)) out.push_back(v);
  }
  return out;
}

std::vector<Simplex> simplexes(const Graph& g) {
  // group simplicial vertices by their closed neighborhood
  std::map<std::vector<int>, std::vector<int>> by_clique;
  for (int v : simplicial_vertices(g)) {
    std::vector<int> closed(g.neighbors(v).begin(), g.neighbors(v).end());
    closed.push_back(v);
    std::sort(closed.begin(), closed.end());
    by_clique[std::move(closed)].push_back(v);
  }
  std::vector<Simplex> out;
  out.reserve(by_clique.size());
  for (auto& [clique, witnesses] : by_clique) out.push_back(Simplex{clique, witnesses});
  return out;
}

SimplexDisjointness check_simplex_disjointness(const Graph& g) {
  std::vector<int> count(static_cast<std::size_t>(g.order()), 0);
  for (const auto& s : simplexes(g))
    for (int v : s.vertices) ++count[static_cast<std::size_t>(v)];
  for (int v = 0; v < g.order(); ++v)
    if (count[static_cast<std::size_t>(v)] >= 2) return {false, v};
  return {true, -1};
}

ChordalAlphaResult chordal_alpha(const Graph& g, std::span<const int> elimination) {
  int n = g.order();
  if (static_cast<int>(elimination.size()) != n)
    throw input_error("elimination sequence must list every vertex exactly once");
  std::vector<int> pos(static_cast<std::size_t>(n), -1);
  for (int i = 0; i < n; ++i) {
    int v = elimination[static_cast<std::size_t>(i)];
    if (v < 0 || v >= n || pos[static_cast<std::size_t>(v)] != -1)
      throw input_error("elimination sequence must list every vertex exactly once");
    pos[static_cast<std::size_t>(v)] = i;
  }
  // perfect elimination: every later neighborhood must induce a clique
  for (int v = 0; v < n; ++v) {
    std::vector<int> later;
    for (int w : g.neighbors(v))
      if (pos[static_cast<std::size_t>(w)] > pos[static_cast<std::size_t>(v)]) later.push_back(w);
    if (!pairwise_adjacent(g, later))
      throw input_error("not a perfect elimination ordering: later neighborhood of vertex " +
                        std::to_string(v) + " is not a clique");
  }

  ChordalAlphaResult res;
  std::vector<char> blocked(static_cast<std::size_t>(n), 0);
  for (int v : elimination) {
    if (blocked[static_cast<std::size_t>(v)]) continue;
    res.witness.push_back(v);
    for (int w : g.neighbors(v)) blocked[static_cast<std::size_t>(w)] = 1;
  }
  res.alpha = static_cast<int>(res.witness.size());
  std::sort(res.witness.begin(), res.witness.end());
  return res;
}

}  // namespace axt
