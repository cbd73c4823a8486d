#include "axt/oracle.hpp"

#include <algorithm>
#include <bit>
#include <cstdint>
#include <string>

#include "axt/errors.hpp"
#include "axt/ktree.hpp"

namespace axt {

namespace {

// Word-packed vertex set for the exact searches.
struct VertexSet {
  std::vector<std::uint64_t> w;

  explicit VertexSet(int n = 0) : w(static_cast<std::size_t>((n + 63) / 64), 0) {}

  void set(int i) { w[static_cast<std::size_t>(i >> 6)] |= std::uint64_t{1} << (i & 63); }
  void reset(int i) { w[static_cast<std::size_t>(i >> 6)] &= ~(std::uint64_t{1} << (i & 63)); }
  bool test(int i) const {
    return (w[static_cast<std::size_t>(i >> 6)] >> (i & 63)) & 1;
  }
  int count() const {
    int c = 0;
    for (auto x : w) c += std::popcount(x);
    return c;
  }
  bool empty() const {
    for (auto x : w)
      if (x) return false;
    return true;
  }
  void and_not(const VertexSet& o) {
    for (std::size_t i = 0; i < w.size(); ++i) w[i] &= ~o.w[i];
  }
  int first() const {
    for (std::size_t i = 0; i < w.size(); ++i)
      if (w[i]) return static_cast<int>(i * 64) + std::countr_zero(w[i]);
    return -1;
  }
  template <typename Fn>
  void for_each(Fn fn) const {
    for (std::size_t i = 0; i < w.size(); ++i) {
      std::uint64_t x = w[i];
      while (x) {
        fn(static_cast<int>(i * 64) + std::countr_zero(x));
        x &= x - 1;
      }
    }
  }
};

struct SearchGraph {
  int n;
  std::vector<VertexSet> closed;  // N[v]
  std::vector<VertexSet> open;    // N(v)

  explicit SearchGraph(const Graph& g) : n(g.order()) {
    closed.assign(static_cast<std::size_t>(n), VertexSet(n));
    open.assign(static_cast<std::size_t>(n), VertexSet(n));
    for (int v = 0; v < n; ++v) {
      closed[static_cast<std::size_t>(v)].set(v);
      for (int u : g.neighbors(v)) {
        closed[static_cast<std::size_t>(v)].set(u);
        open[static_cast<std::size_t>(v)].set(u);
      }
    }
  }

  int degree_in(int v, const VertexSet& rem) const {
    int c = 0;
    for (std::size_t i = 0; i < rem.w.size(); ++i)
      c += std::popcount(rem.w[i] & open[static_cast<std::size_t>(v)].w[i]);
    return c;
  }
};

void check_budget(const Graph& g, const OracleLimits& limits) {
  if (g.order() > limits.max_order)
    throw budget_error("exact search refused: order " + std::to_string(g.order()) +
                       " exceeds budget " + std::to_string(limits.max_order));
}

// Greedy independent set inside rem (min remaining degree first): the
// initial lower bound of the branch and bound.
std::vector<int> greedy_independent(const SearchGraph& sg, VertexSet rem) {
  std::vector<int> out;
  while (!rem.empty()) {
    int best = -1, best_deg = -1;
    rem.for_each([&](int v) {
      int d = sg.degree_in(v, rem);
      if (best == -1 || d < best_deg) {
        best = v;
        best_deg = d;
      }
    });
    out.push_back(best);
    rem.and_not(sg.closed[static_cast<std::size_t>(best)]);
  }
  return out;
}

// Clique-cover upper bound on alpha(rem): greedily partition rem into
// cliques; any independent set meets each clique at most once.
int clique_cover_bound(const SearchGraph& sg, const VertexSet& rem) {
  VertexSet left = rem;
  int cliques = 0;
  while (!left.empty()) {
    int v = left.first();
    left.reset(v);
    VertexSet ext(sg.n);
    for (std::size_t i = 0; i < left.w.size(); ++i)
      ext.w[i] = left.w[i] & sg.open[static_cast<std::size_t>(v)].w[i];
    while (!ext.empty()) {
      int u = ext.first();
      left.reset(u);
      for (std::size_t i = 0; i < ext.w.size(); ++i)
        ext.w[i] &= sg.open[static_cast<std::size_t>(u)].w[i];
      ext.reset(u);
    }
    ++cliques;
  }
  return cliques;
}

struct AlphaSearch {
  const SearchGraph& sg;
  std::vector<int> best;
  std::vector<int> current;

  void run(VertexSet rem) {
    int bound = static_cast<int>(current.size()) + clique_cover_bound(sg, rem);
    if (bound <= static_cast<int>(best.size())) return;
    if (rem.empty()) {
      if (current.size() > best.size()) best = current;
      return;
    }
    int v = -1, vd = -1;
    rem.for_each([&](int u) {
      int d = sg.degree_in(u, rem);
      if (d > vd) {
        vd = d;
        v = u;
      }
    });
    // include v
    VertexSet in = rem;
    in.and_not(sg.closed[static_cast<std::size_t>(v)]);
    current.push_back(v);
    run(in);
    current.pop_back();
    // exclude v
    rem.reset(v);
    run(rem);
  }
};

AlphaResult alpha_on_set(const SearchGraph& sg, const VertexSet& rem) {
  AlphaSearch search{sg, greedy_independent(sg, rem), {}};
  search.run(rem);
  std::sort(search.best.begin(), search.best.end());
  return {static_cast<int>(search.best.size()), std::move(search.best)};
}

VertexSet full_set(int n) {
  VertexSet s(n);
  for (int v = 0; v < n; ++v) s.set(v);
  return s;
}

// Minimum independent dominating set. Branch on the lowest undominated
// vertex: any maximal independent set must pick from its closed
// neighborhood.
struct DominationSearch {
  const SearchGraph& sg;
  int n;
  std::vector<int> best;
  std::vector<int> current;

  void run(const VertexSet& undominated, const VertexSet& available) {
    if (undominated.empty()) {
      if (best.empty() || current.size() < best.size()) best = current;
      return;
    }
    if (!best.empty()) {
      // one pick covers at most max over available u of |N[u] ∩ undominated|
      int cap = 0;
      available.for_each([&](int u) {
        int c = sg.degree_in(u, undominated) + (undominated.test(u) ? 1 : 0);
        cap = std::max(cap, c);
      });
      if (cap == 0) return;  // undominated vertices no available pick can reach
      int need_min = (undominated.count() + cap - 1) / cap;
      if (static_cast<int>(current.size()) + need_min >= static_cast<int>(best.size())) return;
    }
    int v = undominated.first();
    VertexSet choices(sg.n);
    for (std::size_t i = 0; i < choices.w.size(); ++i)
      choices.w[i] = sg.closed[static_cast<std::size_t>(v)].w[i] & available.w[i];
    choices.for_each([&](int u) {
      VertexSet und = undominated;
      und.and_not(sg.closed[static_cast<std::size_t>(u)]);
      VertexSet avail = available;
      avail.and_not(sg.closed[static_cast<std::size_t>(u)]);
      current.push_back(u);
      run(und, avail);
      current.pop_back();
    });
  }
};

}  // namespace

AlphaResult alpha_bruteforce(const Graph& g, const OracleLimits& limits) {
  check_budget(g, limits);
  if (g.order() == 0) return {0, {}};
  SearchGraph sg(g);
  return alpha_on_set(sg, full_set(g.order()));
}

bool vertex_in_alpha_set(const Graph& g, int v, const OracleLimits& limits) {
  check_budget(g, limits);
  if (!g.has_vertex(v)) throw input_error("vertex id out of range: " + std::to_string(v));
  SearchGraph sg(g);
  int alpha = alpha_on_set(sg, full_set(g.order())).alpha;
  VertexSet rem = full_set(g.order());
  rem.and_not(sg.closed[static_cast<std::size_t>(v)]);
  return alpha_on_set(sg, rem).alpha == alpha - 1;
}

AlphaResult independent_domination(const Graph& g, const OracleLimits& limits) {
  check_budget(g, limits);
  if (g.order() == 0) return {0, {}};
  SearchGraph sg(g);
  // any greedy maximal independent set is dominating, so it seeds the bound
  DominationSearch search{sg, g.order(), greedy_independent(sg, full_set(g.order())), {}};
  search.run(full_set(g.order()), full_set(g.order()));
  std::sort(search.best.begin(), search.best.end());
  return {static_cast<int>(search.best.size()), std::move(search.best)};
}

int common_independence(const Graph& g, const OracleLimits& limits) {
  check_budget(g, limits);
  if (g.order() == 0) return 0;
  SearchGraph sg(g);
  int alpha_c = g.order();
  for (int v = 0; v < g.order(); ++v) {
    VertexSet rem = full_set(g.order());
    rem.and_not(sg.closed[static_cast<std::size_t>(v)]);
    alpha_c = std::min(alpha_c, 1 + alpha_on_set(sg, rem).alpha);
    if (alpha_c == 1) break;
  }
  return alpha_c;
}

OracleReport classify(const Graph& g, const OracleLimits& limits) {
  check_budget(g, limits);
  OracleReport rep;
  if (g.order() == 0) {
    rep.well_covered = true;
    rep.excellent = true;
    return rep;
  }
  SearchGraph sg(g);
  rep.alpha = alpha_on_set(sg, full_set(g.order())).alpha;
  rep.i_dom = independent_domination(g, limits).alpha;
  rep.per_vertex_max.resize(static_cast<std::size_t>(g.order()));
  rep.alpha_c = g.order();
  for (int v = 0; v < g.order(); ++v) {
    VertexSet rem = full_set(g.order());
    rem.and_not(sg.closed[static_cast<std::size_t>(v)]);
    int through_v = 1 + alpha_on_set(sg, rem).alpha;
    rep.per_vertex_max[static_cast<std::size_t>(v)] = through_v;
    rep.alpha_c = std::min(rep.alpha_c, through_v);
  }
  rep.well_covered = rep.i_dom == rep.alpha;
  rep.excellent = rep.alpha_c == rep.alpha;
  return rep;
}

bool is_alpha_excellent(const Graph& g, const OracleLimits& limits) {
  check_budget(g, limits);
  if (g.order() == 0) return true;
  SearchGraph sg(g);
  int alpha = alpha_on_set(sg, full_set(g.order())).alpha;
  for (int v = 0; v < g.order(); ++v) {
    VertexSet rem = full_set(g.order());
    rem.and_not(sg.closed[static_cast<std::size_t>(v)]);
    if (alpha_on_set(sg, rem).alpha != alpha - 1) return false;
  }
  return true;
}

bool fast_excellent_2tree(const Graph& g) {
  auto order = recognize_ktree(g, 2);
  if (!order) throw input_error("fast_excellent_2tree requires a 2-tree");
  int n = g.order();
  auto peo = elimination_sequence(*order);

  // A perfect elimination ordering restricted to an induced subgraph stays
  // perfect, so one ordering serves alpha(G) and every alpha(G - N[v]).
  std::vector<int> excluded(static_cast<std::size_t>(n), -1);
  std::vector<int> blocked(static_cast<std::size_t>(n), -1);
  auto greedy = [&](int pass) {
    int count = 0;
    for (int u : peo) {
      if (excluded[static_cast<std::size_t>(u)] == pass) continue;
      if (blocked[static_cast<std::size_t>(u)] == pass) continue;
      ++count;
      for (int w : g.neighbors(u)) blocked[static_cast<std::size_t>(w)] = pass;
    }
    return count;
  };

  int alpha = greedy(0);
  for (int v = 0; v < n; ++v) {
    int pass = v + 1;
    excluded[static_cast<std::size_t>(v)] = pass;
    for (int w : g.neighbors(v)) excluded[static_cast<std::size_t>(w)] = pass;
    if (greedy(pass) != alpha - 1) return false;
  }
  return true;
}

}  // namespace axt
