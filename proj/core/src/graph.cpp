#include "axt/graph.hpp"

#include <algorithm>
#include <string>

#include "axt/errors.hpp"

namespace axt {

namespace {

std::string pair_str(int u, int v) {
  return "(" + std::to_string(u) + ", " + std::to_string(v) + ")";
}

}  // namespace

Graph::Graph(int n, std::span<const Edge> edges) {
  if (n < 0) throw input_error("vertex count must be non-negative");
  n_ = n;
  adj_.assign(static_cast<std::size_t>(n), {});
  for (const auto& [u, v] : edges) {
    if (u < 0 || u >= n || v < 0 || v >= n)
      throw input_error("edge endpoint out of range: " + pair_str(u, v));
    if (u == v) throw input_error("self-loop rejected: " + pair_str(u, v));
    adj_[static_cast<std::size_t>(u)].push_back(v);
    adj_[static_cast<std::size_t>(v)].push_back(u);
  }
  m_ = 0;
  for (auto& nbrs : adj_) {
    std::sort(nbrs.begin(), nbrs.end());
    nbrs.erase(std::unique(nbrs.begin(), nbrs.end()), nbrs.end());
    m_ += nbrs.size();
  }
  m_ /= 2;
}

Graph::Graph(int n, std::initializer_list<Edge> edges)
    : Graph(n, std::span<const Edge>(edges.begin(), edges.size())) {}

bool Graph::has_edge(int u, int v) const {
  if (!has_vertex(u) || !has_vertex(v) || u == v) return false;
  int a = u, b = v;
  if (adj_[static_cast<std::size_t>(a)].size() > adj_[static_cast<std::size_t>(b)].size())
    std::swap(a, b);
  const auto& list = adj_[static_cast<std::size_t>(a)];
  return std::binary_search(list.begin(), list.end(), b);
}

std::span<const int> Graph::neighbors(int v) const {
  if (!has_vertex(v)) throw input_error("vertex id out of range: " + std::to_string(v));
  return adj_[static_cast<std::size_t>(v)];
}

int Graph::degree(int v) const {
  if (!has_vertex(v)) throw input_error("vertex id out of range: " + std::to_string(v));
  return static_cast<int>(adj_[static_cast<std::size_t>(v)].size());
}

std::vector<Edge> Graph::edge_list() const {
  std::vector<Edge> out;
  out.reserve(m_);
  for (int u = 0; u < n_; ++u)
    for (int v : adj_[static_cast<std::size_t>(u)])
      if (u < v) out.emplace_back(u, v);
  return out;
}

bool Graph::is_connected() const {
  if (n_ <= 1) return true;
  std::vector<char> seen(static_cast<std::size_t>(n_), 0);
  std::vector<int> stack{0};
  seen[0] = 1;
  int reached = 1;
  while (!stack.empty()) {
    int u = stack.back();
    stack.pop_back();
    for (int w : adj_[static_cast<std::size_t>(u)]) {
      if (!seen[static_cast<std::size_t>(w)]) {
        seen[static_cast<std::size_t>(w)] = 1;
        ++reached;
        stack.push_back(w);
      }
    }
  }
  return reached == n_;
}

Triangle Triangle::of(int a, int b, int c) {
  Triangle t{{a, b, c}};
  std::sort(t.v.begin(), t.v.end());
  if (t.v[0] == t.v[1] || t.v[1] == t.v[2])
    throw input_error("triangle vertices must be distinct");
  return t;
}

std::vector<Triangle> enumerate_triangles(const Graph& g) {
  std::vector<Triangle> out;
  for (int u = 0; u < g.order(); ++u) {
    auto nu = g.neighbors(u);
    for (int v : nu) {
      if (v <= u) continue;
      // common neighbors of u and v greater than v, by merging sorted lists
      auto nv = g.neighbors(v);
      auto iu = std::lower_bound(nu.begin(), nu.end(), v + 1);
      auto iv = std::lower_bound(nv.begin(), nv.end(), v + 1);
      while (iu != nu.end() && iv != nv.end()) {
        if (*iu < *iv)
          ++iu;
        else if (*iv < *iu)
          ++iv;
        else {
          out.push_back(Triangle{{u, v, *iu}});
          ++iu;
          ++iv;
        }
      }
    }
  }
  return out;
}

VertexDeletion delete_vertices(const Graph& g, std::span<const int> removed) {
  std::vector<char> gone(static_cast<std::size_t>(g.order()), 0);
  for (int v : removed) {
    if (!g.has_vertex(v)) throw input_error("vertex id out of range: " + std::to_string(v));
    gone[static_cast<std::size_t>(v)] = 1;
  }
  VertexDeletion out;
  out.to_new.assign(static_cast<std::size_t>(g.order()), -1);
  for (int v = 0; v < g.order(); ++v) {
    if (!gone[static_cast<std::size_t>(v)]) {
      out.to_new[static_cast<std::size_t>(v)] = static_cast<int>(out.to_old.size());
      out.to_old.push_back(v);
    }
  }
  std::vector<Edge> edges;
  for (int v : out.to_old)
    for (int w : g.neighbors(v))
      if (v < w && out.to_new[static_cast<std::size_t>(w)] >= 0)
        edges.emplace_back(out.to_new[static_cast<std::size_t>(v)],
                           out.to_new[static_cast<std::size_t>(w)]);
  out.graph = Graph(static_cast<int>(out.to_old.size()), edges);
  return out;
}

namespace {

// Iterated neighbor-color refinement (1-dimensional Weisfeiler-Leman).
// Returns per-vertex color classes; isomorphic graphs refine to identical
// color histograms.
std::vector<int> refine_colors(const Graph& g) {
  int n = g.order();
  std::vector<int> color(static_cast<std::size_t>(n));
  for (int v = 0; v < n; ++v) color[static_cast<std::size_t>(v)] = g.degree(v);
  for (int round = 0; round < n; ++round) {
    std::vector<std::pair<std::vector<int>, int>> sig(static_cast<std::size_t>(n));
    for (int v = 0; v < n; ++v) {
      std::vector<int> s;
      s.reserve(g.neighbors(v).size() + 1);
      s.push_back(color[static_cast<std::size_t>(v)]);
      for (int w : g.neighbors(v)) s.push_back(color[static_cast<std::size_t>(w)]);
      std::sort(s.begin() + 1, s.end());
      sig[static_cast<std::size_t>(v)] = {std::move(s), v};
    }
    auto sorted = sig;
    std::sort(sorted.begin(), sorted.end());
    std::vector<int> next(static_cast<std::size_t>(n));
    int c = 0;
    for (std::size_t i = 0; i < sorted.size(); ++i) {
      if (i > 0 && sorted[i].first != sorted[i - 1].first) ++c;
      next[static_cast<std::size_t>(sorted[i].second)] = c;
    }
    if (next == color) break;
    color = std::move(next);
  }
  return color;
}

bool extend_mapping(const Graph& g, const Graph& h, const std::vector<int>& order,
                    const std::vector<std::vector<int>>& candidates, std::vector<int>& map,
                    std::vector<char>& used, std::size_t depth) {
  if (depth == order.size()) return true;
  int v = order[depth];
  for (int w : candidates[static_cast<std::size_t>(v)]) {
    if (used[static_cast<std::size_t>(w)]) continue;
    bool ok = true;
    for (int u : g.neighbors(v)) {
      int mu = map[static_cast<std::size_t>(u)];
      if (mu >= 0 && !h.has_edge(w, mu)) {
        ok = false;
        break;
      }
    }
    // mapped non-neighbors must stay non-adjacent
    if (ok) {
      for (std::size_t i = 0; i < depth; ++i) {
        int u = order[i];
        if (!g.has_edge(v, u) && h.has_edge(w, map[static_cast<std::size_t>(u)])) {
          ok = false;
          break;
        }
      }
    }
    if (!ok) continue;
    map[static_cast<std::size_t>(v)] = w;
    used[static_cast<std::size_t>(w)] = 1;
    if (extend_mapping(g, h, order, candidates, map, used, depth + 1)) return true;
    map[static_cast<std::size_t>(v)] = -1;
    used[static_cast<std::size_t>(w)] = 0;
  }
  return false;
}

}  // namespace

bool are_isomorphic(const Graph& g, const Graph& h, int max_order) {
  if (g.order() > max_order || h.order() > max_order)
    throw input_error("isomorphism test limited to order " + std::to_string(max_order));
  if (g.order() != h.order() || g.edge_count() != h.edge_count()) return false;
  int n = g.order();
  if (n == 0) return true;

  auto cg = refine_colors(g);
  auto ch = refine_colors(h);
  {
    auto sg = cg, sh = ch;
    std::sort(sg.begin(), sg.end());
    std::sort(sh.begin(), sh.end());
    if (sg != sh) return false;
  }

  std::vector<std::vector<int>> candidates(static_cast<std::size_t>(n));
  for (int v = 0; v < n; ++v)
    for (int w = 0; w < n; ++w)
      if (cg[static_cast<std::size_t>(v)] == ch[static_cast<std::size_t>(w)])
        candidates[static_cast<std::size_t>(v)].push_back(w);

  // most constrained vertex first
  std::vector<int> order(static_cast<std::size_t>(n));
  for (int v = 0; v < n; ++v) order[static_cast<std::size_t>(v)] = v;
  std::sort(order.begin(), order.end(), [&](int a, int b) {
    auto ca = candidates[static_cast<std::size_t>(a)].size();
    auto cb = candidates[static_cast<std::size_t>(b)].size();
    if (ca != cb) return ca < cb;
    return a < b;
  });

  std::vector<int> map(static_cast<std::size_t>(n), -1);
  std::vector<char> used(static_cast<std::size_t>(n), 0);
  return extend_mapping(g, h, order, candidates, map, used, 0);
}

}  // namespace axt
