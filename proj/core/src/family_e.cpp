#include "axt/family_e.hpp"

#include <algorithm>
#include <map>
#include <string>

#include "axt/cover.hpp"
#include "axt/errors.hpp"
#include "axt/ktree.hpp"

namespace axt {

namespace {

std::pair<int, int> norm_edge(int a, int b) { return {std::min(a, b), std::max(a, b)}; }

// Sparse accumulator for growth steps. Intermediate states may use any
// vertex ids; only materialization insists on a contiguous range, which is
// what lets certificates carry the concrete ids of the decomposed graph.
struct TwoTreeBuilder {
  std::set<int> vertices;
  std::set<std::pair<int, int>> edges;
  std::set<Triangle> red;
  std::set<Triangle> blue;

  static TwoTreeBuilder from(const LabeledTwoTree& t) {
    TwoTreeBuilder b;
    for (int v = 0; v < t.graph.order(); ++v) b.vertices.insert(v);
    for (const auto& [u, v] : t.graph.edge_list()) b.edges.insert(norm_edge(u, v));
    b.red = t.red;
    b.blue = t.blue;
    return b;
  }

  static TwoTreeBuilder seed(const Triangle& base) {
    TwoTreeBuilder b;
    for (int v : base.v) {
      if (v < 0) throw input_error("vertex ids must be non-negative");
      b.vertices.insert(v);
    }
    b.edges.insert(norm_edge(base.v[0], base.v[1]));
    b.edges.insert(norm_edge(base.v[0], base.v[2]));
    b.edges.insert(norm_edge(base.v[1], base.v[2]));
    b.red.insert(base);
    return b;
  }

  bool has_edge(int a, int b) const { return edges.count(norm_edge(a, b)) > 0; }

  void claim_fresh(std::span<const int> ids, const std::string& where) {
    for (std::size_t i = 0; i < ids.size(); ++i) {
      if (ids[i] < 0) throw input_error(where + ": vertex ids must be non-negative");
      for (std::size_t j = i + 1; j < ids.size(); ++j)
        if (ids[i] == ids[j]) throw input_error(where + ": new ids must be distinct");
      if (vertices.count(ids[i]))
        throw input_error(where + ": id " + std::to_string(ids[i]) + " is not fresh");
    }
    for (int id : ids) vertices.insert(id);
  }

  void add_edge(int a, int b) { edges.insert(norm_edge(a, b)); }

  void o1(const StepO1& s, const std::string& where) {
    if (!vertices.count(s.v1) || !vertices.count(s.v2) || !has_edge(s.v1, s.v2))
      throw input_error(where + ": (" + std::to_string(s.v1) + ", " + std::to_string(s.v2) +
                        ") is not an edge");
    claim_fresh(s.u, where);
    auto [u1, u2, u3] = s.u;
    add_edge(u1, s.v1);
    add_edge(u1, s.v2);
    add_edge(u2, s.v2);
    add_edge(u2, u1);
    add_edge(u3, u1);
    add_edge(u3, u2);
    red.insert(Triangle::of(u1, u2, u3));
    blue.insert(Triangle::of(s.v1, s.v2, u1));
    blue.insert(Triangle::of(s.v2, u1, u2));
  }

  void o2(const StepO2& s, const std::string& where) {
    if (s.v1 == s.v2 || s.v1 == s.v3 || s.v2 == s.v3)
      throw input_error(where + ": triangle vertices must be distinct");
    Triangle tri = Triangle::of(s.v1, s.v2, s.v3);
    if (!red.count(tri))
      throw input_error(where + ": triangle (" + std::to_string(s.v1) + ", " +
                        std::to_string(s.v2) + ", " + std::to_string(s.v3) + ") is not red");
    if (s.v4 == s.v3 || !vertices.count(s.v4) || !has_edge(s.v3, s.v4))
      throw input_error(where + ": v4 must be a neighbor of v3");
    claim_fresh(s.u, where);
    auto [u0, u1, u2] = s.u;
    add_edge(u0, s.v1);
    add_edge(u0, s.v2);
    add_edge(u1, s.v3);
    add_edge(u1, s.v4);
    add_edge(u2, s.v3);
    add_edge(u2, u1);
    red.erase(tri);
    red.insert(Triangle::of(u0, s.v1, s.v2));
    red.insert(Triangle::of(s.v3, u1, u2));
    blue.insert(tri);
    blue.insert(Triangle::of(s.v3, s.v4, u1));
  }

  LabeledTwoTree finish() const {
    int n = static_cast<int>(vertices.size());
    for (int v : vertices)
      if (v >= n)
        throw input_error("vertex ids do not form a contiguous range 0.." +
                          std::to_string(n - 1));
    std::vector<Edge> es(edges.begin(), edges.end());
    return {Graph(n, es), red, blue};
  }
};

}  // namespace

LabeledTwoTree base_labeled_triangle() {
  return replay_certificate(Certificate{Triangle::of(0, 1, 2), {}});
}

LabeledTwoTree apply_o1(const LabeledTwoTree& t, const StepO1& step) {
  auto b = TwoTreeBuilder::from(t);
  b.o1(step, "O1");
  return b.finish();
}

LabeledTwoTree apply_o2(const LabeledTwoTree& t, const StepO2& step) {
  auto b = TwoTreeBuilder::from(t);
  b.o2(step, "O2");
  return b.finish();
}

LabeledTwoTree replay_certificate(const Certificate& cert) {
  auto b = TwoTreeBuilder::seed(cert.base);
  for (std::size_t i = 0; i < cert.steps.size(); ++i) {
    const std::string where = "step " + std::to_string(i);
    std::visit([&](const auto& s) {
      if constexpr (std::is_same_v<std::decay_t<decltype(s)>, StepO1>)
        b.o1(s, where);
      else
        b.o2(s, where);
    }, cert.steps[i]);
  }
  return b.finish();
}

namespace {

// Backtracking peeler. Inverse gadgets are matched against the live degrees
// and the maintained cover; candidates are served one at a time through a
// cursor so a level never materializes its full candidate list.
class Peeler {
public:
  Peeler(const Graph& g, const Cover& cover) : g_(g) {
    int n = g.order();
    alive_.assign(static_cast<std::size_t>(n), 1);
    deg_.resize(static_cast<std::size_t>(n));
    for (int v = 0; v < n; ++v) deg_[static_cast<std::size_t>(v)] = g.degree(v);
    part_of_.assign(static_cast<std::size_t>(n), -1);
    for (const auto& p : cover.parts) {
      int idx = static_cast<int>(parts_.size());
      parts_.push_back({p[0], p[1], p[2]});
      part_alive_.push_back(1);
      for (int v : p) part_of_[static_cast<std::size_t>(v)] = idx;
    }
    alive_count_ = n;
  }

  bool run(std::vector<CertificateStep>& construction) {
    std::vector<CertificateStep> peeled;
    if (!peel(peeled)) return false;
    construction.assign(peeled.rbegin(), peeled.rend());
    return true;
  }

  Triangle final_triangle() const {
    std::vector<int> rest;
    for (int v = 0; v < g_.order(); ++v)
      if (alive_[static_cast<std::size_t>(v)]) rest.push_back(v);
    return Triangle::of(rest[0], rest[1], rest[2]);
  }

private:
  struct Cursor {
    int phase = 0;  // 0: inverse O1, 1: inverse O2
    int anchor = 0;
    int assign = 0;
    int inner = 0;
  };

  const Graph& g_;
  std::vector<char> alive_;
  std::vector<int> deg_;
  std::vector<std::array<int, 3>> parts_;
  std::vector<char> part_alive_;
  std::vector<int> part_of_;
  int alive_count_ = 0;

  std::vector<int> alive_nbrs(int v) const {
    std::vector<int> out;
    for (int w : g_.neighbors(v))
      if (alive_[static_cast<std::size_t>(w)]) out.push_back(w);
    return out;
  }

  bool part_matches(int v, std::span<const int> others) const {
    auto p = parts_[static_cast<std::size_t>(part_of_[static_cast<std::size_t>(v)])];
    std::array<int, 3> want{v, others[0], others[1]};
    std::sort(p.begin(), p.end());
    std::sort(want.begin(), want.end());
    return p == want;
  }

  // u3 is the degree-2 tip of a red triangle whose other two vertices have
  // live degrees 4 (u1) and 3 (u2); the O1 attachment edge v1v2 is read off
  // their remaining neighbors.
  std::optional<StepO1> match_o1(int u3) const {
    if (!alive_[static_cast<std::size_t>(u3)] || deg_[static_cast<std::size_t>(u3)] != 2)
      return std::nullopt;
    auto nb = alive_nbrs(u3);
    if (!g_.has_edge(nb[0], nb[1])) return std::nullopt;
    if (!part_matches(u3, nb)) return std::nullopt;
    int u1, u2;
    int d0 = deg_[static_cast<std::size_t>(nb[0])], d1 = deg_[static_cast<std::size_t>(nb[1])];
    if (d0 == 4 && d1 == 3) {
      u1 = nb[0];
      u2 = nb[1];
    } else if (d0 == 3 && d1 == 4) {
      u1 = nb[1];
      u2 = nb[0];
    } else {
      return std::nullopt;
    }
    int v2 = -1;
    for (int w : alive_nbrs(u2))
      if (w != u1 && w != u3) v2 = w;
    if (v2 < 0) return std::nullopt;
    int v1 = -1;
    bool v2_adj_u1 = false;
    for (int w : alive_nbrs(u1)) {
      if (w == v2) v2_adj_u1 = true;
      else if (w != u2 && w != u3) v1 = w;
    }
    if (!v2_adj_u1 || v1 < 0) return std::nullopt;
    if (!g_.has_edge(v1, v2)) return std::nullopt;
    return StepO1{v1, v2, {u1, u2, u3}};
  }

  // Shared head of the inverse-O2 match: u1 has live degree 3 and shares a
  // red triangle with the degree-2 tip u2 and pivot v3; v4 is u1's third
  // neighbor. assign picks which part member plays u2.
  struct O2Head {
    int u2, v3, v4;
  };

  std::optional<O2Head> match_o2_head(int u1, int assign) const {
    if (!alive_[static_cast<std::size_t>(u1)] || deg_[static_cast<std::size_t>(u1)] != 3)
      return std::nullopt;
    auto p = parts_[static_cast<std::size_t>(part_of_[static_cast<std::size_t>(u1)])];
    std::vector<int> others;
    for (int v : p)
      if (v != u1) others.push_back(v);
    std::sort(others.begin(), others.end());
    int u2 = assign == 0 ? others[0] : others[1];
    int v3 = assign == 0 ? others[1] : others[0];
    if (deg_[static_cast<std::size_t>(u2)] != 2) return std::nullopt;
    auto n2 = alive_nbrs(u2);
    if (!((n2[0] == u1 && n2[1] == v3) || (n2[0] == v3 && n2[1] == u1))) return std::nullopt;
    int v4 = -1;
    bool saw_v3 = false, saw_u2 = false;
    for (int w : alive_nbrs(u1)) {
      if (w == v3) saw_v3 = true;
      else if (w == u2) saw_u2 = true;
      else v4 = w;
    }
    if (!saw_v3 || !saw_u2 || v4 < 0) return std::nullopt;
    if (!g_.has_edge(v3, v4)) return std::nullopt;
    return O2Head{u2, v3, v4};
  }

  // u0 is a degree-2 tip of another red triangle u0v1v2 with v1v2v3 forming
  // the triangle that turns red again after the peel.
  std::optional<StepO2> match_o2(int u1, const O2Head& head, int u0) const {
    if (!alive_[static_cast<std::size_t>(u0)] || deg_[static_cast<std::size_t>(u0)] != 2)
      return std::nullopt;
    if (u0 == u1 || u0 == head.u2 || u0 == head.v3 || u0 == head.v4) return std::nullopt;
    auto nb = alive_nbrs(u0);
    if (!part_matches(u0, nb)) return std::nullopt;
    int v1 = std::min(nb[0], nb[1]), v2 = std::max(nb[0], nb[1]);
    if (!g_.has_edge(head.v3, v1) || !g_.has_edge(head.v3, v2)) return std::nullopt;
    return StepO2{v1, v2, head.v3, head.v4, {u0, u1, head.u2}};
  }

  std::optional<CertificateStep> next_candidate(Cursor& cur) const {
    int n = g_.order();
    if (cur.phase == 0) {
      for (int v = cur.anchor; v < n; ++v) {
        if (auto s = match_o1(v)) {
          cur.anchor = v + 1;
          return CertificateStep{*s};
        }
      }
      cur.phase = 1;
      cur.anchor = 0;
      cur.assign = 0;
      cur.inner = 0;
    }
    for (int v = cur.anchor; v < n; ++v) {
      int assign0 = (v == cur.anchor) ? cur.assign : 0;
      for (int a = assign0; a < 2; ++a) {
        auto head = match_o2_head(v, a);
        if (!head) continue;
        int inner0 = (v == cur.anchor && a == cur.assign) ? cur.inner : 0;
        for (int z = inner0; z < n; ++z) {
          if (auto s = match_o2(v, *head, z)) {
            cur.anchor = v;
            cur.assign = a;
            cur.inner = z + 1;
            return CertificateStep{*s};
          }
        }
      }
    }
    return std::nullopt;
  }

  void remove_vertices(std::span<const int> vs) {
    for (int v : vs) alive_[static_cast<std::size_t>(v)] = 0;
    for (int v : vs)
      for (int w : g_.neighbors(v))
        if (alive_[static_cast<std::size_t>(w)]) --deg_[static_cast<std::size_t>(w)];
    alive_count_ -= static_cast<int>(vs.size());
  }

  void restore_vertices(std::span<const int> vs) {
    for (int v : vs)
      for (int w : g_.neighbors(v))
        if (alive_[static_cast<std::size_t>(w)]) ++deg_[static_cast<std::size_t>(w)];
    for (int v : vs) alive_[static_cast<std::size_t>(v)] = 1;
    alive_count_ += static_cast<int>(vs.size());
  }

  void apply(const CertificateStep& step) {
    if (const auto* o1 = std::get_if<StepO1>(&step)) {
      part_alive_[static_cast<std::size_t>(part_of_[static_cast<std::size_t>(o1->u[2])])] = 0;
      remove_vertices(o1->u);
    } else {
      const auto& o2 = std::get<StepO2>(step);
      part_alive_[static_cast<std::size_t>(part_of_[static_cast<std::size_t>(o2.u[0])])] = 0;
      part_alive_[static_cast<std::size_t>(part_of_[static_cast<std::size_t>(o2.u[1])])] = 0;
      int idx = static_cast<int>(parts_.size());
      parts_.push_back({o2.v1, o2.v2, o2.v3});
      part_alive_.push_back(1);
      part_of_[static_cast<std::size_t>(o2.v1)] = idx;
      part_of_[static_cast<std::size_t>(o2.v2)] = idx;
      part_of_[static_cast<std::size_t>(o2.v3)] = idx;
      remove_vertices(o2.u);
    }
  }

  void undo(const CertificateStep& step, int old_part_v1, int old_part_v3) {
    if (const auto* o1 = std::get_if<StepO1>(&step)) {
      restore_vertices(o1->u);
      part_alive_[static_cast<std::size_t>(part_of_[static_cast<std::size_t>(o1->u[2])])] = 1;
    } else {
      const auto& o2 = std::get<StepO2>(step);
      restore_vertices(o2.u);
      parts_.pop_back();
      part_alive_.pop_back();
      part_of_[static_cast<std::size_t>(o2.v1)] = old_part_v1;
      part_of_[static_cast<std::size_t>(o2.v2)] = old_part_v1;
      part_of_[static_cast<std::size_t>(o2.v3)] = old_part_v3;
      part_alive_[static_cast<std::size_t>(old_part_v1)] = 1;
      part_alive_[static_cast<std::size_t>(old_part_v3)] = 1;
    }
  }

  bool peel(std::vector<CertificateStep>& out) {
    if (alive_count_ == 3) return true;
    Cursor cur;
    while (auto step = next_candidate(cur)) {
      int old_part_v1 = -1, old_part_v3 = -1;
      if (const auto* o2 = std::get_if<StepO2>(&*step)) {
        old_part_v1 = part_of_[static_cast<std::size_t>(o2->v1)];
        old_part_v3 = part_of_[static_cast<std::size_t>(o2->v3)];
      }
      apply(*step);
      out.push_back(*step);
      if (peel(out)) return true;
      out.pop_back();
      undo(*step, old_part_v1, old_part_v3);
    }
    return false;
  }
};

}  // namespace

std::optional<Certificate> decompose(const Graph& g) {
  if (g.order() < 3) throw input_error("decompose requires order >= 3");
  if (!recognize_ktree(g, 2)) throw input_error("decompose requires a 2-tree");
  if (g.order() % 3 != 0) return std::nullopt;
  auto cover = find_perfect_cover(g, 2);
  if (!cover) return std::nullopt;

  Peeler peeler(g, *cover);
  std::vector<CertificateStep> steps;
  if (!peeler.run(steps)) return std::nullopt;
  return Certificate{peeler.final_triangle(), std::move(steps)};
}

bool is_in_family_e(const Graph& g) { return decompose(g).has_value(); }

}  // namespace axt
