#pragma once

#include <array>
#include <optional>
#include <set>
#include <variant>
#include <vector>

#include "axt/graph.hpp"

namespace axt {

/// A 2-tree whose triangles carry red/blue labels. Red and blue are disjoint
/// subsets of the graph's triangles; unlabeled triangles are simply absent
/// from both. For every tree built by the family operations, the red set is
/// a perfect 3-cover of the graph.
struct LabeledTwoTree {
  Graph graph;
  std::set<Triangle> red;
  std::set<Triangle> blue;
};

/// The order-3 seed: K_3 with its only triangle red.
LabeledTwoTree base_labeled_triangle();

/// Growth step on an edge (v1, v2): new vertices u1, u2, u3 form triangles
/// v1v2u1, v2u1u2, u1u2u3; the last one becomes red, the first two blue.
struct StepO1 {
  int v1 = -1, v2 = -1;
  std::array<int, 3> u{-1, -1, -1};  // u1, u2, u3

  bool operator==(const StepO1&) const = default;
};

/// Growth step on a red triangle v1v2v3 and an edge v3v4 (v4 may be v1 or
/// v2): new vertices u0, u1, u2 form triangles u0v1v2, v3v4u1, v3u1u2.
/// v1v2v3 turns blue; u0v1v2 and v3u1u2 become red; v3v4u1 becomes blue.
struct StepO2 {
  int v1 = -1, v2 = -1, v3 = -1, v4 = -1;
  std::array<int, 3> u{-1, -1, -1};  // u0, u1, u2

  bool operator==(const StepO2&) const = default;
};

using CertificateStep = std::variant<StepO1, StepO2>;

/// Replayable construction: the initial red triangle plus the ordered step
/// list. Steps carry the concrete vertex ids of the graph they certify, so
/// replaying a decomposition yields the original graph edge for edge, not
/// merely up to isomorphism.
struct Certificate {
  Triangle base;
  std::vector<CertificateStep> steps;

  bool operator==(const Certificate&) const = default;
};

/// Single-step application. The new ids must be fresh and, together with the
/// existing vertices, still form a contiguous 0..n-1 range (arbitrary fresh
/// ids are fine inside a certificate replay, where only the final graph is
/// materialized). Precondition violations throw input_error.
LabeledTwoTree apply_o1(const LabeledTwoTree& t, const StepO1& step);
LabeledTwoTree apply_o2(const LabeledTwoTree& t, const StepO2& step);

/// Replays a certificate from its red base triangle. Throws input_error on
/// the first step whose precondition fails (the message names the step
/// index), or when the final ids do not form a contiguous range.
LabeledTwoTree replay_certificate(const Certificate& cert);

/// Decomposes a 2-tree of order >= 3 into a construction certificate.
/// Returns a certificate whose replay is edge-identical to g iff g is
/// alpha-excellent; nullopt otherwise. Order < 3 or a non-2-tree is a
/// rejection (input_error), distinct from nullopt.
///
/// The procedure peels inverse operation gadgets, guided by the perfect
/// 3-cover: no cover means no certificate; otherwise cover triangles act as
/// the red set, inverse-O1 is matched before inverse-O2, candidates are
/// tried lowest-anchor-first, and dead ends backtrack.
std::optional<Certificate> decompose(const Graph& g);

/// Membership in the family generated from a red triangle by the two growth
/// operations; same rejection semantics as decompose.
bool is_in_family_e(const Graph& g);

}  // namespace axt
