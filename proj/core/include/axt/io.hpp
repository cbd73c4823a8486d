#pragma once

#include <iosfwd>
#include <optional>
#include <set>
#include <string>

#include "axt/family_e.hpp"
#include "axt/graph.hpp"

namespace axt {

/// Graph text format:
///   - '#' starts a comment line, blank lines are ignored
///   - first data line: "n" or "n k" (order, optional k hint)
///   - remaining data lines: "u v", one edge per line, 0-based ids
/// Parse failures throw parse_error carrying the line number.
struct GraphFile {
  Graph graph;
  std::optional<int> k;
};

GraphFile read_graph_file(std::istream& in);
void write_graph_file(std::ostream& out, const Graph& g, std::optional<int> k = std::nullopt);

/// Certificate text format, one step per record:
///   base a b c
///   O1 v1 v2 u1 u2 u3
///   O2 v1 v2 v3 v4 u0 u1 u2
Certificate read_certificate_file(std::istream& in);
void write_certificate_file(std::ostream& out, const Certificate& cert);

/// Graphviz DOT output. Red/blue triangles (when given) are annotated as
/// per-triangle comment clusters, and their edges get the matching color;
/// red wins on shared edges since the red set is what the cover shows.
void write_dot(std::ostream& out, const Graph& g, const std::set<Triangle>* red = nullptr,
               const std::set<Triangle>* blue = nullptr);

}  // namespace axt
