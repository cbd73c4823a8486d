#include "axt/io.hpp"

#include <istream>
#include <map>
#include <ostream>
#include <sstream>
#include <vector>

#include "axt/errors.hpp"

namespace axt {

namespace {

// Data lines with their 1-based line numbers, comments and blanks dropped.
std::vector<std::pair<int, std::string>> data_lines(std::istream& in) {
  std::vector<std::pair<int, std::string>> out;
  std::string line;
  int no = 0;
  while (std::getline(in, line)) {
    ++no;
    auto first = line.find_first_not_of(" \t\r");
    if (first == std::string::npos) continue;
    if (line[first] == '#') continue;
    out.emplace_back(no, line);
  }
  return out;
}

std::vector<long long> parse_ints(int line_no, const std::string& line, std::size_t min_count,
                                  std::size_t max_count, const std::string& what) {
  std::istringstream ss(line);
  std::vector<long long> vals;
  long long x;
  while (ss >> x) vals.push_back(x);
  std::string rest;
  if (!ss.eof()) {
    ss.clear();
    ss >> rest;
  }
  if (!rest.empty())
    throw parse_error(line_no, "unexpected token '" + rest + "' in " + what);
  if (vals.size() < min_count || vals.size() > max_count)
    throw parse_error(line_no, "expected " + std::to_string(min_count) +
                                   (max_count != min_count ? ".." + std::to_string(max_count) : "") +
                                   " integers in " + what);
  return vals;
}

}  // namespace

GraphFile read_graph_file(std::istream& in) {
  auto lines = data_lines(in);
  if (lines.empty()) throw parse_error(1, "missing header (expected order, optional k)");

  auto header = parse_ints(lines[0].first, lines[0].second, 1, 2, "header");
  if (header[0] < 0) throw parse_error(lines[0].first, "order must be non-negative");
  GraphFile out;
  int n = static_cast<int>(header[0]);
  if (header.size() == 2) {
    if (header[1] < 1) throw parse_error(lines[0].first, "k must be >= 1");
    out.k = static_cast<int>(header[1]);
  }

  std::vector<Edge> edges;
  for (std::size_t i = 1; i < lines.size(); ++i) {
    auto vals = parse_ints(lines[i].first, lines[i].second, 2, 2, "edge line");
    if (vals[0] < 0 || vals[0] >= n || vals[1] < 0 || vals[1] >= n)
      throw parse_error(lines[i].first, "edge endpoint out of range");
    if (vals[0] == vals[1]) throw parse_error(lines[i].first, "self-loop rejected");
    edges.emplace_back(static_cast<int>(vals[0]), static_cast<int>(vals[1]));
  }
  out.graph = Graph(n, edges);
  return out;
}

void write_graph_file(std::ostream& out, const Graph& g, std::optional<int> k) {
  out << g.order();
  if (k) out << ' ' << *k;
  out << '\n';
  for (const auto& [u, v] : g.edge_list()) out << u << ' ' << v << '\n';
}

Certificate read_certificate_file(std::istream& in) {
  auto lines = data_lines(in);
  if (lines.empty()) throw parse_error(1, "missing base line");

  auto read_op = [](int line_no, const std::string& line, std::string& op,
                    std::vector<long long>& vals) {
    std::istringstream ss(line);
    if (!(ss >> op)) throw parse_error(line_no, "empty record");
    long long x;
    vals.clear();
    while (ss >> x) vals.push_back(x);
    std::string rest;
    if (!ss.eof()) {
      ss.clear();
      ss >> rest;
      if (!rest.empty()) throw parse_error(line_no, "unexpected token '" + rest + "'");
    }
  };

  std::string op;
  std::vector<long long> vals;
  read_op(lines[0].first, lines[0].second, op, vals);
  if (op != "base" || vals.size() != 3)
    throw parse_error(lines[0].first, "expected 'base a b c'");
  for (long long v : vals)
    if (v < 0) throw parse_error(lines[0].first, "vertex ids must be non-negative");

  Certificate cert;
  try {
    cert.base = Triangle::of(static_cast<int>(vals[0]), static_cast<int>(vals[1]),
                             static_cast<int>(vals[2]));
  } catch (const input_error& e) {
    throw parse_error(lines[0].first, e.what());
  }

  for (std::size_t i = 1; i < lines.size(); ++i) {
    read_op(lines[i].first, lines[i].second, op, vals);
    for (long long v : vals)
      if (v < 0) throw parse_error(lines[i].first, "vertex ids must be non-negative");
    if (op == "O1") {
      if (vals.size() != 5) throw parse_error(lines[i].first, "expected 'O1 v1 v2 u1 u2 u3'");
      cert.steps.push_back(StepO1{static_cast<int>(vals[0]), static_cast<int>(vals[1]),
                                  {static_cast<int>(vals[2]), static_cast<int>(vals[3]),
                                   static_cast<int>(vals[4])}});
    } else if (op == "O2") {
      if (vals.size() != 7)
        throw parse_error(lines[i].first, "expected 'O2 v1 v2 v3 v4 u0 u1 u2'");
      cert.steps.push_back(StepO2{static_cast<int>(vals[0]), static_cast<int>(vals[1]),
                                  static_cast<int>(vals[2]), static_cast<int>(vals[3]),
                                  {static_cast<int>(vals[4]), static_cast<int>(vals[5]),
                                   static_cast<int>(vals[6])}});
    } else {
      throw parse_error(lines[i].first, "unknown record '" + op + "'");
    }
  }
  return cert;
}

void write_certificate_file(std::ostream& out, const Certificate& cert) {
  out << "base " << cert.base.v[0] << ' ' << cert.base.v[1] << ' ' << cert.base.v[2] << '\n';
  for (const auto& step : cert.steps) {
    if (const auto* o1 = std::get_if<StepO1>(&step)) {
      out << "O1 " << o1->v1 << ' ' << o1->v2 << ' ' << o1->u[0] << ' ' << o1->u[1] << ' '
          << o1->u[2] << '\n';
    } else {
      const auto& o2 = std::get<StepO2>(step);
      out << "O2 " << o2.v1 << ' ' << o2.v2 << ' ' << o2.v3 << ' ' << o2.v4 << ' ' << o2.u[0]
          << ' ' << o2.u[1] << ' ' << o2.u[2] << '\n';
    }
  }
}

void write_dot(std::ostream& out, const Graph& g, const std::set<Triangle>* red,
               const std::set<Triangle>* blue) {
  // map each edge to the strongest label of a triangle containing it
  std::map<Edge, const char*> edge_color;
  auto paint = [&](const std::set<Triangle>& tris, const char* color, bool overwrite) {
    for (const auto& t : tris) {
      for (auto [i, j] : {std::pair{0, 1}, std::pair{0, 2}, std::pair{1, 2}}) {
        Edge e{t.v[i], t.v[j]};
        if (overwrite || !edge_color.count(e)) edge_color[e] = color;
      }
    }
  };
  if (blue) paint(*blue, "blue", false);
  if (red) paint(*red, "red", true);

  out << "graph axt {\n";
  out << "  node [shape=circle];\n";
  if (red)
    for (const auto& t : *red)
      out << "  // red triangle " << t.v[0] << ' ' << t.v[1] << ' ' << t.v[2] << '\n';
  if (blue)
    for (const auto& t : *blue)
      out << "  // blue triangle " << t.v[0] << ' ' << t.v[1] << ' ' << t.v[2] << '\n';
  for (int v = 0; v < g.order(); ++v) out << "  " << v << ";\n";
  for (const auto& e : g.edge_list()) {
    out << "  " << e.first << " -- " << e.second;
    auto it = edge_color.find(e);
    if (it != edge_color.end()) out << " [color=" << it->second << "]";
    out << ";\n";
  }
  out << "}\n";
}

}  // namespace axt
