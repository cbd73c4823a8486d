#include <doctest.h>

#include <sstream>

#include "axt/construct.hpp"
#include "axt/errors.hpp"
#include "axt/family_e.hpp"
#include "axt/graph.hpp"
#include "axt/io.hpp"
#include "support/oracles.hpp"

using namespace axt;

TEST_CASE("graph files parse: header, comments, edges") {
  std::istringstream in("# a triangle\n3 2\n0 1\n0 2\n\n1 2\n");
  auto gf = read_graph_file(in);
  CHECK(gf.graph == Graph(3, {{0, 1}, {0, 2}, {1, 2}}));
  CHECK(gf.k == 2);

  std::istringstream no_k("1\n");
  auto bare = read_graph_file(no_k);
  CHECK(bare.graph.order() == 1);
  CHECK_FALSE(bare.k.has_value());
}

TEST_CASE("graph file errors carry line numbers") {
  std::istringstream empty("# nothing\n");
  CHECK_THROWS_AS(read_graph_file(empty), parse_error);

  std::istringstream bad_token("3\n0 x\n");
  try {
    read_graph_file(bad_token);
    FAIL("expected parse_error");
  } catch (const parse_error& e) {
    CHECK(e.line() == 2);
  }

  std::istringstream out_of_range("3\n0 1\n0 7\n");
  try {
    read_graph_file(out_of_range);
    FAIL("expected parse_error");
  } catch (const parse_error& e) {
    CHECK(e.line() == 3);
  }

  std::istringstream self_loop("3\n1 1\n");
  CHECK_THROWS_AS(read_graph_file(self_loop), parse_error);

  std::istringstream too_many("3\n0 1 2\n");
  CHECK_THROWS_AS(read_graph_file(too_many), parse_error);
}

TEST_CASE("graph files round trip") {
  for (std::uint64_t seed = 0; seed < 20; ++seed) {
    Graph g = testing::erdos_renyi(6 + static_cast<int>(seed % 5), 0.4, 28000 + seed);
    std::ostringstream out;
    write_graph_file(out, g, 2);
    std::istringstream in(out.str());
    auto back = read_graph_file(in);
    CHECK(back.graph == g);
    CHECK(back.k == 2);
  }
}

TEST_CASE("certificate files round trip") {
  Certificate cert{Triangle::of(0, 1, 2),
                   {StepO1{0, 1, {3, 4, 5}}, StepO2{3, 4, 5, 4, {6, 7, 8}}}};
  std::ostringstream out;
  write_certificate_file(out, cert);
  std::istringstream in(out.str());
  CHECK(read_certificate_file(in) == cert);

  // and the replay of a parsed certificate matches the replay of the original
  std::istringstream again(out.str());
  auto parsed = read_certificate_file(again);
  CHECK(replay_certificate(parsed).graph == replay_certificate(cert).graph);
}

TEST_CASE("certificate file errors") {
  std::istringstream missing_base("O1 0 1 3 4 5\n");
  CHECK_THROWS_AS(read_certificate_file(missing_base), parse_error);

  std::istringstream arity("base 0 1 2\nO1 0 1 3 4\n");
  try {
    read_certificate_file(arity);
    FAIL("expected parse_error");
  } catch (const parse_error& e) {
    CHECK(e.line() == 2);
  }

  std::istringstream unknown("base 0 1 2\nO3 0 1 2 3 4 5 6\n");
  CHECK_THROWS_AS(read_certificate_file(unknown), parse_error);

  std::istringstream repeated_base("base 0 0 2\n");
  CHECK_THROWS_AS(read_certificate_file(repeated_base), parse_error);
}

TEST_CASE("dot export carries structure and labels") {
  auto t = replay_certificate(Certificate{Triangle::of(0, 1, 2), {StepO1{0, 1, {3, 4, 5}}}});
  std::ostringstream out;
  write_dot(out, t.graph, &t.red, &t.blue);
  std::string dot = out.str();
  CHECK(dot.find("graph axt {") != std::string::npos);
  CHECK(dot.find("// red triangle 0 1 2") != std::string::npos);
  CHECK(dot.find("// red triangle 3 4 5") != std::string::npos);
  CHECK(dot.find("// blue triangle 0 1 3") != std::string::npos);
  CHECK(dot.find("3 -- 4 [color=red]") != std::string::npos);
  CHECK(dot.find("0 -- 3 [color=blue]") != std::string::npos);

  std::ostringstream plain;
  write_dot(plain, Graph(2, {{0, 1}}));
  CHECK(plain.str().find("0 -- 1;") != std::string::npos);
}
