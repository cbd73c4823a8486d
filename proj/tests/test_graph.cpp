#include <doctest.h>

#include <algorithm>
#include <random>

#include "axt/errors.hpp"
#include "axt/graph.hpp"
#include "support/oracles.hpp"

using namespace axt;

namespace {

Graph k3() { return Graph(3, {{0, 1}, {0, 2}, {1, 2}}); }
Graph c6() { return Graph(6, {{0, 1}, {1, 2}, {2, 3}, {3, 4}, {4, 5}, {5, 0}}); }
Graph diamond() { return Graph(4, {{0, 1}, {0, 2}, {0, 3}, {1, 2}, {1, 3}}); }

}  // namespace

TEST_CASE("build_graph validates and normalizes") {
  Graph g = k3();
  CHECK(g.order() == 3);
  CHECK(g.edge_count() == 3);
  CHECK(g.has_edge(0, 2));
  CHECK(g.has_edge(2, 0));
  CHECK_FALSE(g.has_edge(0, 0));

  CHECK(Graph(1, {}).order() == 1);
  CHECK(c6().edge_count() == 6);

  // duplicates collapse
  Graph d(2, {{0, 1}, {1, 0}, {0, 1}});
  CHECK(d.edge_count() == 1);

  CHECK_THROWS_AS(Graph(3, {{0, 3}}), input_error);
  CHECK_THROWS_AS(Graph(3, {{1, 1}}), input_error);
  CHECK_THROWS_AS(Graph(-1, {}), input_error);
}

TEST_CASE("edge_list round trips the input modulo order") {
  Graph g(5, {{4, 0}, {2, 1}, {3, 2}});
  std::vector<Edge> expected{{0, 4}, {1, 2}, {2, 3}};
  CHECK(g.edge_list() == expected);
}

TEST_CASE("enumerate_triangles on fixtures") {
  CHECK(enumerate_triangles(k3()) == std::vector<Triangle>{Triangle::of(0, 1, 2)});
  CHECK(enumerate_triangles(c6()).empty());
  CHECK(enumerate_triangles(diamond()) ==
        std::vector<Triangle>{Triangle::of(0, 1, 2), Triangle::of(0, 1, 3)});
}

TEST_CASE("triangle enumeration matches the 3-subset count on random graphs") {
  for (std::uint64_t seed = 0; seed < 30; ++seed) {
    int n = 4 + static_cast<int>(seed % 7);
    Graph g = testing::erdos_renyi(n, 0.45, 1000 + seed);
    CHECK(static_cast<int>(enumerate_triangles(g).size()) == testing::brute_triangle_count(g));
  }
}

TEST_CASE("delete_vertices relabels contiguously") {
  auto del = delete_vertices(k3(), std::vector<int>{2});
  CHECK(del.graph.order() == 2);
  CHECK(del.graph.has_edge(0, 1));

  auto p5 = delete_vertices(c6(), std::vector<int>{0});
  CHECK(p5.graph.order() == 5);
  CHECK(p5.graph.edge_count() == 4);

  auto path = delete_vertices(diamond(), std::vector<int>{0});
  CHECK(path.graph.edge_list() == std::vector<Edge>{{0, 1}, {0, 2}});
  CHECK(path.to_old == std::vector<int>{1, 2, 3});
  CHECK(path.to_new == std::vector<int>{-1, 0, 1, 2});

  CHECK_THROWS_AS(delete_vertices(k3(), std::vector<int>{5}), input_error);
}

TEST_CASE("deleting nothing is an isomorphic copy") {
  for (std::uint64_t seed = 0; seed < 10; ++seed) {
    Graph g = testing::erdos_renyi(6, 0.5, 2000 + seed);
    auto del = delete_vertices(g, {});
    CHECK(del.graph == g);
    CHECK(are_isomorphic(del.graph, g));
  }
}

TEST_CASE("isomorphism on fixtures") {
  Graph c6_shuffled(6, {{3, 1}, {1, 5}, {5, 0}, {0, 4}, {4, 2}, {2, 3}});
  CHECK(are_isomorphic(c6(), c6_shuffled));

  Graph p3(3, {{0, 1}, {1, 2}});
  CHECK_FALSE(are_isomorphic(k3(), p3));

  Graph k4(4, {{0, 1}, {0, 2}, {0, 3}, {1, 2}, {1, 3}, {2, 3}});
  CHECK_FALSE(are_isomorphic(diamond(), k4));

  // same degree sequence, different structure
  Graph two_triangles(6, {{0, 1}, {0, 2}, {1, 2}, {3, 4}, {3, 5}, {4, 5}});
  CHECK_FALSE(are_isomorphic(c6(), two_triangles));
}

TEST_CASE("isomorphism respects the order cap") {
  Graph big(13, {});
  CHECK_THROWS_AS(are_isomorphic(big, big), input_error);
  CHECK(are_isomorphic(big, big, 13));
}

TEST_CASE("relabeled random graphs stay isomorphic") {
  for (std::uint64_t seed = 0; seed < 20; ++seed) {
    int n = 5 + static_cast<int>(seed % 5);
    Graph g = testing::erdos_renyi(n, 0.4, 3000 + seed);
    std::vector<int> perm(static_cast<std::size_t>(n));
    for (int i = 0; i < n; ++i) perm[static_cast<std::size_t>(i)] = i;
    std::mt19937_64 rng(seed);
    std::shuffle(perm.begin(), perm.end(), rng);
    std::vector<Edge> edges;
    for (auto [u, v] : g.edge_list())
      edges.emplace_back(perm[static_cast<std::size_t>(u)], perm[static_cast<std::size_t>(v)]);
    CHECK(are_isomorphic(g, Graph(n, edges)));
  }
}
