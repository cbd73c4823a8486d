// Acceptance suite: every check the artifact must pass, one line of output
// per criterion. Exits nonzero if any criterion fails.

#include <chrono>
#include <cstdio>
#include <set>
#include <string>
#include <vector>

#include "axt/construct.hpp"
#include "axt/cover.hpp"
#include "axt/errors.hpp"
#include "axt/family_e.hpp"
#include "axt/graph.hpp"
#include "axt/ktree.hpp"
#include "axt/oracle.hpp"
#include "support/oracles.hpp"

using namespace axt;

namespace {

constexpr std::uint64_t kSeed = 0xA11CE5EED;

int failures = 0;

void report(int criterion, bool ok, const std::string& detail) {
  std::printf("%s  criterion %2d: %s\n", ok ? "PASS" : "FAIL", criterion, detail.c_str());
  if (!ok) ++failures;
}

double seconds_since(std::chrono::steady_clock::time_point start) {
  return std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
}

struct Corpus {
  std::vector<Graph> two_trees;  // orders 3..9 exhaustive, then 500 random of order 10..15
};

Corpus build_corpus() {
  Corpus corpus;
  for (int n = 3; n <= 9; ++n)
    for (auto& g : enumerate_2trees(n)) corpus.two_trees.push_back(std::move(g));
  for (int i = 0; i < 500; ++i) {
    int n = 10 + i % 6;
    corpus.two_trees.push_back(random_ktree(n, 2, kSeed + 101 * static_cast<std::uint64_t>(i)));
  }
  return corpus;
}

Graph induced_on(const Graph& g, const std::set<int>& keep) {
  std::vector<int> removed;
  for (int v = 0; v < g.order(); ++v)
    if (!keep.count(v)) removed.push_back(v);
  return delete_vertices(g, removed).graph;
}

// 1. excellence <=> perfect 3-cover <=> decomposition, orders 3..15
void criterion_1(const Corpus& corpus, std::vector<char>& excellent_flags) {
  auto start = std::chrono::steady_clock::now();
  int disagreements = 0;
  excellent_flags.assign(corpus.two_trees.size(), 0);
  for (std::size_t i = 0; i < corpus.two_trees.size(); ++i) {
    const Graph& g = corpus.two_trees[i];
    bool excellent = is_alpha_excellent(g);
    bool covered = find_perfect_cover(g, 2).has_value();
    bool member = decompose(g).has_value();
    if (excellent != covered || covered != member) ++disagreements;
    excellent_flags[i] = excellent ? 1 : 0;
  }
  double elapsed = seconds_since(start);
  bool ok = disagreements == 0 && elapsed < 60.0;
  report(1, ok,
         "excellence/cover/decomposition equivalence on " +
             std::to_string(corpus.two_trees.size()) + " 2-trees: " +
             std::to_string(disagreements) + " disagreements, " + std::to_string(elapsed) + " s");
}

// 2. covered k-trees are excellent with alpha = n/(k+1)
void criterion_2(std::vector<std::pair<int, Graph>>& ktrees) {
  int violations = 0, covered_count = 0;
  for (int k = 1; k <= 4; ++k) {
    std::vector<int> orders;
    for (int n = k + 1; n <= 24; ++n)
      if (n % (k + 1) == 0) orders.push_back(n);
    for (int i = 0; i < 200; ++i) {
      int n = orders[static_cast<std::size_t>(i) % orders.size()];
      Graph g = random_ktree(n, k, kSeed + 977 * static_cast<std::uint64_t>(i) +
                                       static_cast<std::uint64_t>(k) * 131071);
      ktrees.emplace_back(k, g);
      auto cover = find_perfect_cover(g, k);
      if (!cover) continue;
      ++covered_count;
      if (!is_alpha_excellent(g)) ++violations;
      if (alpha_bruteforce(g).alpha != n / (k + 1)) ++violations;
    }
  }
  report(2, violations == 0,
         "covered k-trees (k = 1..4, 800 instances, " + std::to_string(covered_count) +
             " covered): " + std::to_string(violations) + " violations");
}

// 3. at most one cover per k-tree; the C4 control has two
void criterion_3(const std::vector<std::pair<int, Graph>>& ktrees) {
  int violations = 0;
  for (const auto& [k, g] : ktrees)
    if (count_perfect_covers(g, k, 2) > 1) ++violations;
  Graph c4(4, {{0, 1}, {1, 2}, {2, 3}, {3, 0}});
  bool control = count_perfect_covers(c4, 1, 3) == 2;
  report(3, violations == 0 && control,
         "cover uniqueness on 800 k-trees: " + std::to_string(violations) +
             " violations; C4 control " + (control ? "returns 2" : "FAILED"));
}

// 4. overlapping simplexes force a vertex outside every maximum set
void criterion_4(const Corpus& corpus, const std::vector<std::pair<int, Graph>>& ktrees) {
  std::vector<Graph> pool;
  for (const auto& g : corpus.two_trees)
    if (g.order() <= 14) pool.push_back(g);
  for (const auto& [k, g] : ktrees)
    if (g.order() <= 14) pool.push_back(g);
  pool.push_back(Graph(6, {{0, 1}, {1, 2}, {2, 3}, {3, 4}, {4, 5}, {5, 0}}));
  pool.push_back(Graph(4, {{0, 1}, {0, 2}, {0, 3}, {1, 2}, {1, 3}}));
  pool.push_back(Graph(3, {{0, 1}, {0, 2}, {1, 2}}));
  pool.push_back(Graph(4, {{0, 1}, {0, 2}, {0, 3}}));
  for (int i = 0; i < 100; ++i)
    pool.push_back(testing::erdos_renyi(4 + i % 11, 0.2 + 0.06 * (i % 9),
                                        kSeed + 409 * static_cast<std::uint64_t>(i)));

  int exceptions = 0, failing = 0;
  for (const auto& g : pool) {
    if (!check_simplex_disjointness(g).ok) {
      ++failing;
      if (is_alpha_excellent(g)) ++exceptions;
    }
  }
  report(4, exceptions == 0,
         "simplex-overlap implies not excellent on " + std::to_string(pool.size()) +
             " graphs (" + std::to_string(failing) + " overlapping): " +
             std::to_string(exceptions) + " exceptions");
}

// 5. the two pinned fixtures, exact integers
void criterion_5() {
  auto c6 = classify(Graph(6, {{0, 1}, {1, 2}, {2, 3}, {3, 4}, {4, 5}, {5, 0}}));
  bool c6_ok = c6.alpha == 3 && c6.i_dom == 2 && c6.alpha_c == 3 && !c6.well_covered &&
               c6.excellent;
  auto dia = classify(Graph(4, {{0, 1}, {0, 2}, {0, 3}, {1, 2}, {1, 3}}));
  bool dia_ok = dia.alpha == 2 && dia.alpha_c == 1 && !dia.excellent;
  report(5, c6_ok && dia_ok,
         std::string("fixtures: C6 ") + (c6_ok ? "exact" : "WRONG") + ", diamond " +
             (dia_ok ? "exact" : "WRONG"));
}

// 6. decompose replays edge-identically, red is a cover, alpha falls by one
// per peel
void criterion_6(const Corpus& corpus, const std::vector<char>& excellent_flags) {
  int checked = 0, violations = 0;
  for (std::size_t i = 0; i < corpus.two_trees.size(); ++i) {
    if (!excellent_flags[i]) continue;
    const Graph& g = corpus.two_trees[i];
    ++checked;
    auto cert = decompose(g);
    if (!cert) {
      ++violations;
      continue;
    }
    auto replayed = replay_certificate(*cert);
    if (!(replayed.graph == g)) ++violations;

    Cover red{2, {}};
    for (const auto& tri : replayed.red) red.parts.push_back({tri.v[0], tri.v[1], tri.v[2]});
    if (!validate_cover(g, red).ok) ++violations;

    if (g.order() <= 15) {
      std::set<int> vertices(cert->base.v.begin(), cert->base.v.end());
      int expected = 1;
      if (alpha_bruteforce(induced_on(g, vertices)).alpha != expected) ++violations;
      for (const auto& step : cert->steps) {
        if (const auto* o1 = std::get_if<StepO1>(&step))
          vertices.insert(o1->u.begin(), o1->u.end());
        else {
          const auto& o2 = std::get<StepO2>(step);
          vertices.insert(o2.u.begin(), o2.u.end());
        }
        ++expected;
        if (alpha_bruteforce(induced_on(g, vertices)).alpha != expected) ++violations;
      }
    }
  }
  report(6, violations == 0,
         "certificate round trip on " + std::to_string(checked) + " excellent 2-trees: " +
             std::to_string(violations) + " violations");
}

// 7. trees: excellence <=> perfect matching (= perfect 2-cover)
void criterion_7() {
  int violations = 0;
  for (int i = 0; i < 500; ++i) {
    int n = 2 + i % 9;
    Graph t = testing::random_labeled_tree(n, kSeed + 733 * static_cast<std::uint64_t>(i));
    bool excellent = is_alpha_excellent(t);
    bool matched = testing::brute_has_perfect_matching(t);
    bool covered = find_perfect_cover(t, 1).has_value();
    if (excellent != matched || matched != covered) ++violations;
  }
  report(7, violations == 0,
         "500 labeled trees of order <= 10: " + std::to_string(violations) + " violations");
}

// 8. every 2-tree embeds into an excellent one of at most triple order
void criterion_8() {
  int violations = 0;
  for (int i = 0; i < 100; ++i) {
    int n = 3 + i % 28;  // orders 3..30
    Graph g = random_ktree(n, 2, kSeed + 547 * static_cast<std::uint64_t>(i));
    auto emb = embed_excellent(g);
    if (emb.graph.order() > 3 * n) ++violations;
    if (!recognize_ktree(emb.graph, 2)) ++violations;
    auto cover = find_perfect_cover(emb.graph, 2);
    if (!cover || !validate_cover(emb.graph, *cover).ok) ++violations;
    for (int u = 0; u < n && violations == 0; ++u)
      for (int v = u + 1; v < n; ++v)
        if (g.has_edge(u, v) !=
            emb.graph.has_edge(emb.vertex_map[static_cast<std::size_t>(u)],
                               emb.vertex_map[static_cast<std::size_t>(v)])) {
          ++violations;
          break;
        }
  }
  report(8, violations == 0,
         "100 embeddings of 2-trees up to order 30: " + std::to_string(violations) +
             " violations");
}

// 9. the chordal fast path agrees with the oracle and scales
void criterion_9(const Corpus& corpus, const std::vector<char>& excellent_flags) {
  int violations = 0, checked = 0;
  for (std::size_t i = 0; i < corpus.two_trees.size(); ++i) {
    const Graph& g = corpus.two_trees[i];
    if (g.order() > 20) continue;
    ++checked;
    if (fast_excellent_2tree(g) != (excellent_flags[i] != 0)) ++violations;
  }
  for (int i = 0; i < 100; ++i) {  // orders 16..20 are not in the corpus
    Graph g = random_ktree(16 + i % 5, 2, kSeed + 263 * static_cast<std::uint64_t>(i));
    ++checked;
    if (fast_excellent_2tree(g) != classify(g).excellent) ++violations;
  }

  Graph big = random_ktree(10000, 2, kSeed + 1);
  auto start = std::chrono::steady_clock::now();
  bool verdict = fast_excellent_2tree(big);
  double elapsed = seconds_since(start);
  bool fast_enough = elapsed < 5.0;

  report(9, violations == 0 && fast_enough,
         "fast path on " + std::to_string(checked) + " 2-trees: " + std::to_string(violations) +
             " mismatches; n = 10000 verdict (" + (verdict ? "yes" : "no") + ") in " +
             std::to_string(elapsed) + " s");
}

// 10. the k = 3 exploration harness
void criterion_10() {
  ExploreOptions options;
  options.workers = 0;  // all hardware threads
  auto result = explore_converse(3, 16, 10000, kSeed + 2, options);
  for (const auto& finding : result.findings)
    std::printf("      flagged finding: excellent 3-tree without perfect 4-cover, n=%d "
                "fp=%016llx\n",
                finding.n, static_cast<unsigned long long>(finding.fingerprint));
  bool ok = !result.aborted;
  report(10, ok,
         "explorer k=3, 10000 instances: " + std::to_string(result.records.size()) +
             " records, " + std::to_string(result.findings.size()) + " findings, " +
             std::to_string(result.skipped_budget) + " budget skips" +
             (result.aborted ? ", ABORTED on contradiction" : ""));
}

}  // namespace

int main() {
  auto start = std::chrono::steady_clock::now();

  Corpus corpus = build_corpus();
  std::vector<char> excellent_flags;
  criterion_1(corpus, excellent_flags);

  std::vector<std::pair<int, Graph>> ktrees;
  criterion_2(ktrees);
  criterion_3(ktrees);
  criterion_4(corpus, ktrees);
  criterion_5();
  criterion_6(corpus, excellent_flags);
  criterion_7();
  criterion_8();
  criterion_9(corpus, excellent_flags);
  criterion_10();

  std::printf("%d/10 criteria passed in %.1f s\n", 10 - failures, seconds_since(start));
  return failures == 0 ? 0 : 1;
}
