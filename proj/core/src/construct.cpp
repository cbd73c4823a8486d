#include "axt/construct.hpp"

#include <algorithm>
#include <atomic>
#include <map>
#include <mutex>
#include <random>
#include <string>
#include <thread>

#include "axt/cover.hpp"
#include "axt/errors.hpp"
#include "axt/ktree.hpp"
#include "axt/oracle.hpp"

namespace axt {

namespace {

std::uint64_t splitmix64(std::uint64_t& state) {
  std::uint64_t z = (state += 0x9e3779b97f4a7c15ULL);
  z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
  z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
  return z ^ (z >> 31);
}

std::uint64_t mix(std::uint64_t seed, std::uint64_t salt) {
  std::uint64_t s = seed ^ (0x6a09e667f3bcc909ULL + salt * 0x9e3779b97f4a7c15ULL);
  splitmix64(s);
  return splitmix64(s);
}

std::size_t bounded(std::mt19937_64& rng, std::size_t n) { return rng() % n; }

}  // namespace

Graph random_ktree(int n, int k, std::uint64_t seed) {
  if (k < 1) throw input_error("k must be >= 1");
  if (n < k) throw input_error("random_ktree: n must be at least k");
  std::mt19937_64 rng(mix(seed, 0x6b74726565ULL));

  std::vector<Edge> edges;
  for (int i = 0; i < k; ++i)
    for (int j = i + 1; j < k; ++j) edges.emplace_back(i, j);

  // attaching v to clique C creates k new k-cliques, one per (k-1)-subset
  // of C joined with v
  std::vector<std::vector<int>> kcliques;
  if (n > k) {
    std::vector<int> base(static_cast<std::size_t>(k));
    for (int i = 0; i < k; ++i) base[static_cast<std::size_t>(i)] = i;
    kcliques.push_back(base);
  }
  for (int v = k; v < n; ++v) {
    const auto clique = kcliques[bounded(rng, kcliques.size())];
    for (int w : clique) edges.emplace_back(v, w);
    for (int skip = 0; skip < k; ++skip) {
      std::vector<int> next;
      next.reserve(static_cast<std::size_t>(k));
      for (int i = 0; i < k; ++i)
        if (i != skip) next.push_back(clique[static_cast<std::size_t>(i)]);
      next.push_back(v);
      kcliques.push_back(std::move(next));
    }
  }
  return Graph(n, edges);
}

std::vector<Graph> enumerate_2trees(int n, int cap) {
  if (n < 3) throw input_error("enumerate_2trees: n must be >= 3");
  if (n > cap)
    throw input_error("enumerate_2trees: n exceeds cap " + std::to_string(cap));
  int iso_limit = std::max(12, n);

  std::vector<Graph> current{Graph(3, {{0, 1}, {0, 2}, {1, 2}})};
  for (int order = 4; order <= n; ++order) {
    // bucket candidates by a cheap invariant before the isomorphism test
    std::map<std::vector<int>, std::vector<Graph>> classes;
    for (const auto& g : current) {
      for (const auto& [a, b] : g.edge_list()) {
        std::vector<Edge> edges = g.edge_list();
        edges.emplace_back(order - 1, a);
        edges.emplace_back(order - 1, b);
        Graph candidate(order, edges);
        std::vector<int> key(static_cast<std::size_t>(order));
        for (int v = 0; v < order; ++v) key[static_cast<std::size_t>(v)] = candidate.degree(v);
        std::sort(key.begin(), key.end());
        auto& bucket = classes[std::move(key)];
        bool fresh = true;
        for (const auto& seen : bucket)
          if (are_isomorphic(candidate, seen, iso_limit)) {
            fresh = false;
            break;
          }
        if (fresh) bucket.push_back(std::move(candidate));
      }
    }
    std::vector<Graph> next;
    for (auto& [key, bucket] : classes)
      for (auto& g : bucket) next.push_back(std::move(g));
    current = std::move(next);
  }
  return current;
}

std::vector<Graph> generate(const GenSpec& spec) {
  if (spec.mode == GenMode::exhaustive) {
    if (spec.k != 2) throw input_error("exhaustive generation is implemented for k = 2 only");
    return enumerate_2trees(spec.n);
  }
  return {random_ktree(spec.n, spec.k, spec.seed)};
}

Graph corona(const Graph& h) {
  int n = h.order();
  std::vector<Edge> edges = h.edge_list();
  for (int v = 0; v < n; ++v) edges.emplace_back(v, n + v);
  return Graph(2 * n, edges);
}

Embedding embed_excellent(const Graph& g) {
  if (!recognize_ktree(g, 2)) throw input_error("embed_excellent requires a 2-tree");
  int n = g.order();

  std::vector<char> covered(static_cast<std::size_t>(n), 0);
  for (const auto& t : enumerate_triangles(g)) {
    if (covered[static_cast<std::size_t>(t.v[0])] || covered[static_cast<std::size_t>(t.v[1])] ||
        covered[static_cast<std::size_t>(t.v[2])])
      continue;
    for (int v : t.v) covered[static_cast<std::size_t>(v)] = 1;
  }

  std::vector<Edge> edges = g.edge_list();
  int next_id = n;
  for (int v = 0; v < n; ++v) {
    if (covered[static_cast<std::size_t>(v)]) continue;
    int anchor = g.neighbors(v).front();  // lowest neighbor; 2-trees have no isolated vertices
    int x = next_id++;
    int y = next_id++;
    edges.emplace_back(x, v);
    edges.emplace_back(x, anchor);
    edges.emplace_back(y, v);
    edges.emplace_back(y, x);
  }

  Embedding out;
  out.graph = Graph(next_id, edges);
  out.vertex_map.resize(static_cast<std::size_t>(n));
  for (int v = 0; v < n; ++v) out.vertex_map[static_cast<std::size_t>(v)] = v;
  return out;
}

std::uint64_t graph_fingerprint(const Graph& g) {
  int n = g.order();
  // relabel by (degree, sorted neighbor degrees); ties keep original order
  std::vector<std::pair<std::vector<int>, int>> keys(static_cast<std::size_t>(n));
  for (int v = 0; v < n; ++v) {
    std::vector<int> key{g.degree(v)};
    for (int w : g.neighbors(v)) key.push_back(g.degree(w));
    std::sort(key.begin() + 1, key.end());
    keys[static_cast<std::size_t>(v)] = {std::move(key), v};
  }
  std::sort(keys.begin(), keys.end());
  std::vector<int> relabel(static_cast<std::size_t>(n));
  for (int i = 0; i < n; ++i) relabel[static_cast<std::size_t>(keys[static_cast<std::size_t>(i)].second)] = i;

  std::vector<Edge> edges;
  edges.reserve(g.edge_count());
  for (const auto& [u, v] : g.edge_list()) {
    int a = relabel[static_cast<std::size_t>(u)], b = relabel[static_cast<std::size_t>(v)];
    edges.emplace_back(std::min(a, b), std::max(a, b));
  }
  std::sort(edges.begin(), edges.end());

  std::uint64_t h = 0xcbf29ce484222325ULL;
  auto feed = [&h](std::uint64_t x) {
    h ^= x;
    h *= 0x100000001b3ULL;
  };
  feed(static_cast<std::uint64_t>(n));
  for (const auto& [a, b] : edges) {
    feed(static_cast<std::uint64_t>(a) + 1);
    feed(static_cast<std::uint64_t>(b) + 1);
  }
  return h;
}

namespace {

struct InstanceOutcome {
  bool emitted = false;
  bool skipped_budget = false;
  bool skipped_resume = false;
  ExplorationRecord record;
};

InstanceOutcome run_instance(int k, int n_max, std::uint64_t seed, int index,
                             const ExploreOptions& options) {
  InstanceOutcome out;
  std::mt19937_64 rng(mix(seed, static_cast<std::uint64_t>(index) * 2 + 1));
  int span = n_max - k;  // orders k+1 .. n_max
  int n = k + 1 + static_cast<int>(bounded(rng, static_cast<std::size_t>(span)));
  Graph g = random_ktree(n, k, mix(seed, static_cast<std::uint64_t>(index) * 2 + 2));

  ExplorationRecord rec;
  rec.fingerprint = graph_fingerprint(g);
  rec.k = k;
  rec.n = n;
  if (options.skip_fingerprints && options.skip_fingerprints->count(rec.fingerprint)) {
    out.skipped_resume = true;
    return out;
  }
  rec.has_cover = find_perfect_cover(g, k).has_value();
  try {
    rec.excellent = is_alpha_excellent(g, OracleLimits{options.oracle_budget});
  } catch (const budget_error&) {
    out.skipped_budget = true;
    return out;
  }
  rec.agrees = !(rec.excellent && !rec.has_cover);
  out.emitted = true;
  out.record = rec;
  return out;
}

}  // namespace

ExploreResult explore_converse(int k, int n_max, int budget, std::uint64_t seed,
                               const ExploreOptions& options) {
  if (k < 1) throw input_error("k must be >= 1");
  if (n_max < k + 1) throw input_error("n_max must be at least k + 1");
  if (budget < 0) throw input_error("budget must be non-negative");

  int workers = options.workers;
  if (workers <= 0) workers = static_cast<int>(std::thread::hardware_concurrency());
  if (workers < 1) workers = 1;
  workers = std::min<int>(workers, std::max(1, budget));

  ExploreResult result;
  std::vector<InstanceOutcome> outcomes(static_cast<std::size_t>(budget));
  std::vector<char> ready(static_cast<std::size_t>(budget), 0);
  std::atomic<int> next_index{0};
  std::atomic<bool> stop{false};
  std::mutex emit_mutex;
  int next_emit = 0;

  // records stream out in instance order while later instances are still
  // being computed; the stream content never depends on the worker count
  auto flush_ready = [&]() {
    while (next_emit < budget && ready[static_cast<std::size_t>(next_emit)] && !result.aborted) {
      const auto& o = outcomes[static_cast<std::size_t>(next_emit)];
      if (o.skipped_budget) ++result.skipped_budget;
      if (o.skipped_resume) ++result.skipped_resume;
      if (o.emitted) {
        if (o.record.has_cover && !o.record.excellent) {
          result.aborted = true;
          result.contradiction = o.record;
          stop.store(true);
          return;
        }
        result.records.push_back(o.record);
        if (options.on_record) options.on_record(o.record);
        if (!o.record.agrees) result.findings.push_back(o.record);
      }
      ++next_emit;
    }
  };

  auto worker = [&]() {
    while (!stop.load(std::memory_order_relaxed)) {
      int i = next_index.fetch_add(1);
      if (i >= budget) break;
      auto outcome = run_instance(k, n_max, seed, i, options);
      std::lock_guard<std::mutex> lock(emit_mutex);
      outcomes[static_cast<std::size_t>(i)] = std::move(outcome);
      ready[static_cast<std::size_t>(i)] = 1;
      flush_ready();
    }
  };

  if (workers == 1) {
    worker();
  } else {
    std::vector<std::thread> pool;
    pool.reserve(static_cast<std::size_t>(workers));
    for (int t = 0; t < workers; ++t) pool.emplace_back(worker);
    for (auto& t : pool) t.join();
  }
  flush_ready();
  return result;
}

}  // namespace axt
