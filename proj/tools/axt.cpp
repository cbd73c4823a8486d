#include <cstdlib>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <unordered_set>

#include <CLI11.hpp>

#include "axt/construct.hpp"
#include "axt/cover.hpp"
#include "axt/errors.hpp"
#include "axt/family_e.hpp"
#include "axt/graph.hpp"
#include "axt/io.hpp"
#include "axt/ktree.hpp"
#include "axt/oracle.hpp"

namespace {

constexpr int kExitOk = 0;
constexpr int kExitNegative = 1;   // well-formed input, negative verdict
constexpr int kExitInput = 2;      // malformed file or arguments
constexpr int kExitBudget = 3;     // exact-search budget refusal

axt::GraphFile load_graph(const std::string& path) {
  if (path == "-") return axt::read_graph_file(std::cin);
  std::ifstream in(path);
  if (!in) throw axt::input_error("cannot open '" + path + "'");
  return axt::read_graph_file(in);
}

int oracle_budget_default() {
  if (const char* env = std::getenv("AXT_ORACLE_BUDGET")) {
    try {
      return std::stoi(env);
    } catch (...) {
      throw axt::input_error("AXT_ORACLE_BUDGET must be an integer");
    }
  }
  return axt::OracleLimits{}.max_order;
}

void print_cover(const axt::Cover& cover) {
  for (const auto& part : cover.parts) {
    std::cout << "part";
    for (int v : part) std::cout << ' ' << v;
    std::cout << '\n';
  }
}

int cmd_check(const std::string& path, bool certify) {
  auto g = load_graph(path).graph;
  auto order = axt::recognize_ktree(g, 2);
  if (!order) {
    std::cout << "not a 2-tree\n";
    return kExitNegative;
  }
  bool excellent = axt::fast_excellent_2tree(g);
  std::cout << "2-tree of order " << g.order() << '\n';
  std::cout << "alpha-excellent: " << (excellent ? "yes" : "no") << '\n';
  if (certify && excellent) {
    if (g.order() < 3) {
      std::cout << "order below 3: no certificate applies\n";
    } else {
      auto cover = axt::find_perfect_cover(g, 2);
      auto cert = axt::decompose(g);
      if (cover && cert) {
        print_cover(*cover);
        axt::write_certificate_file(std::cout, *cert);
      }
    }
  }
  return excellent ? kExitOk : kExitNegative;
}

int cmd_cover(const std::string& path, int k_flag, bool do_count, int limit) {
  auto gf = load_graph(path);
  int k = k_flag > 0 ? k_flag : gf.k.value_or(0);
  if (k < 1) throw axt::input_error("no k given (use --k or a 'n k' header)");
  if (do_count) {
    int c = axt::count_perfect_covers(gf.graph, k, limit);
    std::cout << "covers (limit " << limit << "): " << c << '\n';
    return c > 0 ? kExitOk : kExitNegative;
  }
  auto cover = axt::find_perfect_cover(gf.graph, k);
  if (!cover) {
    std::cout << "none\n";
    return kExitNegative;
  }
  print_cover(*cover);
  return kExitOk;
}

int cmd_decompose(const std::string& path) {
  auto g = load_graph(path).graph;
  if (g.order() < 3 || !axt::recognize_ktree(g, 2)) {
    std::cout << "not a 2-tree of order >= 3\n";
    return kExitNegative;
  }
  auto cert = axt::decompose(g);
  if (!cert) {
    std::cout << "not alpha-excellent\n";
    return kExitNegative;
  }
  axt::write_certificate_file(std::cout, *cert);
  return kExitOk;
}

int cmd_embed(const std::string& path) {
  auto g = load_graph(path).graph;
  if (!axt::recognize_ktree(g, 2)) {
    std::cout << "not a 2-tree\n";
    return kExitNegative;
  }
  auto embedding = axt::embed_excellent(g);
  std::cout << "# alpha-excellent supergraph of a 2-tree of order " << g.order() << '\n';
  for (int v = 0; v < g.order(); ++v)
    std::cout << "# map " << v << " -> " << embedding.vertex_map[static_cast<std::size_t>(v)]
              << '\n';
  axt::write_graph_file(std::cout, embedding.graph, 2);
  return kExitOk;
}

int cmd_gen(int n, int k, std::uint64_t seed, bool exhaustive, int cap) {
  if (exhaustive) {
    auto graphs = axt::enumerate_2trees(n, cap);
    std::cout << "# " << graphs.size() << " pairwise non-isomorphic 2-trees of order " << n
              << '\n';
    for (std::size_t i = 0; i < graphs.size(); ++i) {
      std::cout << "# graph " << i << '\n';
      axt::write_graph_file(std::cout, graphs[i], 2);
    }
    return kExitOk;
  }
  axt::write_graph_file(std::cout, axt::random_ktree(n, k, seed), k);
  return kExitOk;
}

int cmd_oracle(const std::string& path, int budget) {
  auto g = load_graph(path).graph;
  auto report = axt::classify(g, axt::OracleLimits{budget});
  std::cout << "alpha " << report.alpha << '\n';
  std::cout << "i " << report.i_dom << '\n';
  std::cout << "alpha_c " << report.alpha_c << '\n';
  std::cout << "well_covered " << (report.well_covered ? "true" : "false") << '\n';
  std::cout << "excellent " << (report.excellent ? "true" : "false") << '\n';
  for (int v = 0; v < g.order(); ++v)
    std::cout << "vertex " << v << " max "
              << report.per_vertex_max[static_cast<std::size_t>(v)] << '\n';
  return report.excellent ? kExitOk : kExitNegative;
}

std::unordered_set<std::uint64_t> load_fingerprints(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw axt::input_error("cannot open '" + path + "'");
  std::unordered_set<std::uint64_t> out;
  std::string line;
  int no = 0;
  while (std::getline(in, line)) {
    ++no;
    auto pos = line.find("fp=");
    if (pos == std::string::npos) continue;
    try {
      out.insert(std::stoull(line.substr(pos + 3), nullptr, 16));
    } catch (...) {
      throw axt::parse_error(no, "unreadable fingerprint in '" + path + "'");
    }
  }
  return out;
}

void print_record(const axt::ExplorationRecord& rec) {
  std::ostringstream os;
  os << std::hex;
  os.width(16);
  os.fill('0');
  os << rec.fingerprint;
  std::cout << (rec.agrees ? "record" : "finding") << " fp=" << os.str() << " k=" << rec.k
            << " n=" << rec.n << " excellent=" << (rec.excellent ? 1 : 0)
            << " has_cover=" << (rec.has_cover ? 1 : 0) << " agrees=" << (rec.agrees ? 1 : 0)
            << '\n';
}

int cmd_explore(int k, int n_max, int budget_instances, std::uint64_t seed, int jobs,
                const std::string& resume_path, int oracle_budget) {
  std::unordered_set<std::uint64_t> seen;
  axt::ExploreOptions options;
  options.workers = jobs;
  options.oracle_budget = oracle_budget;
  options.on_record = print_record;
  if (!resume_path.empty()) {
    seen = load_fingerprints(resume_path);
    options.skip_fingerprints = &seen;
  }
  auto result = axt::explore_converse(k, n_max, budget_instances, seed, options);
  std::cerr << "explored " << budget_instances << " instances: " << result.records.size()
            << " records, " << result.findings.size() << " findings, " << result.skipped_budget
            << " skipped (budget), " << result.skipped_resume << " skipped (resume)\n";
  if (result.aborted) {
    std::cerr << "contradiction: cover without excellence on fp=" << std::hex
              << result.contradiction.fingerprint << std::dec
              << " n=" << result.contradiction.n << "; run aborted\n";
    return kExitNegative;
  }
  return kExitOk;
}

int cmd_convert(const std::string& path, bool labels) {
  auto g = load_graph(path).graph;
  if (!labels) {
    axt::write_dot(std::cout, g);
    return kExitOk;
  }
  if (g.order() >= 3 && axt::recognize_ktree(g, 2)) {
    if (auto cert = axt::decompose(g)) {
      auto labeled = axt::replay_certificate(*cert);
      axt::write_dot(std::cout, g, &labeled.red, &labeled.blue);
      return kExitOk;
    }
  }
  std::cout << "// labels unavailable: graph is not an alpha-excellent 2-tree\n";
  axt::write_dot(std::cout, g);
  return kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"alpha-excellent 2-trees: recognition, perfect 3-covers, construction "
               "certificates, embeddings and the k >= 3 explorer"};
  app.require_subcommand(1);

  std::string file;
  bool certify = false;
  auto* check = app.add_subcommand("check", "recognize a 2-tree and decide alpha-excellence");
  check->add_option("file", file, "graph file ('-' for stdin)")->required();
  check->add_flag("--certify", certify, "also print the perfect 3-cover and a certificate");

  int k_flag = 0;
  bool do_count = false;
  int count_limit = 2;
  auto* cover = app.add_subcommand("cover", "find a perfect (k+1)-cover");
  cover->add_option("file", file, "graph file ('-' for stdin)")->required();
  cover->add_option("--k", k_flag, "clique parameter k");
  cover->add_flag("--count", do_count, "count covers up to --limit instead of printing one");
  cover->add_option("--limit", count_limit, "cap for --count")->default_val(2);

  auto* decompose = app.add_subcommand("decompose", "emit a construction certificate");
  decompose->add_option("file", file, "graph file ('-' for stdin)")->required();

  auto* embed = app.add_subcommand("embed", "embed a 2-tree into an alpha-excellent 2-tree");
  embed->add_option("file", file, "graph file ('-' for stdin)")->required();

  int gen_n = 0, gen_k = 2, gen_cap = 10;
  std::uint64_t seed = 0;
  bool exhaustive = false;
  auto* gen = app.add_subcommand("gen", "generate k-trees");
  gen->add_option("--n", gen_n, "order")->required();
  gen->add_option("--k", gen_k, "clique parameter k")->default_val(2);
  gen->add_option("--seed", seed, "random seed")->default_val(0);
  gen->add_flag("--exhaustive", exhaustive, "all 2-trees of order n up to isomorphism");
  gen->add_option("--cap", gen_cap, "order cap for --exhaustive")->default_val(10);

  auto* oracle = app.add_subcommand("oracle", "exact classification report");
  oracle->add_option("file", file, "graph file ('-' for stdin)")->required();

  int ex_k = 3, ex_nmax = 16, ex_budget = 1000, jobs = 0;
  std::string resume_path;
  auto* explore = app.add_subcommand("explore", "sample k-trees: excellence vs cover existence");
  explore->add_option("--k", ex_k, "clique parameter k")->required();
  explore->add_option("--nmax", ex_nmax, "largest sampled order")->required();
  explore->add_option("--budget", ex_budget, "number of instances")->required();
  explore->add_option("--seed", seed, "random seed")->default_val(0);
  explore->add_option("--jobs", jobs, "worker threads (0 = hardware)")->default_val(0);
  explore->add_option("--resume-from", resume_path, "skip fingerprints already in this file");

  bool want_dot = false, labels = false;
  auto* convert = app.add_subcommand("convert", "export a graph");
  convert->add_option("file", file, "graph file ('-' for stdin)")->required();
  convert->add_flag("--dot", want_dot, "Graphviz DOT output");
  convert->add_flag("--labels", labels, "annotate red/blue triangles when decomposable");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? kExitOk : kExitInput;
  }

  try {
    int budget = oracle_budget_default();
    if (check->parsed()) return cmd_check(file, certify);
    if (cover->parsed()) return cmd_cover(file, k_flag, do_count, count_limit);
    if (decompose->parsed()) return cmd_decompose(file);
    if (embed->parsed()) return cmd_embed(file);
    if (gen->parsed()) return cmd_gen(gen_n, gen_k, seed, exhaustive, gen_cap);
    if (oracle->parsed()) return cmd_oracle(file, budget);
    if (explore->parsed())
      return cmd_explore(ex_k, ex_nmax, ex_budget, seed, jobs, resume_path, budget);
    if (convert->parsed()) {
      if (!want_dot) throw axt::input_error("convert: choose an output format (--dot)");
      return cmd_convert(file, labels);
    }
  } catch (const axt::budget_error& e) {
    std::cerr << "refused: " << e.what() << '\n';
    return kExitBudget;
  } catch (const axt::input_error& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitInput;
  }
  return kExitInput;
}
