#include <doctest.h>

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>

#include "axt/construct.hpp"
#include "axt/family_e.hpp"
#include "axt/io.hpp"

// Exit-status and output contract of the installed binary; the path comes
// from the build system.
#ifndef AXT_CLI_PATH
#error "AXT_CLI_PATH must point at the axt executable"
#endif

namespace {

namespace fs = std::filesystem;

struct RunResult {
  int status = -1;
  std::string out;
};

RunResult run(const std::string& args, const std::string& env = "") {
  static int counter = 0;
  fs::path tmp = fs::temp_directory_path() / ("axt_cli_out_" + std::to_string(counter++));
  std::string cmd = env + " " + std::string(AXT_CLI_PATH) + " " + args + " > " +
                    tmp.string() + " 2>&1";
  int raw = std::system(cmd.c_str());
  RunResult res;
  res.status = WEXITSTATUS(raw);
  std::ifstream in(tmp);
  std::stringstream ss;
  ss << in.rdbuf();
  res.out = ss.str();
  fs::remove(tmp);
  return res;
}

fs::path write_file(const std::string& name, const std::string& content) {
  fs::path p = fs::temp_directory_path() / name;
  std::ofstream out(p);
  out << content;
  return p;
}

}  // namespace

TEST_CASE("oracle subcommand reports and signals the verdict") {
  auto c6 = write_file("axt_c6.g", "6\n0 1\n1 2\n2 3\n3 4\n4 5\n5 0\n");
  auto res = run("oracle " + c6.string());
  CHECK(res.status == 0);
  CHECK(res.out.find("alpha 3") != std::string::npos);
  CHECK(res.out.find("i 2") != std::string::npos);
  CHECK(res.out.find("alpha_c 3") != std::string::npos);
  CHECK(res.out.find("well_covered false") != std::string::npos);
  CHECK(res.out.find("excellent true") != std::string::npos);

  auto dia = write_file("axt_dia.g", "4\n0 1\n0 2\n0 3\n1 2\n1 3\n");
  auto neg = run("oracle " + dia.string());
  CHECK(neg.status == 1);
  CHECK(neg.out.find("excellent false") != std::string::npos);
}

TEST_CASE("cover subcommand") {
  auto dia = write_file("axt_dia2.g", "4\n0 1\n0 2\n0 3\n1 2\n1 3\n");
  auto none = run("cover " + dia.string() + " --k 2");
  CHECK(none.status == 1);
  CHECK(none.out == "none\n");

  auto k3 = write_file("axt_k3.g", "3\n0 1\n0 2\n1 2\n");
  auto found = run("cover " + k3.string() + " --k 2");
  CHECK(found.status == 0);
  CHECK(found.out == "part 0 1 2\n");

  auto c4 = write_file("axt_c4.g", "4\n0 1\n1 2\n2 3\n3 0\n");
  auto counted = run("cover " + c4.string() + " --k 1 --count --limit 3");
  CHECK(counted.status == 0);
  CHECK(counted.out == "covers (limit 3): 2\n");

  // k from the file header
  auto with_k = write_file("axt_k3h.g", "3 2\n0 1\n0 2\n1 2\n");
  CHECK(run("cover " + with_k.string()).status == 0);
}

TEST_CASE("decompose subcommand emits a replayable certificate") {
  auto k3 = write_file("axt_k3b.g", "3\n0 1\n0 2\n1 2\n");
  auto res = run("decompose " + k3.string());
  CHECK(res.status == 0);
  CHECK(res.out == "base 0 1 2\n");

  auto dia = write_file("axt_dia3.g", "4\n0 1\n0 2\n0 3\n1 2\n1 3\n");
  auto neg = run("decompose " + dia.string());
  CHECK(neg.status == 1);
  CHECK(neg.out == "not alpha-excellent\n");

  auto c6 = write_file("axt_c6b.g", "6\n0 1\n1 2\n2 3\n3 4\n4 5\n5 0\n");
  CHECK(run("decompose " + c6.string()).status == 1);
}

TEST_CASE("check subcommand") {
  auto c6 = write_file("axt_c6c.g", "6\n0 1\n1 2\n2 3\n3 4\n4 5\n5 0\n");
  auto not2t = run("check " + c6.string());
  CHECK(not2t.status == 1);
  CHECK(not2t.out == "not a 2-tree\n");

  auto six = write_file("axt_six.g", "6\n0 1\n0 2\n1 2\n0 3\n1 3\n1 4\n3 4\n3 5\n4 5\n");
  auto yes = run("check " + six.string() + " --certify");
  CHECK(yes.status == 0);
  CHECK(yes.out.find("alpha-excellent: yes") != std::string::npos);
  CHECK(yes.out.find("part") != std::string::npos);
  CHECK(yes.out.find("base") != std::string::npos);
}

TEST_CASE("malformed input exits 2 with a line number") {
  auto bad = write_file("axt_bad.g", "3\n0 nope\n");
  auto res = run("check " + bad.string());
  CHECK(res.status == 2);
  CHECK(res.out.find("line 2") != std::string::npos);

  CHECK(run("oracle /nonexistent/zzz.g").status == 2);
  CHECK(run("bogus-subcommand").status == 2);
}

TEST_CASE("budget refusals exit 3") {
  auto c6 = write_file("axt_c6d.g", "6\n0 1\n1 2\n2 3\n3 4\n4 5\n5 0\n");
  auto res = run("oracle " + c6.string(), "AXT_ORACLE_BUDGET=3");
  CHECK(res.status == 3);
  CHECK(res.out.find("refused") != std::string::npos);
}

TEST_CASE("gen is deterministic and recognizable") {
  auto a = run("gen --n 12 --k 2 --seed 5");
  auto b = run("gen --n 12 --k 2 --seed 5");
  CHECK(a.status == 0);
  CHECK(a.out == b.out);
  CHECK(a.out.substr(0, 5) == "12 2\n");

  auto ex = run("gen --n 5 --exhaustive");
  CHECK(ex.status == 0);
  CHECK(ex.out.find("# 2 pairwise non-isomorphic 2-trees of order 5") != std::string::npos);
}

TEST_CASE("generated graphs feed back into the tool") {
  auto gen = run("gen --n 9 --k 2 --seed 21");
  auto g9 = write_file("axt_g9.g", gen.out);
  auto check = run("check " + g9.string());
  CHECK(check.out.find("2-tree of order 9") != std::string::npos);
}

TEST_CASE("decompose output replays to the input graph") {
  // generate, decompose through the binary, replay through the library
  auto gen = run("gen --n 15 --k 2 --seed 77");
  auto g15 = write_file("axt_g15.g", gen.out);
  {
    std::istringstream in(gen.out);
    auto parsed = axt::read_graph_file(in);
    auto emb = axt::embed_excellent(parsed.graph);  // guaranteed decomposable
    std::ostringstream out;
    axt::write_graph_file(out, emb.graph, 2);
    write_file("axt_g15e.g", out.str());
  }
  auto res = run("decompose " + (fs::temp_directory_path() / "axt_g15e.g").string());
  REQUIRE(res.status == 0);
  std::istringstream cert_in(res.out);
  auto cert = axt::read_certificate_file(cert_in);
  auto replayed = axt::replay_certificate(cert);

  std::ifstream gin(fs::temp_directory_path() / "axt_g15e.g");
  auto original = axt::read_graph_file(gin);
  CHECK(replayed.graph == original.graph);
}

TEST_CASE("explore streams records and a summary") {
  auto res = run("explore --k 2 --nmax 9 --budget 25 --seed 3 --jobs 1");
  CHECK(res.status == 0);
  CHECK(res.out.find("record fp=") != std::string::npos);
  CHECK(res.out.find("explored 25 instances") != std::string::npos);
  CHECK(res.out.find("0 findings") != std::string::npos);

  // resume from the first run's output skips everything already seen
  auto log = write_file("axt_explore.log", res.out);
  auto resumed = run("explore --k 2 --nmax 9 --budget 25 --seed 3 --jobs 1 --resume-from " +
                     log.string());
  CHECK(resumed.status == 0);
  CHECK(resumed.out.find("25 skipped (resume)") != std::string::npos);

  auto garbage = write_file("axt_explore_bad.log", "record fp=zzzz k=2\n");
  auto broken = run("explore --k 2 --nmax 9 --budget 5 --seed 3 --resume-from " +
                    garbage.string());
  CHECK(broken.status == 2);
}

TEST_CASE("convert emits DOT") {
  auto six = write_file("axt_six2.g", "6\n0 1\n0 2\n1 2\n0 3\n1 3\n1 4\n3 4\n3 5\n4 5\n");
  auto res = run("convert " + six.string() + " --dot --labels");
  CHECK(res.status == 0);
  CHECK(res.out.find("graph axt {") != std::string::npos);
  CHECK(res.out.find("// red triangle") != std::string::npos);

  auto plain = run("convert " + six.string() + " --dot");
  CHECK(plain.status == 0);
  CHECK(plain.out.find("[color=") == std::string::npos);

  CHECK(run("convert " + six.string()).status == 2);  // no format chosen
}

TEST_CASE("embed prints the supergraph with its vertex map") {
  auto dia = write_file("axt_dia4.g", "4\n0 1\n0 2\n0 3\n1 2\n1 3\n");
  auto res = run("embed " + dia.string());
  CHECK(res.status == 0);
  CHECK(res.out.find("# map 0 -> 0") != std::string::npos);
  CHECK(res.out.find("6 2\n") != std::string::npos);
}
