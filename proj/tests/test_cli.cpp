#include <sys/wait.h>

#include <cstdlib>
#include <filesystem>
#include <string>

#include "doctest.h"
#include "json.hpp"
#include "tcl/coloring.hpp"
#include "tcl/constructions.hpp"
#include "tcl/io.hpp"
#include "tcl/walks.hpp"

// Drives the installed binary end to end through a shell, checking exit codes
// (0 ok, 1 property fails, 2 usage, 3 capability) and byte-stable output.

namespace {

namespace fs = std::filesystem;
using nlohmann::json;

struct RunResult {
  int code = -1;
  std::string out, err;
};

fs::path scratch_root() {
  static fs::path root = [] {
    fs::path dir = fs::temp_directory_path() / "tcl_cli_tests";
    fs::remove_all(dir);
    fs::create_directories(dir);
    return dir;
  }();
  return root;
}

// args is the raw tail of the command line; env is an optional VAR=value
// prefix interpreted by the shell.
RunResult run_cli(const std::string& args, const std::string& env = "") {
  static int counter = 0;
  fs::path out_path = scratch_root() / ("out" + std::to_string(counter) + ".txt");
  fs::path err_path = scratch_root() / ("err" + std::to_string(counter) + ".txt");
  ++counter;
  std::string cmd = env + (env.empty() ? "" : " ") + TCLAB_BIN + " " + args + " > " +
                    out_path.string() + " 2> " + err_path.string();
  int raw = std::system(cmd.c_str());
  RunResult res;
  res.code = WEXITSTATUS(raw);
  res.out = tcl::read_text_file(out_path.string());
  res.err = tcl::read_text_file(err_path.string());
  return res;
}

std::string golden(const std::string& name) {
  return tcl::read_text_file(std::string(TCL_GOLDEN_DIR) + "/" + name);
}

std::string write_graph(const tcl::Hypergraph& h, const std::string& name) {
  fs::path path = scratch_root() / name;
  tcl::write_text_file(path.string(), tcl::emit_hypergraph(h));
  return path.string();
}

}  // namespace

TEST_SUITE("cli") {

TEST_CASE("construction generator output matches the golden bytes") {
  RunResult res = run_cli("gen-construction --r 3 --p 3 --n 9");
  CHECK(res.code == 0);
  CHECK(res.out == golden("construction_3_3_9.txt"));
  CHECK(res.out == tcl::emit_hypergraph(tcl::gen_construction({3, 3, 9})));

  RunResult js = run_cli("gen-construction --r 3 --p 3 --n 9 --json");
  CHECK(js.code == 0);
  CHECK(json::parse(js.out)["edge_count"] == 27);
}

TEST_CASE("json reports match the golden bytes") {
  std::string c339 = write_graph(tcl::gen_construction({3, 3, 9}), "c339.txt");

  RunResult cd = run_cli("min-codegree --json " + c339);
  CHECK(cd.code == 0);
  CHECK(cd.out == golden("min_codegree_3_3_9.json"));

  RunResult hf = run_cli("check-homfree --k 1 --json " + c339);
  CHECK(hf.code == 0);
  CHECK(hf.out == golden("check_homfree_3_3_9.json"));

  RunResult young = run_cli("available-colors --r 6 --k 2 --json");
  CHECK(young.code == 0);
  CHECK(young.out == golden("available_colors_6_2_young.json"));

  RunResult full = run_cli("available-colors --r 4 --k 1 --full --json");
  CHECK(full.code == 0);
  CHECK(full.out == golden("available_colors_4_1_full.json"));
}

TEST_CASE("subcommands compose through a pipe") {
  fs::path out_path = scratch_root() / "pipe_out.txt";
  std::string cmd = std::string(TCLAB_BIN) + " gen-construction --r 3 --p 3 --n 9 | " +
                    TCLAB_BIN + " check-homfree --k 1 > " + out_path.string();
  int raw = std::system(cmd.c_str());
  CHECK(WEXITSTATUS(raw) == 0);
  CHECK(tcl::read_text_file(out_path.string()) == "hom-free: yes\n");
}

TEST_CASE("hom-freeness failure exits one and writes the witness walk") {
  std::string k4 = write_graph(tcl::tight_cycle(3, 4), "k4.txt");
  fs::path witness = scratch_root() / "witness.txt";

  RunResult res = run_cli("check-homfree --k 1 --witness " + witness.string() + " " + k4);
  CHECK(res.code == 1);
  CHECK(res.out == "hom-free: no\nwitness: 1 2 3 4\n");
  CHECK(tcl::read_text_file(witness.string()) == "1 2 3 4\n");

  RunResult js = run_cli("check-homfree --k 1 --json --witness " + witness.string() + " " + k4);
  CHECK(js.code == 1);
  json j = json::parse(js.out);
  CHECK(j["homfree"] == false);
  CHECK(j["witness_path"] == witness.string());
}

TEST_CASE("cycle containment exit codes distinguish yes from no") {
  std::string k4 = write_graph(tcl::tight_cycle(3, 4), "k4_cycle.txt");
  CHECK(run_cli("contains-cycle --ell 4 " + k4).code == 0);
  CHECK(run_cli("contains-cycle --ell 5 " + k4).code == 1);
  RunResult js = run_cli("contains-cycle --ell 6 --json " + k4);
  CHECK(js.code == 0);
  CHECK(json::parse(js.out)["contains"] == true);
}

TEST_CASE("coloring search and verification round-trip through files") {
  std::string c339 = write_graph(tcl::gen_construction({3, 3, 9}), "c339_color.txt");
  fs::path col = scratch_root() / "coloring.txt";

  RunResult found = run_cli("find-coloring --k 1 --out " + col.string() + " " + c339);
  CHECK(found.code == 0);
  CHECK(run_cli("verify-coloring " + c339 + " " + col.string()).code == 0);

  // Knock one edge's coset to a different id: equivariance must now fail.
  tcl::AccordantColoring c = tcl::parse_coloring(tcl::read_text_file(col.string()));
  auto& value = c.assignment.begin()->second;
  value.coset = (value.coset + 1) % c.system->colors[value.color].coset_count;
  fs::path bad = scratch_root() / "coloring_bad.txt";
  tcl::write_text_file(bad.string(), tcl::emit_coloring(c));
  RunResult broken = run_cli("verify-coloring " + c339 + " " + bad.string());
  CHECK(broken.code == 1);
  CHECK(broken.out.find("accordant: no") == 0);
  CHECK(broken.out.find("violation") != std::string::npos);

  std::string k4 = write_graph(tcl::tight_cycle(3, 4), "k4_color.txt");
  RunResult unsat = run_cli("find-coloring --k 1 --json " + k4);
  CHECK(unsat.code == 1);
  CHECK(json::parse(unsat.out)["sat"] == false);
}

TEST_CASE("extremal reports both routes and certifies exact runs") {
  RunResult bound = run_cli("extremal --n 12 --r 3 --k 1 --json");
  CHECK(bound.code == 0);
  json jb = json::parse(bound.out);
  CHECK(jb["best_codegree"] == 3);
  CHECK(jb["exact"] == false);
  CHECK(jb["p"] == 3);
  CHECK_FALSE(jb.contains("nodes_explored"));

  fs::path cert = scratch_root() / "cert";
  RunResult exact =
      run_cli("extremal --n 5 --r 3 --k 1 --exact --certify " + cert.string() + " --json");
  CHECK(exact.code == 0);
  json je = json::parse(exact.out);
  CHECK(je["best_codegree"] == 1);
  CHECK(je["exact"] == true);
  CHECK(je["certificate"] == cert.string());
  CHECK(je["nodes_explored"].get<long long>() > 0);

  RunResult verify = run_cli("verify-cert --json " + cert.string());
  CHECK(verify.code == 0);
  CHECK(json::parse(verify.out)["ok"] == true);

  tcl::write_text_file((cert / "meta.txt").string(), "5 3 1 4\nhomfree-period\n");
  RunResult broken = run_cli("verify-cert --json " + cert.string());
  CHECK(broken.code == 1);
  json jr = json::parse(broken.out);
  CHECK(jr["ok"] == false);
  CHECK_FALSE(jr["reason"].get<std::string>().empty());
}

TEST_CASE("usage problems exit two") {
  CHECK(run_cli("no-such-subcommand").code == 2);
  CHECK(run_cli("").code == 2);  // a subcommand is required
  std::string c339 = write_graph(tcl::gen_construction({3, 3, 9}), "c339_usage.txt");
  CHECK(run_cli("check-homfree " + c339).code == 2);  // --k is required
  CHECK(run_cli("min-codegree " + scratch_root().string() + "/does_not_exist.txt").code == 2);
  CHECK(run_cli("gen-construction --r 3 --p 1 --n 9").code == 2);
  CHECK(run_cli("extremal --n 6 --r 3 --k 3").code == 2);  // residue is zero mod r

  fs::path bad = scratch_root() / "malformed.txt";
  tcl::write_text_file(bad.string(), "3 5 2\n1 2 3\n");
  CHECK(run_cli("min-codegree " + bad.string()).code == 2);

  CHECK(run_cli("--help").code == 0);
}

TEST_CASE("capability limits exit three") {
  CHECK(run_cli("available-colors --r 9 --k 1").code == 3);
  CHECK(run_cli("extremal --n 8 --r 3 --k 1 --exact").code == 3);
  CHECK(run_cli("extremal --n 5 --r 5 --k 1 --exact").code == 3);

  std::string c339 = write_graph(tcl::gen_construction({3, 3, 9}), "c339_cap.txt");
  CHECK(run_cli("available-colors --r 6 --k 2", "TCL_MAX_R=4").code == 3);
  CHECK(run_cli("min-codegree " + c339, "TCL_MAX_N=8").code == 3);

  // The same environment knob lifts the exhaustive-search cap.
  RunResult lifted = run_cli("extremal --n 5 --r 5 --k 1 --exact --json", "TCL_MAX_N=5");
  CHECK(lifted.code == 0);
  CHECK(json::parse(lifted.out)["best_codegree"] == 1);
}

TEST_CASE("built-in differential suites pass") {
  RunResult res = run_cli("selfcheck --json");
  CHECK(res.code == 0);
  json j = json::parse(res.out);
  CHECK(j["ok"] == true);
  CHECK(j["availability"]["ok"] == true);
  CHECK(j["walks_dual"]["ok"] == true);
  CHECK(j["claim_sweep"]["ok"] == true);
}

}  // TEST_SUITE
