// tclab: command-line front end for the tight-cycle workbench.
//
// Exit codes: 0 ok, 1 property fails / UNSAT (a witness explains why),
// 2 usage or malformed input, 3 request exceeds a documented capability cap.

#include <cstdlib>
#include <functional>
#include <iostream>
#include <numeric>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"
#include "tcl/certificate.hpp"
#include "tcl/coloring.hpp"
#include "tcl/constructions.hpp"
#include "tcl/errors.hpp"
#include "tcl/extremal.hpp"
#include "tcl/hypergraph.hpp"
#include "tcl/io.hpp"
#include "tcl/perm_group.hpp"
#include "tcl/subgroup_lattice.hpp"
#include "tcl/walks.hpp"

namespace {

using nlohmann::json;

long long env_int(const char* name, long long fallback) {
  const char* raw = std::getenv(name);
  if (!raw || !*raw) return fallback;
  char* end = nullptr;
  long long v = std::strtoll(raw, &end, 10);
  if (end == raw || *end != '\0')
    throw tcl::argument_error(std::string(name) + ": not an integer: " + raw);
  return v;
}

void check_r_cap(int r) {
  long long cap = env_int("TCL_MAX_R", tcl::kMaxUniformity);
  if (r > cap)
    throw tcl::capability_error("r = " + std::to_string(r) + " exceeds TCL_MAX_R = " +
                                std::to_string(cap));
}

void check_n_cap(int n) {
  long long cap = env_int("TCL_MAX_N", 0);  // 0: no global bound
  if (cap > 0 && n > cap)
    throw tcl::capability_error("n = " + std::to_string(n) + " exceeds TCL_MAX_N = " +
                                std::to_string(cap));
}

std::string read_input(const std::string& path) {
  if (path == "-") {
    std::ostringstream ss;
    ss << std::cin.rdbuf();
    return ss.str();
  }
  return tcl::read_text_file(path);
}

tcl::Hypergraph load_graph(const std::string& path) {
  tcl::Hypergraph h = tcl::parse_hypergraph(read_input(path));
  check_r_cap(h.r());
  check_n_cap(h.n());
  return h;
}

void print_json(const json& j) { std::cout << j.dump(2) << "\n"; }

// ---- subcommand bodies ------------------------------------------------

int run_gen_construction(int r, int p, int n, const std::string& out, bool as_json) {
  check_r_cap(r);
  check_n_cap(n);
  tcl::Hypergraph h = tcl::gen_construction({r, p, n});
  std::string text = tcl::emit_hypergraph(h);
  if (!out.empty()) tcl::write_text_file(out, text);
  if (as_json) {
    json j;
    j["edge_count"] = h.edge_count();
    j["n"] = n;
    j["out"] = out.empty() ? "-" : out;
    j["p"] = p;
    j["r"] = r;
    print_json(j);
  } else if (out.empty()) {
    std::cout << text;
  }
  return 0;
}

int run_check_homfree(const std::string& input, long long k, const std::string& witness_path,
                      bool as_json) {
  tcl::Hypergraph h = load_graph(input);
  tcl::HomfreeResult res = tcl::is_homfree(h, k);
  bool walk_exists = tcl::residue_reach_oracle(h, k);
  if (res.homfree != !walk_exists)
    throw tcl::error("hom-freeness routes disagree; refusing to answer");
  if (!res.homfree && !witness_path.empty())
    tcl::write_text_file(witness_path, tcl::emit_walk(res.witness));
  if (as_json) {
    json j;
    j["homfree"] = res.homfree;
    j["k"] = k;
    j["n"] = h.n();
    j["r"] = h.r();
    if (!res.homfree && !witness_path.empty()) j["witness_path"] = witness_path;
    print_json(j);
  } else {
    std::cout << "hom-free: " << (res.homfree ? "yes" : "no") << "\n";
    if (!res.homfree) {
      std::cout << "witness:";
      for (int v : res.witness) std::cout << ' ' << v;
      std::cout << "\n";
    }
  }
  return res.homfree ? 0 : 1;
}

int run_contains_cycle(const std::string& input, long long ell, bool as_json) {
  tcl::Hypergraph h = load_graph(input);
  bool found = tcl::contains_cycle_hom(h, ell);
  if (as_json) {
    json j;
    j["contains"] = found;
    j["ell"] = ell;
    j["n"] = h.n();
    j["r"] = h.r();
    print_json(j);
  } else {
    std::cout << "contains: " << (found ? "yes" : "no") << "\n";
  }
  return found ? 0 : 1;
}

int run_available_colors(int r, int k, bool full, bool as_json) {
  check_r_cap(r);
  auto sys = tcl::enumerate_available_colors(
      r, k, full ? tcl::ColorMode::full : tcl::ColorMode::young_only);
  std::vector<int> unavailable;
  for (int i = 1; 2 * i <= r; ++i)
    if (!tcl::si_available(r, k, i)) unavailable.push_back(i);
  if (as_json) {
    json classes = json::array();
    for (const auto& c : sys->colors) {
      json jc;
      jc["cosets"] = c.coset_count;
      jc["order"] = c.group.order();
      jc["young_i"] = c.young_i;
      classes.push_back(jc);
    }
    json j;
    j["classes"] = classes;
    j["k"] = sys->k;
    j["mode"] = full ? "full" : "young";
    j["r"] = r;
    j["unavailable_young"] = unavailable;
    print_json(j);
  } else {
    std::cout << "r " << r << " k " << sys->k << " mode " << (full ? "full" : "young") << "\n";
    for (size_t idx = 0; idx < sys->colors.size(); ++idx) {
      const auto& c = sys->colors[idx];
      std::cout << "color " << idx << ":";
      if (c.young_i > 0) std::cout << " young i=" << c.young_i << ",";
      std::cout << " order " << c.group.order() << ", cosets " << c.coset_count << "\n";
    }
    for (int i : unavailable) std::cout << "unavailable young i: " << i << "\n";
  }
  return 0;
}

int run_find_coloring(const std::string& input, long long k, bool full, const std::string& out,
                      bool as_json) {
  tcl::Hypergraph h = load_graph(input);
  tcl::FindResult res =
      tcl::find_coloring(h, k, full ? tcl::ColorMode::full : tcl::ColorMode::young_only);
  if (!res.sat) {
    if (as_json) {
      json j;
      j["components"] = res.components;
      j["sat"] = false;
      j["unsat_component"] = res.unsat_component;
      j["values_tried"] = res.values_tried;
      print_json(j);
    } else {
      std::cout << "UNSAT\n";
      for (const auto& e : res.unsat_component) {
        std::cout << "component edge:";
        for (int v : e) std::cout << ' ' << v;
        std::cout << "\n";
      }
    }
    return 1;
  }
  std::string text = tcl::emit_coloring(res.coloring);
  if (!out.empty()) tcl::write_text_file(out, text);
  if (as_json) {
    json j;
    j["colors_used"] = tcl::used_colors(res.coloring);
    j["components"] = res.components;
    j["out"] = out.empty() ? "-" : out;
    j["sat"] = true;
    j["values_tried"] = res.values_tried;
    print_json(j);
  } else if (out.empty()) {
    std::cout << text;
  } else {
    std::cout << "SAT components=" << res.components << " values_tried=" << res.values_tried
              << "\n";
  }
  return 0;
}

int run_verify_coloring(const std::string& graph_path, const std::string& coloring_path,
                        bool as_json) {
  tcl::Hypergraph h = load_graph(graph_path);
  tcl::AccordantColoring c = tcl::parse_coloring(read_input(coloring_path));
  tcl::VerifyResult res = tcl::verify_coloring(h, c);
  if (as_json) {
    json j;
    j["ok"] = res.ok;
    j["violation_count"] = res.violations.size();
    print_json(j);
  } else {
    std::cout << "accordant: " << (res.ok ? "yes" : "no") << "\n";
    for (const auto& viol : res.violations) {
      std::cout << "violation: x =";
      for (int v : viol.x) std::cout << ' ' << v;
      std::cout << " | y =";
      for (int v : viol.y) std::cout << ' ' << v;
      std::cout << "\n";
    }
  }
  return res.ok ? 0 : 1;
}

int run_min_codegree(const std::string& input, bool as_json) {
  tcl::Hypergraph h = load_graph(input);
  int cd = h.min_codegree();
  if (as_json) {
    json j;
    j["min_codegree"] = cd;
    j["n"] = h.n();
    j["r"] = h.r();
    print_json(j);
  } else {
    std::cout << cd << "\n";
  }
  return 0;
}

int run_extremal(int n, int r, long long k, bool exact, const std::string& certify_dir,
                 int threads, bool as_json) {
  check_r_cap(r);
  check_n_cap(n);
  long long kk = ((k % r) + r) % r;
  if (kk == 0) throw tcl::invalid_residue_error("residue k must be nonzero modulo r");
  long long q = r / std::gcd(static_cast<long long>(r), kk);
  int p = 0;
  for (int d = 2; d <= q; ++d)
    if (q % d == 0) {
      p = d;
      break;
    }

  int best = 0;
  long long nodes = 0;
  tcl::Hypergraph witness(r, n);
  if (exact) {
    tcl::SearchOptions opts;
    opts.threads = threads;
    long long lift = env_int("TCL_MAX_N", 0);
    if (lift > 0) opts.max_n_override = static_cast<int>(lift);
    tcl::ExtremalResult res = tcl::exact_search(n, r, tcl::SearchTarget::homfree(kk), opts);
    best = res.best_codegree;
    nodes = res.nodes_explored;
    witness = res.witness;
  } else {
    witness = tcl::gen_construction({r, p, n});
    best = tcl::construction_min_codegree({r, p, n}).exact;
  }

  if (!certify_dir.empty()) {
    tcl::CertifyOutcome cert = tcl::certify_lower_bound(witness, kk, /*try_coloring=*/true);
    if (cert.refused) throw tcl::error("extremal witness failed hom-freeness certification");
    tcl::write_certificate(cert.certificate, certify_dir);
  }

  if (as_json) {
    json j;
    j["best_codegree"] = best;
    if (!certify_dir.empty()) j["certificate"] = certify_dir;
    j["exact"] = exact;
    j["k"] = kk;
    j["n"] = n;
    if (exact) j["nodes_explored"] = nodes;
    j["p"] = p;
    j["r"] = r;
    print_json(j);
  } else {
    std::cout << "best codegree: " << best
              << (exact ? " (exact)" : " (construction bound, p=" + std::to_string(p) + ")")
              << "\n";
    if (exact) std::cout << "nodes explored: " << nodes << "\n";
    if (!certify_dir.empty()) std::cout << "certificate written: " << certify_dir << "\n";
  }
  return 0;
}

int run_verify_cert(const std::string& dir, bool as_json) {
  std::string reason;
  bool ok = tcl::verify_certificate(dir, &reason);
  if (as_json) {
    json j;
    j["dir"] = dir;
    j["ok"] = ok;
    if (!ok) j["reason"] = reason;
    print_json(j);
  } else {
    std::cout << "certificate: " << (ok ? "ok" : "INVALID") << "\n";
    if (!ok) std::cout << "reason: " << reason << "\n";
  }
  return ok ? 0 : 1;
}

int run_selfcheck(bool as_json) {
  // availability: closed form against the sigma search
  long long avail_checked = 0;
  bool avail_ok = true;
  for (int r = 2; r <= 6; ++r)
    for (int k = 1; k < r; ++k)
      for (int i = 1; 2 * i <= r; ++i) {
        ++avail_checked;
        if (tcl::si_available(r, k, i) != tcl::si_available_bruteforce(r, k, i)) avail_ok = false;
      }

  // walks: period route against the residue-reachability oracle
  long long walks_checked = 0;
  bool walks_ok = true;
  auto check_graph = [&](const tcl::Hypergraph& h) {
    for (int k = 1; k < h.r(); ++k) {
      ++walks_checked;
      if (tcl::is_homfree(h, k).homfree != !tcl::residue_reach_oracle(h, k)) walks_ok = false;
    }
  };
  {
    std::vector<std::vector<int>> pool;
    for (int a = 1; a <= 2; ++a)
      for (int b = a + 1; b <= 3; ++b)
        for (int c = b + 1; c <= 4; ++c) pool.push_back({a, b, c});
    for (unsigned mask = 0; mask < (1u << pool.size()); ++mask) {
      tcl::Hypergraph h(3, 4);
      for (size_t i = 0; i < pool.size(); ++i)
        if (mask >> i & 1) h.add_edge(pool[i]);
      check_graph(h);
    }
  }
  {
    std::mt19937 rng(20210807);
    auto random_graph = [&](int r, int n, double density) {
      tcl::Hypergraph h(r, n);
      std::vector<int> pick(r);
      std::uniform_real_distribution<double> coin(0.0, 1.0);
      std::function<void(int, int)> rec = [&](int pos, int lo) {
        if (pos == r) {
          if (coin(rng) < density) h.add_edge(pick);
          return;
        }
        for (int v = lo; v <= n; ++v) {
          pick[pos] = v;
          rec(pos + 1, v + 1);
        }
      };
      rec(0, 1);
      return h;
    };
    for (int trial = 0; trial < 60; ++trial) check_graph(random_graph(3, 6, 0.3));
    for (int trial = 0; trial < 30; ++trial) check_graph(random_graph(4, 6, 0.25));
  }

  // two-block subgroup sweep
  bool claim_ok = true;
  long long claim_groups = 0;
  for (int r = 3; r <= 6; ++r) {
    tcl::TwoBlockSweepReport rep = tcl::check_claim_simaximal(r);
    claim_groups += rep.two_block_groups;
    if (!rep.ok()) claim_ok = false;
  }

  bool all_ok = avail_ok && walks_ok && claim_ok;
  if (as_json) {
    json j;
    j["availability"] = {{"checked", avail_checked}, {"ok", avail_ok}};
    j["claim_sweep"] = {{"ok", claim_ok}, {"two_block_groups", claim_groups}};
    j["ok"] = all_ok;
    j["walks_dual"] = {{"checked", walks_checked}, {"ok", walks_ok}};
    print_json(j);
  } else {
    std::cout << "availability closed form vs search: " << (avail_ok ? "ok" : "FAIL") << " ("
              << avail_checked << " triples)\n";
    std::cout << "walks period route vs reachability oracle: " << (walks_ok ? "ok" : "FAIL")
              << " (" << walks_checked << " instances)\n";
    std::cout << "two-block subgroup sweep r<=6: " << (claim_ok ? "ok" : "FAIL") << " ("
              << claim_groups << " groups)\n";
  }
  return all_ok ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"tight-cycle hypergraph workbench"};
  app.require_subcommand(1);
  std::function<int()> action;

  // gen-construction
  {
    auto* sub = app.add_subcommand("gen-construction",
                                   "emit the modular interval construction as a hypergraph file");
    auto r = std::make_shared<int>(3);
    auto p = std::make_shared<int>(2);
    auto n = std::make_shared<int>(0);
    auto out = std::make_shared<std::string>();
    auto js = std::make_shared<bool>(false);
    sub->add_option("--r", *r, "uniformity")->required();
    sub->add_option("--p", *p, "number of parts")->required();
    sub->add_option("--n", *n, "vertices")->required();
    sub->add_option("--out", *out, "output file (default: stdout)");
    sub->add_flag("--json", *js, "machine-readable report");
    sub->callback([=, &action] {
      action = [=] { return run_gen_construction(*r, *p, *n, *out, *js); };
    });
  }

  // check-homfree
  {
    auto* sub = app.add_subcommand("check-homfree",
                                   "decide hom-freeness for walks of residue k (dual routes)");
    auto input = std::make_shared<std::string>("-");
    auto k = std::make_shared<long long>(1);
    auto witness = std::make_shared<std::string>();
    auto js = std::make_shared<bool>(false);
    sub->add_option("input", *input, "hypergraph file, - for stdin");
    sub->add_option("--k", *k, "walk-length residue")->required();
    sub->add_option("--witness", *witness, "write a witness walk here when not hom-free");
    sub->add_flag("--json", *js, "machine-readable report");
    sub->callback([=, &action] {
      action = [=] { return run_check_homfree(*input, *k, *witness, *js); };
    });
  }

  // contains-cycle
  {
    auto* sub = app.add_subcommand("contains-cycle",
                                   "decide whether a closed tight walk of length ell exists");
    auto input = std::make_shared<std::string>("-");
    auto ell = std::make_shared<long long>(0);
    auto js = std::make_shared<bool>(false);
    sub->add_option("input", *input, "hypergraph file, - for stdin");
    sub->add_option("--ell", *ell, "walk length")->required();
    sub->add_flag("--json", *js, "machine-readable report");
    sub->callback([=, &action] {
      action = [=] { return run_contains_cycle(*input, *ell, *js); };
    });
  }

  // available-colors
  {
    auto* sub = app.add_subcommand("available-colors",
                                   "list the color classes available for (r, k)");
    auto r = std::make_shared<int>(0);
    auto k = std::make_shared<int>(1);
    auto full = std::make_shared<bool>(false);
    auto js = std::make_shared<bool>(false);
    sub->add_option("--r", *r, "uniformity")->required();
    sub->add_option("--k", *k, "walk-length residue")->required();
    sub->add_flag("--full", *full, "enumerate all maximal classes, not only the standard family");
    sub->add_flag("--json", *js, "machine-readable report");
    sub->callback([=, &action] {
      action = [=] { return run_available_colors(*r, *k, *full, *js); };
    });
  }

  // find-coloring
  {
    auto* sub = app.add_subcommand("find-coloring", "search for an accordant coloring");
    auto input = std::make_shared<std::string>("-");
    auto k = std::make_shared<long long>(1);
    auto full = std::make_shared<bool>(false);
    auto out = std::make_shared<std::string>();
    auto js = std::make_shared<bool>(false);
    sub->add_option("input", *input, "hypergraph file, - for stdin");
    sub->add_option("--k", *k, "walk-length residue")->required();
    sub->add_flag("--full", *full, "allow every maximal class");
    sub->add_option("--out", *out, "coloring file (default: stdout)");
    sub->add_flag("--json", *js, "machine-readable report");
    sub->callback([=, &action] {
      action = [=] { return run_find_coloring(*input, *k, *full, *out, *js); };
    });
  }

  // verify-coloring
  {
    auto* sub = app.add_subcommand("verify-coloring",
                                   "check a coloring for accordance against its hypergraph");
    auto graph = std::make_shared<std::string>();
    auto coloring = std::make_shared<std::string>();
    auto js = std::make_shared<bool>(false);
    sub->add_option("graph", *graph, "hypergraph file, - for stdin")->required();
    sub->add_option("coloring", *coloring, "coloring file")->required();
    sub->add_flag("--json", *js, "machine-readable report");
    sub->callback([=, &action] {
      action = [=] { return run_verify_coloring(*graph, *coloring, *js); };
    });
  }

  // min-codegree
  {
    auto* sub = app.add_subcommand("min-codegree", "minimum codegree of a hypergraph");
    auto input = std::make_shared<std::string>("-");
    auto js = std::make_shared<bool>(false);
    sub->add_option("input", *input, "hypergraph file, - for stdin");
    sub->add_flag("--json", *js, "machine-readable report");
    sub->callback([=, &action] {
      action = [=] { return run_min_codegree(*input, *js); };
    });
  }

  // extremal
  {
    auto* sub = app.add_subcommand("extremal",
                                   "best hom-free minimum codegree: construction bound or "
                                   "exact search");
    auto n = std::make_shared<int>(0);
    auto r = std::make_shared<int>(0);
    auto k = std::make_shared<long long>(1);
    auto exact = std::make_shared<bool>(false);
    auto certify = std::make_shared<std::string>();
    auto threads = std::make_shared<int>(1);
    auto js = std::make_shared<bool>(false);
    sub->add_option("--n", *n, "vertices")->required();
    sub->add_option("--r", *r, "uniformity")->required();
    sub->add_option("--k", *k, "walk-length residue")->required();
    sub->add_flag("--exact", *exact, "run the exhaustive search (size caps apply)");
    sub->add_option("--certify", *certify, "write a certificate directory for the result");
    sub->add_option("--threads", *threads, "search worker threads");
    sub->add_flag("--json", *js, "machine-readable report");
    sub->callback([=, &action] {
      action = [=] { return run_extremal(*n, *r, *k, *exact, *certify, *threads, *js); };
    });
  }

  // verify-cert
  {
    auto* sub = app.add_subcommand("verify-cert", "re-check a certificate directory from scratch");
    auto dir = std::make_shared<std::string>();
    auto js = std::make_shared<bool>(false);
    sub->add_option("dir", *dir, "certificate directory")->required();
    sub->add_flag("--json", *js, "machine-readable report");
    sub->callback([=, &action] {
      action = [=] { return run_verify_cert(*dir, *js); };
    });
  }

  // selfcheck
  {
    auto* sub = app.add_subcommand("selfcheck", "run the built-in differential oracle suites");
    auto js = std::make_shared<bool>(false);
    sub->add_flag("--json", *js, "machine-readable report");
    sub->callback([=, &action] {
      action = [=] { return run_selfcheck(*js); };
    });
  }

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? 0 : 2;
  }

  try {
    return action();
  } catch (const tcl::capability_error& e) {
    std::cerr << "capability: " << e.what() << "\n";
    return 3;
  } catch (const tcl::argument_error& e) {
    std::cerr << "usage: " << e.what() << "\n";
    return 2;
  } catch (const tcl::dimension_error& e) {
    std::cerr << "usage: " << e.what() << "\n";
    return 2;
  } catch (const tcl::parse_error& e) {
    std::cerr << "usage: " << e.what() << "\n";
    return 2;
  } catch (const tcl::incomplete_coloring_error& e) {
    std::cerr << "usage: " << e.what() << "\n";
    return 2;
  } catch (const tcl::unsupported_color_error& e) {
    std::cerr << "usage: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 3;
  }
}
