#include "tcl/certificate.hpp"

#include <algorithm>
#include <filesystem>
#include <sstream>

#include "tcl/io.hpp"
#include "tcl/walks.hpp"

namespace tcl {

namespace {

namespace fs = std::filesystem;

constexpr const char* kGraphFile = "graph.txt";
constexpr const char* kMetaFile = "meta.txt";
constexpr const char* kColoringFile = "coloring.txt";

bool has_flag(const std::vector<std::string>& flags, const std::string& f) {
  return std::find(flags.begin(), flags.end(), f) != flags.end();
}

}  // namespace

CertifyOutcome certify_lower_bound(const Hypergraph& h, long long k, bool try_coloring,
                                   ColorMode mode) {
  CertifyOutcome out;
  HomfreeResult hom = is_homfree(h, k);
  bool walk_exists = residue_reach_oracle(h, k);
  if (hom.homfree != !walk_exists) throw error("certify: hom-freeness routes disagree");
  if (!hom.homfree) {
    out.refused = true;
    out.refusal_witness = hom.witness;
    return out;
  }
  out.certificate.graph = h;
  out.certificate.k = k;
  out.certificate.codegree = h.n() >= h.r() ? h.min_codegree() : 0;
  out.certificate.flags = {"homfree-period", "homfree-oracle"};
  if (try_coloring) {
    FindResult found = find_coloring(h, k, mode);
    if (found.sat) {
      out.certificate.coloring = found.coloring;
      out.certificate.flags.push_back(mode == ColorMode::full ? "coloring-full"
                                                              : "coloring-young");
    }
  }
  return out;
}

void write_certificate(const Certificate& cert, const std::string& dir) {
  fs::create_directories(dir);
  write_text_file((fs::path(dir) / kGraphFile).string(), emit_hypergraph(cert.graph));
  std::ostringstream meta;
  meta << cert.graph.n() << ' ' << cert.graph.r() << ' ' << cert.k << ' ' << cert.codegree
       << '\n';
  for (size_t i = 0; i < cert.flags.size(); ++i) meta << (i ? " " : "") << cert.flags[i];
  if (!cert.flags.empty()) meta << '\n';
  write_text_file((fs::path(dir) / kMetaFile).string(), meta.str());
  if (cert.coloring)
    write_text_file((fs::path(dir) / kColoringFile).string(), emit_coloring(*cert.coloring));
}

Certificate read_certificate(const std::string& dir) {
  Certificate cert;
  cert.graph = parse_hypergraph(read_text_file((fs::path(dir) / kGraphFile).string()));
  std::istringstream meta(read_text_file((fs::path(dir) / kMetaFile).string()));
  long long n, r;
  if (!(meta >> n >> r >> cert.k >> cert.codegree))
    throw parse_error("certificate meta: expected 'n r k codegree'");
  if (n != cert.graph.n() || r != cert.graph.r())
    throw parse_error("certificate meta: dimensions disagree with graph file");
  std::string flag;
  while (meta >> flag) cert.flags.push_back(flag);
  fs::path coloring_path = fs::path(dir) / kColoringFile;
  if (fs::exists(coloring_path))
    cert.coloring = parse_coloring(read_text_file(coloring_path.string()));
  return cert;
}

bool verify_certificate(const std::string& dir, std::string* reason) {
  auto fail = [&](const std::string& why) {
    if (reason) *reason = why;
    return false;
  };
  Certificate cert;
  try {
    cert = read_certificate(dir);
  } catch (const error& e) {
    return fail(e.what());
  }
  const Hypergraph& h = cert.graph;
  int expect = h.n() >= h.r() ? h.min_codegree() : 0;
  if (expect != cert.codegree) return fail("minimum codegree does not match meta");
  HomfreeResult hom = is_homfree(h, cert.k);
  if (!hom.homfree) return fail("graph is not hom-free for the stated residue");
  if (residue_reach_oracle(h, cert.k)) return fail("oracle route rejects hom-freeness");
  if (has_flag(cert.flags, "coloring-young") || has_flag(cert.flags, "coloring-full")) {
    if (!cert.coloring) return fail("meta promises a coloring but none is stored");
  }
  if (cert.coloring) {
    if (cert.coloring->system->k != ((cert.k % h.r()) + h.r()) % h.r())
      return fail("stored coloring uses a different residue");
    VerifyResult check = verify_coloring(h, *cert.coloring);
    if (!check.ok) return fail("stored coloring fails verification");
  }
  if (reason) reason->clear();
  return true;
}

}  // namespace tcl
