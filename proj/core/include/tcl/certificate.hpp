#pragma once

#include <optional>
#include <string>
#include <vector>

#include "tcl/coloring.hpp"
#include "tcl/hypergraph.hpp"

namespace tcl {

// A re-checkable lower-bound bundle: graph, its minimum codegree, the
// hom-freeness verdicts of both decision routes, and optionally a verified
// coloring. Stored as a directory: graph.txt, meta.txt, coloring.txt.
struct Certificate {
  Hypergraph graph{2, 2};
  long long k = 1;
  int codegree = 0;
  std::vector<std::string> flags;
  std::optional<AccordantColoring> coloring;
};

struct CertifyOutcome {
  bool refused = false;
  std::vector<int> refusal_witness;  // closed walk showing the graph is not hom-free
  Certificate certificate;           // populated when not refused
};

// Runs both hom-freeness routes; refuses with the walk witness when the graph
// is not hom-free. try_coloring attaches a coloring when the search finds one.
CertifyOutcome certify_lower_bound(const Hypergraph& h, long long k, bool try_coloring,
                                   ColorMode mode = ColorMode::young_only);

void write_certificate(const Certificate& cert, const std::string& dir);
Certificate read_certificate(const std::string& dir);

// Re-checks a stored certificate from scratch with the verifier routines
// only: codegree recomputed, hom-freeness re-decided by both routes, and the
// attached coloring re-verified.
bool verify_certificate(const std::string& dir, std::string* reason = nullptr);

}  // namespace tcl
