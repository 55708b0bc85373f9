#pragma once

#include <optional>
#include <vector>

#include "tcl/hypergraph.hpp"

namespace tcl {

struct SearchTarget {
  enum class Kind { homfree, cycle };
  Kind kind = Kind::homfree;
  long long k = 1;    // forbidden walk-length residue (homfree)
  long long ell = 0;  // forbidden injective cycle length (cycle)

  static SearchTarget homfree(long long k) { return {Kind::homfree, k, 0}; }
  static SearchTarget cycle(long long ell) { return {Kind::cycle, 1, ell}; }
};

struct SearchOptions {
  int threads = 1;
  bool enforce_caps = true;  // default caps: r=3 with n<=7, r=4 with n<=6
  int max_n_override = 0;    // when > 0, allows any n up to this value instead
  // Pinned sub-problem: these edges are fixed present/absent.
  std::vector<std::vector<int>> forced_in, forced_out;
};

struct ExtremalResult {
  int n = 0, r = 0;
  SearchTarget target;
  int best_codegree = 0;  // -1 when no admissible free graph exists (pinned runs)
  Hypergraph witness{2, 2};
  bool exact = false;
  long long nodes_explored = 0;
};

// Maximum minimum-codegree over target-free r-graphs on n vertices: binary
// search on the codegree threshold, deciding each threshold by DFS over the
// edges grouped by their largest-vertex-deleted (r-1)-set in colex order, so
// every (r-1)-set's codegree is final at a known point. Prunes: freeness
// (monotone), final codegree, remaining-potential, and a prefix-link
// canonical form at the first stage when nothing is pinned.
ExtremalResult exact_search(int n, int r, const SearchTarget& target,
                            const SearchOptions& opts = {});

// Unpruned reference: enumerates every completion of the pinned edges by
// bitmask. Capped at 24 free edge slots.
ExtremalResult oracle_search(int n, int r, const SearchTarget& target,
                             const std::vector<std::vector<int>>& forced_in = {},
                             const std::vector<std::vector<int>>& forced_out = {});

struct DensityRow {
  int n = 0;
  int p = 0;
  int construction_codegree = 0;
  double ratio = 0.0;  // construction_codegree / n
  std::optional<int> exact_value;
};

// Construction lower bounds with the best admissible modulus (the smallest
// prime factor of r/gcd(r,k)), plus exact values within the search caps when
// requested.
std::vector<DensityRow> density_table(int r, long long k, int n_lo, int n_hi,
                                      bool with_exact = false);

}  // namespace tcl
