#pragma once

#include <vector>

#include "tcl/hypergraph.hpp"

namespace tcl {

// Directed graph on ordered (r-1)-tuples of distinct vertices whose support
// lies in at least one edge.  An arc (y1..y_{r-1}) -> (y2..y_{r-1}, z) exists
// when {y1,...,y_{r-1},z} is an edge.  Closed walks of length ell correspond
// to cyclic vertex sequences whose r-windows are all edges.
struct TightWalkDigraph {
  int r = 0;
  std::vector<EdgeKey> supports;  // sorted packed keys of covered (r-1)-sets
  std::vector<long long> arc_offsets;
  std::vector<long long> arc_heads;

  int tuple_len() const { return r - 1; }
  long long node_count() const;
  long long arc_count() const { return static_cast<long long>(arc_heads.size()); }
  std::vector<int> tuple_of(long long node) const;
  long long node_of(const std::vector<int>& tuple) const;  // -1 when absent
};

TightWalkDigraph build_walk_digraph(const Hypergraph& h);

struct SccDecomposition {
  int count = 0;
  std::vector<int> comp;          // node -> component id
  std::vector<long long> period;  // component id -> gcd of cycle lengths, 0 if acyclic
};

SccDecomposition scc_periods(const TightWalkDigraph& g);

struct HomfreeResult {
  bool homfree = true;
  std::vector<int> witness;  // cyclic vertex sequence of a closed walk with
                             // length = k (mod r); empty when homfree
};

// True when no closed tight walk has length congruent to k modulo r, i.e. the
// graph admits no homomorphic image of any tight cycle of such a length.
// Requires k != 0 (mod r).
HomfreeResult is_homfree(const Hypergraph& h, long long k);
HomfreeResult is_homfree(const TightWalkDigraph& g, const SccDecomposition& sccs, long long k);
bool homfree_from_periods(const SccDecomposition& sccs, int r, long long k);

// Same decision computed by a different route: strongly connected components
// of the product of the walk digraph with a counter modulo r.
bool residue_reach_oracle(const Hypergraph& h, long long k);

// Exact test for a closed tight walk of length exactly ell (ell > r).
bool contains_cycle_hom(const Hypergraph& h, long long ell);

// Checks a cyclic vertex sequence: every window of r consecutive entries
// (wrapping) must be r distinct vertices forming an edge.  Length must
// exceed r.
bool validate_walk(const Hypergraph& h, const std::vector<int>& cyclic_vertices);

}  // namespace tcl
