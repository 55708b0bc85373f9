#pragma once

#include <vector>

#include "tcl/coloring.hpp"
#include "tcl/hypergraph.hpp"

namespace tcl {

// Vertex set {1..n} split into p contiguous intervals V_1..V_p whose sizes
// differ by at most one, larger parts first; an r-set is an edge exactly when
// its part indices sum to 1 modulo p.
struct ConstructionParams {
  int r = 3;
  int p = 2;
  int n = 0;
};

// Inclusive intervals [lo, hi] of V_1..V_p.
std::vector<std::pair<int, int>> construction_parts(const ConstructionParams& params);
int part_of(const ConstructionParams& params, int v);  // 1-based part index

Hypergraph gen_construction(const ConstructionParams& params);

struct CodegreeReport {
  int exact = 0;
  int floor_bound = 0;  // floor(n/p) - (r-1)
  bool bound_holds = false;
};
// Exact minimum codegree; any (r-1)-set extends by exactly one part minus its
// own members, which gives the floor bound.
CodegreeReport construction_min_codegree(const ConstructionParams& params);

// The standard coloring of the p=2 construction (r even): an edge meeting V_1
// in i vertices (i odd) gets the set-stabilizer class of type min(i, r-i)
// with the interchangeable side e n V_1 (e n V_2 when i > r/2), over the
// residue r/2 color system.
AccordantColoring canonical_p2_coloring(const ConstructionParams& params);

struct FreenessReport {
  bool hypothesis_holds = false;  // p divides r/gcd(r,k)
  bool homfree_period = false;
  bool homfree_oracle = false;
  std::vector<int> walk_witness;  // closed walk when not hom-free
  std::vector<std::pair<long long, bool>> cycle_contained;  // (ell, injective copy found)
  bool all_free() const;
};
// Checks the generated graph against both hom-freeness routes and against
// injective containment of each listed cycle length congruent to k mod r.
FreenessReport check_construction_free(const ConstructionParams& params, long long k,
                                       const std::vector<long long>& ells);

}  // namespace tcl
