#pragma once

#include <string>
#include <vector>

#include "tcl/permutation.hpp"

namespace tcl {

// A subgroup of S_r held by its full (sorted) element list. All instances are
// immutable after construction, so sharing across threads is safe.
class PermGroup {
 public:
  static PermGroup trivial(int r);
  static PermGroup symmetric(int r);
  static PermGroup alternating(int r);
  // Orbit closure of the generating set; the empty set closes to {id}.
  static PermGroup closure(int r, const std::vector<Permutation>& gens);
  // Accepts any list that already forms a group (validated).
  static PermGroup from_elements(int r, std::vector<Permutation> elements);

  int degree() const { return r_; }
  int order() const { return static_cast<int>(elements_.size()); }
  const std::vector<Permutation>& elements() const { return elements_; }
  const std::vector<Permutation>& generators() const { return generators_; }

  bool contains(const Permutation& p) const;
  bool is_subgroup_of(const PermGroup& other) const;
  bool contains_cycle_type(const std::vector<int>& type) const;
  PermGroup conjugated_by(const Permutation& sigma) const;  // sigma G sigma^-1

  // Blocks of the transitive closure of a ~ b iff the transposition (a b) is
  // an element. Within a block every transposition is present, so the group
  // generated by the member transpositions is the product of the blockwise
  // symmetric groups. Blocks are sorted, singletons included.
  std::vector<std::vector<int>> transposition_partition() const;

  std::string generator_string() const;

  friend bool operator==(const PermGroup& a, const PermGroup& b) {
    return a.r_ == b.r_ && a.elements_ == b.elements_;
  }

 private:
  PermGroup(int r, std::vector<Permutation> elements, std::vector<Permutation> gens);
  int r_;
  std::vector<Permutation> elements_;   // sorted
  std::vector<Permutation> generators_;
};

// Setwise stabilizer of `support` inside S_r: permutations mapping the support
// onto itself. For |support| = i this is the standard product S_i x S_{r-i}.
PermGroup young_subgroup(int r, const std::vector<int>& support);

// True iff no element of g has the cycle type of pi (conjugacy in S_r is
// cycle-type equality).
bool is_conjugate_avoiding(const PermGroup& g, const Permutation& pi);

// Closed form: with m = gcd(r,k), the stabilizer of an i-set contains a
// conjugate of cyc^k exactly when r/m divides both i and r-i. Available means
// it does not.
bool si_available(int r, int k, int i);

// Reference implementation: search all sigma in S_r for a conjugate of cyc^k
// inside the stabilizer of {1..i}. Slower, kept as an oracle for the closed
// form (and wired into selfcheck).
bool si_available_bruteforce(int r, int k, int i);

// Sweep over every subgroup of S_r whose transposition partition has exactly
// two blocks, checking that the subgroup either equals the group generated by
// its transpositions or contains an r-cycle.
struct TwoBlockSweepReport {
  int r = 0;
  int groups_checked = 0;       // all subgroups enumerated
  int two_block_groups = 0;     // those with a two-block partition
  std::vector<PermGroup> counterexamples;
  bool ok() const { return counterexamples.empty(); }
};
TwoBlockSweepReport check_claim_simaximal(int r);  // r <= 6

}  // namespace tcl
