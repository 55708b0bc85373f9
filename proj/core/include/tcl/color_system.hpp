#pragma once

#include <memory>
#include <string>
#include <vector>

#include "tcl/perm_group.hpp"

namespace tcl {

enum class ColorMode { young_only, full };

// Left coset space S_r / Gamma with the left-multiplication action tabulated
// through permutation ranks. Cosets are numbered by first appearance in rank
// order, so coset 0 is Gamma itself.
struct CosetSpace {
  PermGroup group;
  int young_i = 0;  // i > 0 when group is the stabilizer of {1..i}
  int coset_count = 0;
  std::vector<uint16_t> coset_of;   // size r!, rank -> coset id
  std::vector<uint32_t> coset_rep;  // coset id -> least element rank

  static CosetSpace build(PermGroup g, int young_i = 0);

  int coset_of_perm(const Permutation& p) const { return coset_of[p.rank()]; }
  Permutation representative(int coset) const {
    return Permutation::unrank(group.degree(), coset_rep[coset]);
  }
  // pi * (sigma Gamma) = (pi sigma) Gamma
  int act(const Permutation& pi, int coset) const {
    return coset_of[pi.compose(representative(coset)).rank()];
  }
};

// The disjoint union of coset spaces used as the color set for residue-k
// accordant colorings: one space per conjugacy class of admitted groups.
//
//  - young_only: the stabilizers of {1..i} for every available i <= r/2,
//    i ascending (i and r-i give conjugate stabilizers, so one class each).
//  - full: all maximal cyc^k-conjugate-avoiding subgroups of S_r up to
//    conjugacy. Classes conjugate to a set stabilizer are represented on
//    {1..i} and listed first (i ascending); the rest follow by order and
//    canonical key.
struct ColorSystem {
  int r = 0;
  int k = 0;
  ColorMode mode = ColorMode::young_only;
  std::vector<CosetSpace> colors;

  int total_values() const;
  // One line "r k m", then per color: order, generators in cycle notation,
  // coset count.
  std::string dump() const;
};

// young_only works for r <= 8; full enumeration is capped at r <= 6.
std::shared_ptr<const ColorSystem> enumerate_available_colors(int r, int k, ColorMode mode);

}  // namespace tcl
