#pragma once

#include <map>
#include <memory>
#include <vector>

#include "tcl/color_system.hpp"
#include "tcl/hypergraph.hpp"

namespace tcl {

struct ColorValue {
  int color = 0;  // index into ColorSystem::colors
  int coset = 0;  // coset id within that color's space
  friend bool operator==(const ColorValue&, const ColorValue&) = default;
  friend auto operator<=>(const ColorValue&, const ColorValue&) = default;
};

// Stores the value of each edge's canonical (increasing) orientation; the
// value of any other orientation follows by equivariance, so one entry per
// edge determines the whole S_r-equivariant map.
struct AccordantColoring {
  std::shared_ptr<const ColorSystem> system;
  std::map<std::vector<int>, ColorValue> assignment;

  const ColorValue& value_at(const std::vector<int>& sorted_edge) const;
};

// Value induced on an arbitrary orientation of an assigned edge.
ColorValue chi(const AccordantColoring& c, const std::vector<int>& oriented_edge);

struct Violation {
  std::vector<int> x, y;  // oriented edges differing in one coordinate, chi(x) != chi(y)
};

struct VerifyResult {
  bool ok = true;
  std::vector<Violation> violations;
};

// Checks every pair of oriented edges that differ in exactly one coordinate
// (all r! orientation pairs per adjacent edge pair, not the reduced
// last-coordinate form, which makes this an independent re-derivation of the
// constraints the solver propagates).
VerifyResult verify_coloring(const Hypergraph& h, const AccordantColoring& c,
                             std::size_t max_violations = 16);

// The value forced on edge W+v by the value of edge W+u, where W is the
// shared sorted (r-1)-set: orienting both as (W ascending, extension last)
// must give equal values.
ColorValue propagate_accordance(const ColorSystem& sys, const std::vector<int>& shared_sorted,
                                int u, int v, const ColorValue& value_of_wu);

struct FindResult {
  bool sat = false;
  AccordantColoring coloring;  // verified when sat
  std::vector<std::vector<int>> unsat_component;  // edges of the component that exhausted
  long long values_tried = 0;
  int components = 0;
};

// Complete search: constraints between adjacent edges are forced bijections,
// so each connected component of the edge-adjacency graph is determined by
// the value of one root edge; trying every root value per component is
// exhaustive.
FindResult find_coloring(const Hypergraph& h, long long k, ColorMode mode);

struct PartLabeling {
  int i = 0;
  std::vector<int> h_plus, h_minus;
};

// Splits an edge into the i interchangeable vertices and the rest, for edges
// whose color is a set-stabilizer class; independent of the choice of coset
// representative.
PartLabeling extract_parts(const std::vector<int>& sorted_edge, const AccordantColoring& c);

std::vector<int> used_colors(const AccordantColoring& c);

}  // namespace tcl
