#include "tcl/constructions.hpp"

#include <algorithm>
#include <numeric>

#include "tcl/walks.hpp"

namespace tcl {

namespace {

void check_params(const ConstructionParams& params) {
  if (params.p < 2) throw argument_error("construction: p must be at least 2");
  if (params.n < params.r) throw argument_error("construction: need n >= r");
  if (params.r < 2 || params.r > kMaxUniformity)
    throw capability_error("construction: uniformity out of range");
}

}  // namespace

std::vector<std::pair<int, int>> construction_parts(const ConstructionParams& params) {
  check_params(params);
  std::vector<std::pair<int, int>> parts;
  int base = params.n / params.p, rem = params.n % params.p, at = 1;
  for (int a = 1; a <= params.p; ++a) {
    int size = base + (a <= rem ? 1 : 0);
    parts.emplace_back(at, at + size - 1);
    at += size;
  }
  return parts;
}

int part_of(const ConstructionParams& params, int v) {
  if (v < 1 || v > params.n) throw argument_error("part_of: vertex out of range");
  int base = params.n / params.p, rem = params.n % params.p;
  int wide = rem * (base + 1);  // vertices in the first rem (larger) parts
  if (v <= wide) return (v - 1) / (base + 1) + 1;
  return rem + (v - wide - 1) / base + 1;
}

Hypergraph gen_construction(const ConstructionParams& params) {
  check_params(params);
  Hypergraph h(params.r, params.n);
  std::vector<int> pick(params.r);
  std::iota(pick.begin(), pick.end(), 1);
  while (true) {
    int sum = 0;
    for (int v : pick) sum += part_of(params, v);
    if (sum % params.p == 1 % params.p) h.add_edge(pick);
    int i = params.r - 1;
    while (i >= 0 && pick[i] == params.n - (params.r - 1 - i)) --i;
    if (i < 0) break;
    ++pick[i];
    for (int j = i + 1; j < params.r; ++j) pick[j] = pick[j - 1] + 1;
  }
  return h;
}

CodegreeReport construction_min_codegree(const ConstructionParams& params) {
  Hypergraph h = gen_construction(params);
  CodegreeReport out;
  out.exact = h.min_codegree();
  out.floor_bound = params.n / params.p - (params.r - 1);
  out.bound_holds = out.exact >= out.floor_bound;
  return out;
}

AccordantColoring canonical_p2_coloring(const ConstructionParams& params) {
  if (params.p != 2) throw unsupported_color_error("canonical coloring requires p = 2");
  if (params.r % 2 != 0) throw unsupported_color_error("canonical coloring requires even r");
  check_params(params);

  Hypergraph h = gen_construction(params);
  AccordantColoring out;
  out.system = enumerate_available_colors(params.r, params.r / 2, ColorMode::young_only);

  std::vector<int> type_class(params.r, -1);  // young_i -> color index
  for (size_t j = 0; j < out.system->colors.size(); ++j)
    type_class[out.system->colors[j].young_i] = static_cast<int>(j);

  int v1_hi = construction_parts(params)[0].second;
  int r = params.r;
  for (const auto& e : h.edges()) {
    int i = 0;
    for (int v : e)
      if (v <= v1_hi) ++i;
    int istar = std::min(i, r - i);
    int j = type_class[istar];
    if (j < 0) throw error("canonical coloring: class for edge type missing");

    // sigma maps {1..istar} onto the positions of the interchangeable side.
    std::vector<bool> plus(r, false);
    for (int a = 0; a < r; ++a) {
      bool in_v1 = e[a] <= v1_hi;
      plus[a] = (i <= r - i) ? in_v1 : !in_v1;
    }
    std::vector<int> plus_pos, minus_pos;
    for (int a = 1; a <= r; ++a) (plus[a - 1] ? plus_pos : minus_pos).push_back(a);
    std::vector<int> img(r);
    for (int t = 0; t < istar; ++t) img[t] = plus_pos[t];
    for (int t = istar; t < r; ++t) img[t] = minus_pos[t - istar];
    Permutation sigma = Permutation::from_images(img);
    out.assignment[e] = {j, out.system->colors[j].coset_of_perm(sigma)};
  }
  return out;
}

bool FreenessReport::all_free() const {
  if (!homfree_period || !homfree_oracle) return false;
  for (const auto& [ell, found] : cycle_contained)
    if (found) return false;
  return true;
}

FreenessReport check_construction_free(const ConstructionParams& params, long long k,
                                       const std::vector<long long>& ells) {
  check_params(params);
  int r = params.r;
  long long kk = ((k % r) + r) % r;
  if (kk == 0) throw invalid_residue_error("residue k must be nonzero modulo r");

  FreenessReport out;
  long long q = r / std::gcd(static_cast<long long>(r), kk);
  out.hypothesis_holds = q % params.p == 0;

  Hypergraph h = gen_construction(params);
  HomfreeResult hom = is_homfree(h, kk);
  out.homfree_period = hom.homfree;
  out.walk_witness = hom.witness;
  out.homfree_oracle = !residue_reach_oracle(h, kk);

  EmbedOptions opts;
  opts.anchor_vertex_transitive = true;
  for (long long ell : ells) {
    if (ell <= r || ell % r != kk) continue;
    bool found = ell <= h.n() && contains_injective(h, tight_cycle(r, ell), opts);
    out.cycle_contained.emplace_back(ell, found);
  }
  return out;
}

}  // namespace tcl
