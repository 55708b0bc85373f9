#include "tcl/perm_group.hpp"

#include <algorithm>
#include <deque>
#include <numeric>
#include <set>
#include <sstream>

#include "tcl/subgroup_lattice.hpp"

namespace tcl {

PermGroup::PermGroup(int r, std::vector<Permutation> elements, std::vector<Permutation> gens)
    : r_(r), elements_(std::move(elements)), generators_(std::move(gens)) {}

PermGroup PermGroup::trivial(int r) { return closure(r, {}); }

PermGroup PermGroup::symmetric(int r) {
  std::vector<Permutation> gens;
  for (int i = 1; i < r; ++i)
    gens.push_back(Permutation::from_cycles(r, "(" + std::to_string(i) + std::to_string(i + 1) + ")"));
  return closure(r, gens);
}

PermGroup PermGroup::alternating(int r) {
  std::vector<Permutation> gens;
  for (int i = 1; i + 2 <= r; ++i)
    gens.push_back(Permutation::from_cycles(
        r, "(" + std::to_string(i) + std::to_string(i + 1) + std::to_string(i + 2) + ")"));
  return closure(r, gens);
}

PermGroup PermGroup::closure(int r, const std::vector<Permutation>& gens) {
  for (const auto& g : gens)
    if (g.degree() != r) throw dimension_error("closure: generator degree mismatch");
  std::vector<bool> seen(Permutation::factorial(r), false);
  std::vector<Permutation> elems;
  std::deque<Permutation> queue;
  Permutation id = Permutation::identity(r);
  seen[id.rank()] = true;
  elems.push_back(id);
  queue.push_back(id);
  while (!queue.empty()) {
    Permutation x = queue.front();
    queue.pop_front();
    for (const auto& g : gens) {
      Permutation y = x.compose(g);
      if (!seen[y.rank()]) {
        seen[y.rank()] = true;
        elems.push_back(y);
        queue.push_back(y);
      }
    }
  }
  std::sort(elems.begin(), elems.end());
  return PermGroup(r, std::move(elems), gens);
}

PermGroup PermGroup::from_elements(int r, std::vector<Permutation> elements) {
  for (const auto& e : elements)
    if (e.degree() != r) throw dimension_error("from_elements: degree mismatch");
  std::sort(elements.begin(), elements.end());
  elements.erase(std::unique(elements.begin(), elements.end()), elements.end());
  if (elements.empty()) throw argument_error("from_elements: empty set is not a group");
  PermGroup g(r, elements, elements);
  if (!std::binary_search(elements.begin(), elements.end(), Permutation::identity(r)))
    throw argument_error("from_elements: missing identity");
  for (const auto& a : elements) {
    if (!g.contains(a.inverse())) throw argument_error("from_elements: not closed under inverse");
    for (const auto& b : elements)
      if (!g.contains(a.compose(b))) throw argument_error("from_elements: not closed under product");
  }
  return g;
}

bool PermGroup::contains(const Permutation& p) const {
  if (p.degree() != r_) return false;
  return std::binary_search(elements_.begin(), elements_.end(), p);
}

bool PermGroup::is_subgroup_of(const PermGroup& other) const {
  if (r_ != other.r_) return false;
  return std::includes(other.elements_.begin(), other.elements_.end(),
                       elements_.begin(), elements_.end());
}

bool PermGroup::contains_cycle_type(const std::vector<int>& type) const {
  for (const auto& e : elements_)
    if (e.cycle_type() == type) return true;
  return false;
}

PermGroup PermGroup::conjugated_by(const Permutation& sigma) const {
  if (sigma.degree() != r_) throw dimension_error("conjugated_by: degree mismatch");
  Permutation inv = sigma.inverse();
  std::vector<Permutation> elems;
  elems.reserve(elements_.size());
  for (const auto& e : elements_) elems.push_back(sigma.compose(e).compose(inv));
  std::vector<Permutation> gens;
  gens.reserve(generators_.size());
  for (const auto& g : generators_) gens.push_back(sigma.compose(g).compose(inv));
  std::sort(elems.begin(), elems.end());
  return PermGroup(r_, std::move(elems), std::move(gens));
}

std::vector<std::vector<int>> PermGroup::transposition_partition() const {
  std::vector<int> parent(r_ + 1);
  std::iota(parent.begin(), parent.end(), 0);
  auto find = [&](int x) {
    while (parent[x] != x) x = parent[x] = parent[parent[x]];
    return x;
  };
  for (const auto& e : elements_) {
    auto type = e.cycle_type();
    if (type.size() != static_cast<size_t>(r_ - 1) || type[0] != 2) continue;
    int a = 0, b = 0;
    for (int i = 1; i <= r_; ++i) {
      if (e.apply(i) == i) continue;
      if (a == 0)
        a = i;
      else
        b = i;
    }
    int ra = find(a), rb = find(b);
    if (ra != rb) parent[std::max(ra, rb)] = std::min(ra, rb);
  }
  std::vector<std::vector<int>> blocks(r_ + 1);
  for (int v = 1; v <= r_; ++v) blocks[find(v)].push_back(v);
  std::vector<std::vector<int>> out;
  for (auto& b : blocks)
    if (!b.empty()) out.push_back(std::move(b));
  return out;
}

std::string PermGroup::generator_string() const {
  if (generators_.empty()) return "()";
  std::ostringstream out;
  for (size_t i = 0; i < generators_.size(); ++i) {
    if (i) out << ',';
    out << generators_[i].cycle_string();
  }
  return out.str();
}

PermGroup young_subgroup(int r, const std::vector<int>& support) {
  std::set<int> s(support.begin(), support.end());
  if (s.size() != support.size()) throw argument_error("young_subgroup: repeated support point");
  for (int v : support)
    if (v < 1 || v > r) throw argument_error("young_subgroup: support point out of range");
  // generators: adjacent swaps within the support and within its complement
  std::vector<int> in(support.begin(), support.end()), out;
  std::sort(in.begin(), in.end());
  for (int v = 1; v <= r; ++v)
    if (!s.count(v)) out.push_back(v);
  std::vector<Permutation> gens;
  auto add_swaps = [&](const std::vector<int>& block) {
    for (size_t i = 0; i + 1 < block.size(); ++i) {
      std::vector<int> img(r);
      std::iota(img.begin(), img.end(), 1);
      std::swap(img[block[i] - 1], img[block[i + 1] - 1]);
      gens.push_back(Permutation::from_images(img));
    }
  };
  add_swaps(in);
  add_swaps(out);
  return PermGroup::closure(r, gens);
}

bool is_conjugate_avoiding(const PermGroup& g, const Permutation& pi) {
  if (g.degree() != pi.degree()) throw dimension_error("is_conjugate_avoiding: degree mismatch");
  return !g.contains_cycle_type(pi.cycle_type());
}

bool si_available(int r, int k, int i) {
  if (r < 2 || r > kMaxPermDegree) throw capability_error("si_available: degree out of range");
  k = ((k % r) + r) % r;
  if (k == 0) throw invalid_residue_error("si_available: k must be nonzero mod r");
  if (i < 1 || i > r - 1) throw argument_error("si_available: i must be in 1..r-1");
  int m = std::gcd(r, k);
  int q = r / m;
  return !(i % q == 0 && (r - i) % q == 0);
}

bool si_available_bruteforce(int r, int k, int i) {
  if (i < 1 || i > r - 1) throw argument_error("si_available_bruteforce: i out of range");
  Permutation target = cyc_power(r, k);
  uint32_t fact = Permutation::factorial(r);
  for (uint32_t s = 0; s < fact; ++s) {
    Permutation sigma = Permutation::unrank(r, s);
    Permutation conj = sigma.compose(target).compose(sigma.inverse());
    bool stabilizes = true;
    for (int v = 1; v <= i && stabilizes; ++v)
      if (conj.apply(v) > i) stabilizes = false;
    if (stabilizes) return false;  // conjugate found inside the stabilizer
  }
  return true;
}

TwoBlockSweepReport check_claim_simaximal(int r) {
  TwoBlockSweepReport report;
  report.r = r;
  std::vector<int> full_cycle_type{r};
  for (const PermGroup& g : all_subgroups(r)) {
    ++report.groups_checked;
    auto blocks = g.transposition_partition();
    if (blocks.size() != 2) continue;
    ++report.two_block_groups;
    std::vector<Permutation> transpositions;
    for (const auto& e : g.elements()) {
      auto type = e.cycle_type();
      if (type.size() == static_cast<size_t>(r - 1) && type[0] == 2) transpositions.push_back(e);
    }
    PermGroup from_transpositions = PermGroup::closure(r, transpositions);
    if (g == from_transpositions) continue;
    if (g.contains_cycle_type(full_cycle_type)) continue;
    report.counterexamples.push_back(g);
  }
  return report;
}

}  // namespace tcl
