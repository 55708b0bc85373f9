#include "tcl/color_system.hpp"

#include <algorithm>
#include <map>
#include <mutex>
#include <numeric>
#include <sstream>
#include <tuple>

#include "tcl/subgroup_lattice.hpp"

namespace tcl {

CosetSpace CosetSpace::build(PermGroup g, int young_i) {
  CosetSpace cs{std::move(g), 0, 0, {}, {}};
  cs.young_i = young_i;
  uint32_t fact = Permutation::factorial(cs.group.degree());
  cs.coset_of.assign(fact, 0xffff);
  for (uint32_t rank = 0; rank < fact; ++rank) {
    if (cs.coset_of[rank] != 0xffff) continue;
    uint16_t id = static_cast<uint16_t>(cs.coset_rep.size());
    cs.coset_rep.push_back(rank);
    Permutation sigma = Permutation::unrank(cs.group.degree(), rank);
    for (const auto& gamma : cs.group.elements())
      cs.coset_of[sigma.compose(gamma).rank()] = id;
  }
  cs.coset_count = static_cast<int>(cs.coset_rep.size());
  return cs;
}

int ColorSystem::total_values() const {
  int total = 0;
  for (const auto& c : colors) total += c.coset_count;
  return total;
}

std::string ColorSystem::dump() const {
  std::ostringstream out;
  out << r << ' ' << k << ' ' << colors.size() << '\n';
  for (const auto& c : colors)
    out << c.group.order() << ' ' << c.group.generator_string() << ' ' << c.coset_count << '\n';
  return out.str();
}

namespace {

std::vector<int> iota_support(int i) {
  std::vector<int> s(i);
  std::iota(s.begin(), s.end(), 1);
  return s;
}

ColorSystem build_system(int r, int k, ColorMode mode) {
  if (r < 2) throw argument_error("color system: need r >= 2");
  if (r > kMaxPermDegree) throw capability_error("color system: r capped at 8");
  k = ((k % r) + r) % r;
  if (k == 0) throw invalid_residue_error("color system: k must be nonzero mod r");

  ColorSystem sys;
  sys.r = r;
  sys.k = k;
  sys.mode = mode;

  if (mode == ColorMode::young_only) {
    for (int i = 1; 2 * i <= r; ++i)
      if (si_available(r, k, i))
        sys.colors.push_back(CosetSpace::build(young_subgroup(r, iota_support(i)), i));
    return sys;
  }

  if (r > kMaxLatticeDegree)
    throw capability_error("color system: full enumeration capped at r = " +
                           std::to_string(kMaxLatticeDegree));

  auto avoid_type = cyc_power(r, k).cycle_type();
  std::vector<const PermGroup*> avoiding;
  for (const PermGroup& g : all_subgroups(r))
    if (!g.contains_cycle_type(avoid_type)) avoiding.push_back(&g);

  // maximal = no other avoiding subgroup strictly above it
  std::vector<const PermGroup*> maximal;
  for (const PermGroup* g : avoiding) {
    bool is_max = true;
    for (const PermGroup* h : avoiding) {
      if (h == g || h->order() <= g->order()) continue;
      if (g->is_subgroup_of(*h)) {
        is_max = false;
        break;
      }
    }
    if (is_max) maximal.push_back(g);
  }

  // one representative per conjugacy class; young-conjugate classes get the
  // standard {1..i} representative
  struct ClassRep {
    PermGroup group;
    int young_i;
    std::vector<uint32_t> key;
  };
  std::vector<ClassRep> reps;
  for (const PermGroup* g : maximal) {
    auto key = conjugacy_canonical_key(*g);
    bool known = false;
    for (const auto& rep : reps)
      if (rep.key == key) {
        known = true;
        break;
      }
    if (known) continue;
    int young_i = 0;
    for (int i = 1; 2 * i <= r && young_i == 0; ++i) {
      PermGroup young = young_subgroup(r, iota_support(i));
      if (young.order() == g->order() && conjugate_subgroups(*g, young)) young_i = i;
    }
    PermGroup rep_group = young_i > 0 ? young_subgroup(r, iota_support(young_i)) : *g;
    reps.push_back(ClassRep{std::move(rep_group), young_i, std::move(key)});
  }
  std::sort(reps.begin(), reps.end(), [](const ClassRep& a, const ClassRep& b) {
    bool ay = a.young_i > 0, by = b.young_i > 0;
    if (ay != by) return ay;
    if (ay && by) return a.young_i < b.young_i;
    if (a.group.order() != b.group.order()) return a.group.order() < b.group.order();
    return a.key < b.key;
  });
  for (auto& rep : reps)
    sys.colors.push_back(CosetSpace::build(std::move(rep.group), rep.young_i));
  return sys;
}

}  // namespace

std::shared_ptr<const ColorSystem> enumerate_available_colors(int r, int k, ColorMode mode) {
  static std::mutex mu;
  static std::map<std::tuple<int, int, ColorMode>, std::shared_ptr<const ColorSystem>> cache;
  std::lock_guard<std::mutex> lock(mu);
  auto key = std::make_tuple(r, ((k % r) + r) % r, mode);
  auto it = cache.find(key);
  if (it == cache.end()) {
    auto sys = std::make_shared<const ColorSystem>(build_system(r, k, mode));
    it = cache.emplace(key, std::move(sys)).first;
  }
  return it->second;
}

}  // namespace tcl
