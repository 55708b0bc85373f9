#include "tcl/subgroup_lattice.hpp"

#include <algorithm>
#include <cstdint>
#include <deque>
#include <map>
#include <mutex>
#include <unordered_map>

namespace tcl {

namespace {

struct SymTable {
  int r = 0;
  uint32_t n = 0;                       // r!
  std::vector<Permutation> perms;       // rank -> permutation
  std::vector<uint16_t> mult;           // n*n, mult[a*n+b] = rank(perms[a] o perms[b])
  std::vector<uint16_t> inv;

  explicit SymTable(int r_in) : r(r_in), n(Permutation::factorial(r_in)) {
    perms.reserve(n);
    for (uint32_t i = 0; i < n; ++i) perms.push_back(Permutation::unrank(r, i));
    mult.assign(static_cast<size_t>(n) * n, 0);
    inv.assign(n, 0);
    for (uint32_t a = 0; a < n; ++a) {
      inv[a] = static_cast<uint16_t>(perms[a].inverse().rank());
      for (uint32_t b = 0; b < n; ++b)
        mult[static_cast<size_t>(a) * n + b] =
            static_cast<uint16_t>(perms[a].compose(perms[b]).rank());
    }
  }
  uint16_t mul(uint32_t a, uint32_t b) const { return mult[static_cast<size_t>(a) * n + b]; }
};

using ElemSet = std::vector<uint16_t>;  // sorted ranks

struct ElemSetHash {
  size_t operator()(const ElemSet& s) const {
    size_t h = 1469598103934665603ull;
    for (uint16_t v : s) {
      h ^= v;
      h *= 1099511628211ull;
    }
    return h;
  }
};

struct Candidate {
  ElemSet elems;
  std::vector<uint16_t> gens;
};

ElemSet close_ranks(const SymTable& t, const std::vector<uint16_t>& gens) {
  std::vector<bool> seen(t.n, false);
  std::vector<uint16_t> list;
  seen[0] = true;  // identity has rank 0
  list.push_back(0);
  for (size_t qi = 0; qi < list.size(); ++qi) {
    uint16_t x = list[qi];
    for (uint16_t g : gens) {
      uint16_t y = t.mul(x, g);
      if (!seen[y]) {
        seen[y] = true;
        list.push_back(y);
      }
    }
  }
  std::sort(list.begin(), list.end());
  return list;
}

std::vector<PermGroup> enumerate(int r) {
  SymTable t(r);
  std::unordered_map<ElemSet, size_t, ElemSetHash> index;
  std::vector<Candidate> groups;
  std::deque<size_t> work;

  auto add = [&](ElemSet elems, std::vector<uint16_t> gens) {
    auto it = index.find(elems);
    if (it != index.end()) return;
    index.emplace(elems, groups.size());
    work.push_back(groups.size());
    groups.push_back(Candidate{std::move(elems), std::move(gens)});
  };

  // seed: all cyclic subgroups
  for (uint32_t g = 0; g < t.n; ++g) {
    ElemSet elems;
    uint16_t x = 0;
    do {
      elems.push_back(x);
      x = t.mul(x, static_cast<uint16_t>(g));
    } while (x != 0);
    std::sort(elems.begin(), elems.end());
    std::vector<uint16_t> gens;
    if (g != 0) gens.push_back(static_cast<uint16_t>(g));
    add(std::move(elems), std::move(gens));
  }

  // extension closure; candidates taken up to conjugation by the subgroup,
  // which leaves the join unchanged
  while (!work.empty()) {
    size_t gi = work.front();
    work.pop_front();
    ElemSet elems = groups[gi].elems;           // copy: groups may reallocate
    std::vector<uint16_t> gens = groups[gi].gens;
    std::vector<bool> in_group(t.n, false);
    for (uint16_t e : elems) in_group[e] = true;
    std::vector<bool> visited(t.n, false);
    for (uint32_t x = 0; x < t.n; ++x) {
      if (in_group[x] || visited[x]) continue;
      // orbit of x under conjugation by the subgroup's generators
      std::vector<uint16_t> orbit{static_cast<uint16_t>(x)};
      visited[x] = true;
      for (size_t qi = 0; qi < orbit.size(); ++qi) {
        for (uint16_t h : gens) {
          uint16_t y = t.mul(t.mul(h, orbit[qi]), t.inv[h]);
          if (!visited[y]) {
            visited[y] = true;
            orbit.push_back(y);
          }
        }
      }
      std::vector<uint16_t> egens = gens;
      egens.push_back(static_cast<uint16_t>(x));
      ElemSet closed = close_ranks(t, egens);  // before the move below
      add(std::move(closed), std::move(egens));
    }
  }

  std::vector<PermGroup> out;
  out.reserve(groups.size());
  for (const auto& c : groups) {
    std::vector<Permutation> gens;
    for (uint16_t g : c.gens) gens.push_back(t.perms[g]);
    out.push_back(PermGroup::closure(r, gens));
  }
  std::sort(out.begin(), out.end(), [](const PermGroup& a, const PermGroup& b) {
    if (a.order() != b.order()) return a.order() < b.order();
    return a.elements() < b.elements();
  });
  return out;
}

}  // namespace

const std::vector<PermGroup>& all_subgroups(int r) {
  if (r < 1 || r > kMaxLatticeDegree)
    throw capability_error("all_subgroups: full enumeration capped at degree " +
                           std::to_string(kMaxLatticeDegree));
  static std::mutex mu;
  static std::map<int, std::vector<PermGroup>> cache;
  std::lock_guard<std::mutex> lock(mu);
  auto it = cache.find(r);
  if (it == cache.end()) it = cache.emplace(r, enumerate(r)).first;
  return it->second;
}

bool conjugate_subgroups(const PermGroup& a, const PermGroup& b) {
  if (a.degree() != b.degree()) return false;
  if (a.order() != b.order()) return false;
  uint32_t fact = Permutation::factorial(a.degree());
  for (uint32_t s = 0; s < fact; ++s) {
    Permutation sigma = Permutation::unrank(a.degree(), s);
    if (a.conjugated_by(sigma) == b) return true;
  }
  return false;
}

std::vector<uint32_t> conjugacy_canonical_key(const PermGroup& g) {
  uint32_t fact = Permutation::factorial(g.degree());
  std::vector<uint32_t> best;
  for (uint32_t s = 0; s < fact; ++s) {
    Permutation sigma = Permutation::unrank(g.degree(), s);
    PermGroup conj = g.conjugated_by(sigma);
    std::vector<uint32_t> key;
    key.reserve(conj.elements().size());
    for (const auto& e : conj.elements()) key.push_back(e.rank());
    if (best.empty() || key < best) best = std::move(key);
  }
  return best;
}

}  // namespace tcl
