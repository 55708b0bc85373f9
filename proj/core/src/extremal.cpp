#include "tcl/extremal.hpp"

#include <algorithm>
#include <array>
#include <atomic>
#include <map>
#include <numeric>
#include <thread>

#include "tcl/constructions.hpp"
#include "tcl/walks.hpp"

namespace tcl {

namespace {

long long normalize_residue(long long k, int r) {
  long long kk = k % r;
  return kk < 0 ? kk + r : kk;
}

std::vector<std::vector<int>> combinations(int n, int k) {
  std::vector<std::vector<int>> out;
  if (k > n || k < 0) return out;
  std::vector<int> pick(k);
  std::iota(pick.begin(), pick.end(), 1);
  while (true) {
    out.push_back(pick);
    int i = k - 1;
    while (i >= 0 && pick[i] == n - (k - 1 - i)) --i;
    if (i < 0) break;
    ++pick[i];
    for (int j = i + 1; j < k; ++j) pick[j] = pick[j - 1] + 1;
  }
  return out;
}

bool colex_less(const std::vector<int>& a, const std::vector<int>& b) {
  return std::lexicographical_compare(a.rbegin(), a.rend(), b.rbegin(), b.rend());
}

struct FreeChecker {
  SearchTarget target;
  int r;
  std::optional<Hypergraph> pattern;
  EmbedOptions embed;

  explicit FreeChecker(int r_, const SearchTarget& t) : target(t), r(r_) {
    if (t.kind == SearchTarget::Kind::cycle) {
      pattern = tight_cycle(r_, t.ell);
      embed.anchor_vertex_transitive = true;
      embed.max_pattern_vertices = std::max(embed.max_pattern_vertices, static_cast<int>(t.ell));
    }
  }

  bool is_free(const Hypergraph& h) const {
    if (h.edge_count() == 0) return true;
    if (target.kind == SearchTarget::Kind::homfree)
      return homfree_from_periods(scc_periods(build_walk_digraph(h)), r, target.k);
    return !contains_injective(h, *pattern, embed);
  }
};

struct Slot {
  std::vector<int> edge;
  int forced = -1;  // -1 free, 0 out, 1 in
  std::array<int, kMaxUniformity> subs{};  // indices of the r (r-1)-subsets
};

struct Plan {
  int n = 0, r = 0, t = 0;
  std::vector<std::vector<int>> subsets;  // all (r-1)-subsets, colex order
  std::vector<Slot> slots;                // grouped by stage
  std::vector<std::vector<int>> stage_slots;  // per stage, slot ids
  bool canonical_first_stage = false;
};

Plan build_plan(int n, int r, const SearchOptions& opts) {
  Plan plan;
  plan.n = n;
  plan.r = r;
  plan.subsets = combinations(n, r - 1);
  std::sort(plan.subsets.begin(), plan.subsets.end(), colex_less);
  std::map<std::vector<int>, int> sub_index;
  for (size_t i = 0; i < plan.subsets.size(); ++i)
    sub_index[plan.subsets[i]] = static_cast<int>(i);

  std::map<std::vector<int>, int> forced;
  for (const auto& e : opts.forced_in) {
    std::vector<int> s = e;
    std::sort(s.begin(), s.end());
    forced[s] = 1;
  }
  for (const auto& e : opts.forced_out) {
    std::vector<int> s = e;
    std::sort(s.begin(), s.end());
    if (forced.count(s)) throw argument_error("edge pinned both in and out");
    forced[s] = 0;
  }
  size_t matched = 0;

  plan.stage_slots.resize(plan.subsets.size());
  for (size_t s = 0; s < plan.subsets.size(); ++s) {
    const std::vector<int>& sub = plan.subsets[s];
    for (int v = sub.back() + 1; v <= n; ++v) {
      Slot slot;
      slot.edge = sub;
      slot.edge.push_back(v);
      auto it = forced.find(slot.edge);
      if (it != forced.end()) {
        slot.forced = it->second;
        ++matched;
      }
      for (int skip = 0; skip < r; ++skip) {
        std::vector<int> t_sub;
        for (int i = 0; i < r; ++i)
          if (i != skip) t_sub.push_back(slot.edge[i]);
        slot.subs[skip] = sub_index.at(t_sub);
      }
      plan.stage_slots[s].push_back(static_cast<int>(plan.slots.size()));
      plan.slots.push_back(std::move(slot));
    }
  }
  if (matched != forced.size()) throw argument_error("pinned edge is not a valid r-subset");
  plan.canonical_first_stage = forced.empty();
  return plan;
}

// Depth-first decision procedure for one codegree threshold.
struct Dfs {
  const Plan& plan;
  const FreeChecker& checker;
  int t;
  std::vector<int> cnt, undecided;
  std::vector<std::vector<int>> included;
  long long nodes = 0;
  bool found = false;
  std::vector<std::vector<int>> solution;

  Dfs(const Plan& p, const FreeChecker& c, int threshold)
      : plan(p), checker(c), t(threshold), cnt(p.subsets.size(), 0) {
    undecided.assign(plan.subsets.size(), plan.n - (plan.r - 1));
  }

  bool freeness_ok() const {
    Hypergraph h(plan.r, plan.n);
    for (const auto& e : included) h.add_edge(e);
    return checker.is_free(h);
  }

  // Applies one decision; returns false when a prune fires. Undone by undo().
  bool apply(const Slot& slot, int value) {
    ++nodes;
    for (int i = 0; i < plan.r; ++i) {
      int s = slot.subs[i];
      --undecided[s];
      if (value) ++cnt[s];
      if (cnt[s] + undecided[s] < t) {
        for (int j = i; j >= 0; --j) {
          int s2 = slot.subs[j];
          ++undecided[s2];
          if (value) --cnt[s2];
        }
        return false;
      }
    }
    if (value) included.push_back(slot.edge);
    return true;
  }

  void undo(const Slot& slot, int value) {
    for (int i = 0; i < plan.r; ++i) {
      int s = slot.subs[i];
      ++undecided[s];
      if (value) --cnt[s];
    }
    if (value) included.pop_back();
  }

  bool run_stage(size_t stage) {
    if (stage == plan.subsets.size()) {
      found = true;
      solution = included;
      return true;
    }
    return run_slot(stage, 0, true);
  }

  bool run_slot(size_t stage, size_t idx, bool prefix_alive) {
    const std::vector<int>& slots = plan.stage_slots[stage];
    if (idx == slots.size()) {
      if (cnt[stage] < t) return false;
      return run_stage(stage + 1);
    }
    const Slot& slot = plan.slots[slots[idx]];
    bool canon = plan.canonical_first_stage && stage == 0;
    for (int value : {1, 0}) {
      if (slot.forced >= 0 && value != slot.forced) continue;
      if (canon && value == 1 && !prefix_alive) continue;
      if (!apply(slot, value)) continue;
      bool ok = true;
      if (value == 1) ok = freeness_ok();
      if (ok && run_slot(stage, idx + 1, prefix_alive && value == 1)) return true;
      undo(slot, value);
    }
    return false;
  }
};

}  // namespace

ExtremalResult exact_search(int n, int r, const SearchTarget& target,
                            const SearchOptions& opts) {
  if (r < 2 || r > kMaxUniformity) throw capability_error("search: uniformity out of range");
  if (n < r) throw argument_error("search: need n >= r");
  if (target.kind == SearchTarget::Kind::homfree && normalize_residue(target.k, r) == 0)
    throw invalid_residue_error("residue k must be nonzero modulo r");
  if (target.kind == SearchTarget::Kind::cycle && target.ell <= r)
    throw argument_error("cycle length must exceed the uniformity");
  if (opts.enforce_caps) {
    bool ok = opts.max_n_override > 0
                  ? n <= opts.max_n_override
                  : ((r == 3 && n <= 7) || (r == 4 && n <= 6));
    if (!ok) throw capability_error("search: instance exceeds the exact-search caps");
  }

  ExtremalResult out;
  out.n = n;
  out.r = r;
  out.target = target;

  if (target.kind == SearchTarget::Kind::cycle && target.ell > n) {
    // Nothing that long embeds; the complete r-graph is optimal.
    Hypergraph full(r, n);
    for (auto& e : combinations(n, r)) full.add_edge(e);
    out.best_codegree = n - r + 1;
    out.witness = full;
    out.exact = true;
    return out;
  }

  FreeChecker checker(r, target);
  Plan plan = build_plan(n, r, opts);
  out.witness = Hypergraph(r, n);

  // Decide one threshold. Top-level branches are the decisions of the first
  // stage's slots (n >= r guarantees at least one stage with a slot); the
  // worker pool races them and stops at the first success.
  auto feasible = [&](int t) -> bool {
    const std::vector<int>& first = plan.stage_slots[0];
    std::vector<std::vector<int>> branches;  // values per first-stage slot
    size_t f = first.size();
    if (plan.canonical_first_stage) {
      for (size_t c = f + 1; c-- > 0;) {  // more edges first, matching in-before-out
        std::vector<int> vals(f, 0);
        std::fill(vals.begin(), vals.begin() + c, 1);
        branches.push_back(vals);
      }
    } else {
      for (long long mask = (1LL << f) - 1; mask >= 0; --mask) {
        std::vector<int> vals(f, 0);
        bool ok = true;
        for (size_t i = 0; i < f; ++i) {
          vals[i] = (mask >> i) & 1;
          int forced = plan.slots[first[i]].forced;
          if (forced >= 0 && vals[i] != forced) ok = false;
        }
        if (ok) branches.push_back(vals);
      }
    }

    std::atomic<long long> next{0};
    std::atomic<bool> found{false};
    std::atomic<long long> node_total{0};
    int workers = std::max(1, opts.threads);

    auto work = [&]() {
      while (!found.load()) {
        long long b = next.fetch_add(1);
        if (b >= static_cast<long long>(branches.size())) return;
        Dfs dfs(plan, checker, t);
        bool viable = true;
        for (size_t i = 0; viable && i < branches[b].size(); ++i) {
          const Slot& slot = plan.slots[first[i]];
          int value = branches[b][i];
          if (!dfs.apply(slot, value)) viable = false;
          else if (value == 1 && !dfs.freeness_ok()) viable = false;
        }
        if (viable && dfs.cnt[0] >= t && dfs.run_stage(1)) found.store(true);
        node_total.fetch_add(dfs.nodes);
      }
    };
    if (workers == 1) {
      work();
    } else {
      std::vector<std::thread> pool;
      for (int w = 0; w < workers; ++w) pool.emplace_back(work);
      for (auto& th : pool) th.join();
    }
    out.nodes_explored += node_total.load();
    return found.load();
  };

  // Sequential feasibility under an explicit decision set; used to extract
  // the lexicographically smallest witness edge list.
  auto feasible_seq = [&](int t, const std::map<std::vector<int>, int>& decided) -> bool {
    SearchOptions pinned;
    for (const auto& [e, v] : decided) (v ? pinned.forced_in : pinned.forced_out).push_back(e);
    Plan sub = build_plan(n, r, pinned);
    Dfs dfs(sub, checker, t);
    bool ok = dfs.run_stage(0);
    out.nodes_explored += dfs.nodes;
    return ok;
  };

  auto graph_of = [&](const std::map<std::vector<int>, int>& decided) {
    Hypergraph h(r, n);
    for (const auto& [e, v] : decided)
      if (v) h.add_edge(e);
    return h;
  };

  // Greedy lexicographic minimization over edge lists: walking the edges in
  // increasing order, stopping is best once no pinned edge remains ahead,
  // otherwise including the current edge beats any later-starting tail.
  auto lex_min_witness = [&](int t) -> Hypergraph {
    std::map<std::vector<int>, int> decided;
    for (auto e : opts.forced_in) {
      std::sort(e.begin(), e.end());
      decided[e] = 1;
    }
    for (auto e : opts.forced_out) {
      std::sort(e.begin(), e.end());
      decided[e] = 0;
    }
    std::vector<std::vector<int>> all_edges = combinations(n, r);
    for (size_t i = 0; i < all_edges.size(); ++i) {
      if (decided.count(all_edges[i])) continue;
      bool pin_ahead = false;
      for (size_t j = i + 1; j < all_edges.size() && !pin_ahead; ++j) {
        auto it = decided.find(all_edges[j]);
        pin_ahead = it != decided.end() && it->second == 1;
      }
      if (!pin_ahead) {
        Hypergraph stop = graph_of(decided);
        if (stop.min_codegree() >= t && checker.is_free(stop)) return stop;
      }
      decided[all_edges[i]] = 1;
      if (!feasible_seq(t, decided)) decided[all_edges[i]] = 0;
    }
    return graph_of(decided);
  };

  if (!feasible(0)) {
    out.best_codegree = -1;
    out.exact = true;
    return out;
  }
  int lo = 0, hi = n - r + 1;
  while (lo < hi) {
    int mid = lo + (hi - lo + 1) / 2;
    if (feasible(mid))
      lo = mid;
    else
      hi = mid - 1;
  }
  out.best_codegree = lo;
  out.witness = lex_min_witness(lo);
  out.exact = true;
  return out;
}

ExtremalResult oracle_search(int n, int r, const SearchTarget& target,
                             const std::vector<std::vector<int>>& forced_in,
                             const std::vector<std::vector<int>>& forced_out) {
  if (r < 2 || r > kMaxUniformity) throw capability_error("oracle: uniformity out of range");
  if (n < r) throw argument_error("oracle: need n >= r");
  FreeChecker checker(r, target);

  std::map<std::vector<int>, int> forced;
  for (auto e : forced_in) {
    std::sort(e.begin(), e.end());
    forced[e] = 1;
  }
  for (auto e : forced_out) {
    std::sort(e.begin(), e.end());
    if (forced.count(e)) throw argument_error("edge pinned both in and out");
    forced[e] = 0;
  }

  std::vector<std::vector<int>> base, free_slots;
  size_t matched = 0;
  for (auto& e : combinations(n, r)) {
    auto it = forced.find(e);
    if (it == forced.end()) {
      free_slots.push_back(e);
    } else {
      ++matched;
      if (it->second) base.push_back(e);
    }
  }
  if (matched != forced.size()) throw argument_error("pinned edge is not a valid r-subset");
  if (free_slots.size() > 24) throw capability_error("oracle: too many free edge slots");

  ExtremalResult out;
  out.n = n;
  out.r = r;
  out.target = target;
  out.exact = true;
  out.best_codegree = -1;

  std::vector<std::vector<int>> best_edges;
  for (long long mask = 0; mask < (1LL << free_slots.size()); ++mask) {
    ++out.nodes_explored;
    std::vector<std::vector<int>> edges = base;
    for (size_t i = 0; i < free_slots.size(); ++i)
      if (mask >> i & 1) edges.push_back(free_slots[i]);
    std::sort(edges.begin(), edges.end());
    Hypergraph h = Hypergraph::from_edges(r, n, edges);
    if (!checker.is_free(h)) continue;
    int cd = h.min_codegree();
    if (cd > out.best_codegree ||
        (cd == out.best_codegree && edges < best_edges)) {
      out.best_codegree = cd;
      best_edges = edges;
      out.witness = h;
    }
  }
  return out;
}

std::vector<DensityRow> density_table(int r, long long k, int n_lo, int n_hi,
                                      bool with_exact) {
  long long kk = normalize_residue(k, r);
  if (kk == 0) throw invalid_residue_error("residue k must be nonzero modulo r");
  long long q = r / std::gcd(static_cast<long long>(r), kk);
  int p = 0;
  for (int d = 2; d <= q; ++d)
    if (q % d == 0) {
      p = d;
      break;
    }
  if (p == 0) throw error("density table: no admissible modulus");

  std::vector<DensityRow> rows;
  for (int n = std::max(n_lo, r); n <= n_hi; ++n) {
    DensityRow row;
    row.n = n;
    row.p = p;
    row.construction_codegree = construction_min_codegree({r, p, n}).exact;
    row.ratio = static_cast<double>(row.construction_codegree) / n;
    if (with_exact && ((r == 3 && n <= 7) || (r == 4 && n <= 6)))
      row.exact_value = exact_search(n, r, SearchTarget::homfree(kk)).best_codegree;
    rows.push_back(row);
  }
  return rows;
}

}  // namespace tcl
