#include "tcl/walks.hpp"

#include <algorithm>
#include <map>
#include <numeric>

#include "tcl/permutation.hpp"

namespace tcl {

namespace {

long long normalize_residue(long long k, int r) {
  long long kk = k % r;
  return kk < 0 ? kk + r : kk;
}

long long require_nonzero_residue(long long k, int r) {
  long long kk = normalize_residue(k, r);
  if (kk == 0) throw invalid_residue_error("residue k must be nonzero modulo r");
  return kk;
}

}  // namespace

long long TightWalkDigraph::node_count() const {
  return static_cast<long long>(supports.size()) * Permutation::factorial(tuple_len());
}

std::vector<int> TightWalkDigraph::tuple_of(long long node) const {
  int tl = tuple_len();
  uint32_t fact = Permutation::factorial(tl);
  std::vector<int> set = Hypergraph::unpack(supports[node / fact], tl);
  Permutation pi = Permutation::unrank(tl, static_cast<uint32_t>(node % fact));
  std::vector<int> tuple(tl);
  for (int j = 1; j <= tl; ++j) tuple[pi(j) - 1] = set[j - 1];
  return tuple;
}

long long TightWalkDigraph::node_of(const std::vector<int>& tuple) const {
  int tl = tuple_len();
  if (static_cast<int>(tuple.size()) != tl) throw argument_error("tuple length != r-1");
  std::vector<int> sorted = tuple;
  std::sort(sorted.begin(), sorted.end());
  EdgeKey key = Hypergraph::pack(sorted);
  auto it = std::lower_bound(supports.begin(), supports.end(), key);
  if (it == supports.end() || *it != key) return -1;
  std::vector<int> img(tl);
  for (int j = 0; j < tl; ++j) {
    auto pos = std::find(tuple.begin(), tuple.end(), sorted[j]);
    if (pos == tuple.end()) return -1;  // repeated entry collapses the support
    img[j] = static_cast<int>(pos - tuple.begin()) + 1;
  }
  uint32_t rank = Permutation::from_images(img).rank();
  return static_cast<long long>(it - supports.begin()) * Permutation::factorial(tl) + rank;
}

TightWalkDigraph build_walk_digraph(const Hypergraph& h) {
  TightWalkDigraph g;
  g.r = h.r();
  int tl = g.tuple_len();

  std::vector<int> verts, sub;
  for (EdgeKey key : h.edge_keys()) {
    verts = Hypergraph::unpack(key, h.r());
    for (int skip = 0; skip < h.r(); ++skip) {
      sub.clear();
      for (int i = 0; i < h.r(); ++i)
        if (i != skip) sub.push_back(verts[i]);
      g.supports.push_back(Hypergraph::pack(sub));
    }
  }
  std::sort(g.supports.begin(), g.supports.end());
  g.supports.erase(std::unique(g.supports.begin(), g.supports.end()), g.supports.end());

  LinkIndex links(h);
  uint32_t fact = Permutation::factorial(tl);
  long long n_nodes = g.node_count();

  g.arc_offsets.assign(n_nodes + 1, 0);
  for (long long s = 0; s < static_cast<long long>(g.supports.size()); ++s) {
    long long deg = static_cast<long long>(links.extensions(g.supports[s]).size());
    for (uint32_t p = 0; p < fact; ++p) g.arc_offsets[s * fact + p + 1] = deg;
  }
  for (long long v = 0; v < n_nodes; ++v) g.arc_offsets[v + 1] += g.arc_offsets[v];

  g.arc_heads.assign(g.arc_offsets[n_nodes], -1);
  std::vector<int> next(tl);
  for (long long v = 0; v < n_nodes; ++v) {
    std::vector<int> tuple = g.tuple_of(v);
    const std::vector<int>& ext = links.extensions(g.supports[v / fact]);
    long long at = g.arc_offsets[v];
    for (int z : ext) {
      for (int j = 0; j + 1 < tl; ++j) next[j] = tuple[j + 1];
      next[tl - 1] = z;
      long long w = g.node_of(next);
      if (w < 0) throw error("walk digraph: successor tuple not indexed");
      g.arc_heads[at++] = w;
    }
  }
  return g;
}

SccDecomposition scc_periods(const TightWalkDigraph& g) {
  long long n = g.node_count();
  SccDecomposition out;
  out.comp.assign(n, -1);

  // Tarjan, iterative.
  std::vector<long long> index(n, -1), low(n, 0), stack, frame_v, frame_arc;
  std::vector<bool> on_stack(n, false);
  long long next_index = 0;
  for (long long root = 0; root < n; ++root) {
    if (index[root] != -1) continue;
    frame_v.push_back(root);
    frame_arc.push_back(g.arc_offsets[root]);
    index[root] = low[root] = next_index++;
    stack.push_back(root);
    on_stack[root] = true;
    while (!frame_v.empty()) {
      long long v = frame_v.back();
      if (frame_arc.back() < g.arc_offsets[v + 1]) {
        long long w = g.arc_heads[frame_arc.back()++];
        if (index[w] == -1) {
          index[w] = low[w] = next_index++;
          stack.push_back(w);
          on_stack[w] = true;
          frame_v.push_back(w);
          frame_arc.push_back(g.arc_offsets[w]);
        } else if (on_stack[w]) {
          low[v] = std::min(low[v], index[w]);
        }
      } else {
        frame_v.pop_back();
        frame_arc.pop_back();
        if (low[v] == index[v]) {
          int cid = out.count++;
          while (true) {
            long long w = stack.back();
            stack.pop_back();
            on_stack[w] = false;
            out.comp[w] = cid;
            if (w == v) break;
          }
        }
        if (!frame_v.empty()) low[frame_v.back()] = std::min(low[frame_v.back()], low[v]);
      }
    }
  }

  // Period of each component: gcd of lev(u)+1-lev(v) over intra-component
  // arcs, lev from a BFS inside the component.
  out.period.assign(out.count, 0);
  std::vector<long long> comp_root(out.count, -1);
  for (long long v = n - 1; v >= 0; --v) comp_root[out.comp[v]] = v;
  std::vector<long long> lev(n, -1), queue;
  for (int cid = 0; cid < out.count; ++cid) {
    long long root2 = comp_root[cid];
    queue.clear();
    queue.push_back(root2);
    lev[root2] = 0;
    for (size_t qi = 0; qi < queue.size(); ++qi) {
      long long u = queue[qi];
      for (long long a = g.arc_offsets[u]; a < g.arc_offsets[u + 1]; ++a) {
        long long w = g.arc_heads[a];
        if (out.comp[w] != cid || lev[w] != -1) continue;
        lev[w] = lev[u] + 1;
        queue.push_back(w);
      }
    }
    long long d = 0;
    for (long long u : queue) {
      for (long long a = g.arc_offsets[u]; a < g.arc_offsets[u + 1]; ++a) {
        long long w = g.arc_heads[a];
        if (out.comp[w] != cid) continue;
        d = std::gcd(d, std::abs(lev[u] + 1 - lev[w]));
      }
    }
    // Any intra-component arc closes some cycle, so d > 0 exactly when the
    // component has at least one arc and hence a cycle.
    bool has_intra = false;
    for (long long u : queue) {
      for (long long a = g.arc_offsets[u]; a < g.arc_offsets[u + 1] && !has_intra; ++a)
        if (out.comp[g.arc_heads[a]] == cid) has_intra = true;
      if (has_intra) break;
    }
    out.period[cid] = has_intra ? d : 0;
    if (has_intra && d == 0) throw error("scc period: cyclic component with zero gcd");
  }
  return out;
}

bool homfree_from_periods(const SccDecomposition& sccs, int r, long long k) {
  long long kk = require_nonzero_residue(k, r);
  for (int cid = 0; cid < sccs.count; ++cid) {
    long long d = sccs.period[cid];
    if (d > 0 && kk % std::gcd(d, static_cast<long long>(r)) == 0) return false;
  }
  return true;
}

HomfreeResult is_homfree(const TightWalkDigraph& g, const SccDecomposition& sccs, long long k) {
  int r = g.r;
  long long kk = require_nonzero_residue(k, r);
  long long n = g.node_count();

  long long root = -1;
  int cid = -1;
  for (long long v = 0; v < n; ++v) {
    long long d = sccs.period[sccs.comp[v]];
    if (d > 0 && kk % std::gcd(d, static_cast<long long>(r)) == 0) {
      root = v;
      cid = sccs.comp[v];
      break;
    }
  }
  if (root < 0) return {};

  // Forward/backward BFS inside the witness component.
  std::vector<long long> members;
  for (long long v = 0; v < n; ++v)
    if (sccs.comp[v] == cid) members.push_back(v);

  std::vector<long long> fwd(n, -1), bwd(n, -1), parent_fwd(n, -1), parent_bwd(n, -1);
  std::vector<long long> queue;
  queue.push_back(root);
  fwd[root] = 0;
  for (size_t qi = 0; qi < queue.size(); ++qi) {
    long long u = queue[qi];
    for (long long a = g.arc_offsets[u]; a < g.arc_offsets[u + 1]; ++a) {
      long long w = g.arc_heads[a];
      if (sccs.comp[w] != cid || fwd[w] != -1) continue;
      fwd[w] = fwd[u] + 1;
      parent_fwd[w] = u;
      queue.push_back(w);
    }
  }

  std::vector<std::vector<long long>> rev(members.size());
  std::vector<long long> local(n, -1);
  for (size_t i = 0; i < members.size(); ++i) local[members[i]] = static_cast<long long>(i);
  for (long long u : members)
    for (long long a = g.arc_offsets[u]; a < g.arc_offsets[u + 1]; ++a) {
      long long w = g.arc_heads[a];
      if (sccs.comp[w] == cid) rev[local[w]].push_back(u);
    }
  queue.clear();
  queue.push_back(root);
  bwd[root] = 0;
  for (size_t qi = 0; qi < queue.size(); ++qi) {
    long long w = queue[qi];
    for (long long u : rev[local[w]]) {
      if (bwd[u] != -1) continue;
      bwd[u] = bwd[w] + 1;
      parent_bwd[u] = w;
      queue.push_back(u);
    }
  }

  // Loop lengths through the root; their gcd is the component period, so the
  // residue target is reachable by combining them.
  std::map<long long, std::pair<long long, long long>> loop_arc;  // length -> (u,v)
  for (long long u : members)
    for (long long a = g.arc_offsets[u]; a < g.arc_offsets[u + 1]; ++a) {
      long long w = g.arc_heads[a];
      if (sccs.comp[w] != cid) continue;
      long long len = fwd[u] + 1 + bwd[w];
      loop_arc.emplace(len, std::make_pair(u, w));
    }
  {
    long long d = 0;
    for (const auto& [len, arc] : loop_arc) d = std::gcd(d, len);
    if (d != sccs.period[cid]) throw error("witness: loop gcd disagrees with period");
  }

  // Fewest loops, then smallest total length, reaching residue kk.
  constexpr long long inf = (1LL << 62);
  std::vector<std::pair<long long, long long>> best(r, {inf, inf});
  std::vector<std::pair<int, long long>> via(r, {-1, -1});  // (previous residue, loop length)
  best[0] = {0, 0};
  for (int sweep = 0; sweep <= r; ++sweep) {
    bool changed = false;
    for (int res = 0; res < r; ++res) {
      if (best[res].first == inf) continue;
      for (const auto& [len, arc] : loop_arc) {
        int nr = static_cast<int>((res + len) % r);
        std::pair<long long, long long> cand{best[res].first + 1, best[res].second + len};
        if (cand < best[nr]) {
          best[nr] = cand;
          via[nr] = {res, len};
          changed = true;
        }
      }
    }
    if (!changed) break;
  }
  if (best[kk].first == inf) throw error("witness: residue unreachable despite period test");

  std::vector<long long> chosen;
  for (int res = static_cast<int>(kk); res != 0;) {
    auto [prev, len] = via[res];
    chosen.push_back(len);
    res = prev;
  }

  std::vector<long long> nodes{root};
  std::vector<long long> piece;
  for (long long len : chosen) {
    auto [u, v] = loop_arc.at(len);
    piece.clear();
    for (long long x = u; x != root; x = parent_fwd[x]) piece.push_back(x);
    std::reverse(piece.begin(), piece.end());
    piece.push_back(v);
    for (long long x = v; x != root;) {
      x = parent_bwd[x];
      piece.push_back(x);
    }
    nodes.insert(nodes.end(), piece.begin(), piece.end());
  }

  HomfreeResult out;
  out.homfree = false;
  out.witness.reserve(nodes.size() - 1);
  for (size_t i = 0; i + 1 < nodes.size(); ++i) out.witness.push_back(g.tuple_of(nodes[i])[0]);
  if (static_cast<long long>(out.witness.size()) % r != kk)
    throw error("witness: assembled length has wrong residue");
  return out;
}

HomfreeResult is_homfree(const Hypergraph& h, long long k) {
  TightWalkDigraph g = build_walk_digraph(h);
  SccDecomposition sccs = scc_periods(g);
  HomfreeResult res = is_homfree(g, sccs, k);
  if (!res.homfree && !validate_walk(h, res.witness))
    throw error("witness: assembled walk fails validation");
  return res;
}

bool residue_reach_oracle(const Hypergraph& h, long long k) {
  int r = h.r();
  long long kk = require_nonzero_residue(k, r);
  TightWalkDigraph g = build_walk_digraph(h);
  long long n = g.node_count();
  long long states = n * r;

  // Kosaraju on the product with a counter modulo r: state v*r+c steps to
  // head*r+(c+1 mod r).
  std::vector<long long> order;
  order.reserve(states);
  std::vector<bool> seen(states, false);
  std::vector<long long> sv, sa;
  for (long long s0 = 0; s0 < states; ++s0) {
    if (seen[s0]) continue;
    seen[s0] = true;
    sv.assign(1, s0);
    sa.assign(1, 0);
    while (!sv.empty()) {
      long long s = sv.back();
      long long v = s / r, c = s % r;
      long long deg = g.arc_offsets[v + 1] - g.arc_offsets[v];
      if (sa.back() < deg) {
        long long t = g.arc_heads[g.arc_offsets[v] + sa.back()++] * r + (c + 1) % r;
        if (!seen[t]) {
          seen[t] = true;
          sv.push_back(t);
          sa.push_back(0);
        }
      } else {
        order.push_back(s);
        sv.pop_back();
        sa.pop_back();
      }
    }
  }

  std::vector<std::vector<long long>> rev_base(n);
  for (long long v = 0; v < n; ++v)
    for (long long a = g.arc_offsets[v]; a < g.arc_offsets[v + 1]; ++a)
      rev_base[g.arc_heads[a]].push_back(v);

  std::vector<long long> comp(states, -1);
  long long comp_count = 0;
  std::vector<long long> dfs;
  for (auto it = order.rbegin(); it != order.rend(); ++it) {
    if (comp[*it] != -1) continue;
    long long cid = comp_count++;
    dfs.assign(1, *it);
    comp[*it] = cid;
    while (!dfs.empty()) {
      long long s = dfs.back();
      dfs.pop_back();
      long long v = s / r, c = s % r;
      for (long long u : rev_base[v]) {
        long long t = u * r + (c + r - 1) % r;
        if (comp[t] == -1) {
          comp[t] = cid;
          dfs.push_back(t);
        }
      }
    }
  }

  // (v,0) and (v,kk) in one product component means a closed walk of length
  // = kk (mod r) through v exists (and conversely, repeating such a walk
  // r/gcd(kk,r) times closes the counter), so this is the reachability claim.
  for (long long v = 0; v < n; ++v)
    if (comp[v * r] == comp[v * r + kk]) return true;
  return false;
}

bool contains_cycle_hom(const Hypergraph& h, long long ell) {
  int r = h.r();
  if (ell <= r) throw argument_error("cycle length must exceed the uniformity");
  TightWalkDigraph g = build_walk_digraph(h);
  SccDecomposition sccs = scc_periods(g);
  long long n = g.node_count();

  std::vector<long long> comp_root(sccs.count, -1);
  for (long long v = n - 1; v >= 0; --v) comp_root[sccs.comp[v]] = v;

  std::vector<int> dp_comps;
  for (int cid = 0; cid < sccs.count; ++cid) {
    long long d = sccs.period[cid];
    if (d <= 0 || ell % d != 0) continue;

    std::vector<long long> members;
    for (long long v = 0; v < n; ++v)
      if (sccs.comp[v] == cid) members.push_back(v);

    long long root = comp_root[cid];
    std::vector<long long> fwd(n, -1), bwd(n, -1), queue;
    queue.push_back(root);
    fwd[root] = 0;
    for (size_t qi = 0; qi < queue.size(); ++qi) {
      long long u = queue[qi];
      for (long long a = g.arc_offsets[u]; a < g.arc_offsets[u + 1]; ++a) {
        long long w = g.arc_heads[a];
        if (sccs.comp[w] != cid || fwd[w] != -1) continue;
        fwd[w] = fwd[u] + 1;
        queue.push_back(w);
      }
    }
    std::vector<std::vector<long long>> rev(members.size());
    std::vector<long long> local(n, -1);
    for (size_t i = 0; i < members.size(); ++i) local[members[i]] = static_cast<long long>(i);
    for (long long u : members)
      for (long long a = g.arc_offsets[u]; a < g.arc_offsets[u + 1]; ++a)
        if (sccs.comp[g.arc_heads[a]] == cid) rev[local[g.arc_heads[a]]].push_back(u);
    queue.clear();
    queue.push_back(root);
    bwd[root] = 0;
    for (size_t qi = 0; qi < queue.size(); ++qi) {
      long long w = queue[qi];
      for (long long u : rev[local[w]]) {
        if (bwd[u] != -1) continue;
        bwd[u] = bwd[w] + 1;
        queue.push_back(u);
      }
    }

    long long gmin = -1, gmax = -1;
    for (long long u : members)
      for (long long a = g.arc_offsets[u]; a < g.arc_offsets[u + 1]; ++a) {
        long long w = g.arc_heads[a];
        if (sccs.comp[w] != cid) continue;
        long long len = (fwd[u] + 1 + bwd[w]) / d;
        gmin = gmin < 0 ? len : std::min(gmin, len);
        gmax = std::max(gmax, len);
      }
    // Every multiple of d at least d*(gmin-1)*gmax is a sum of root loops:
    // each residue class modulo gmin is hit by at most gmin-1 generators.
    if (ell / d >= (gmin - 1) * gmax) return true;
    dp_comps.push_back(cid);
  }

  // Exact step-count check for the remaining components.
  for (int cid : dp_comps) {
    std::vector<long long> members;
    for (long long v = 0; v < n; ++v)
      if (sccs.comp[v] == cid) members.push_back(v);
    size_t m = members.size();
    std::vector<long long> local(n, -1);
    for (size_t i = 0; i < m; ++i) local[members[i]] = static_cast<long long>(i);
    std::vector<std::vector<int>> adj(m);
    for (size_t i = 0; i < m; ++i)
      for (long long a = g.arc_offsets[members[i]]; a < g.arc_offsets[members[i] + 1]; ++a) {
        long long w = g.arc_heads[a];
        if (sccs.comp[w] == cid) adj[i].push_back(static_cast<int>(local[w]));
      }
    size_t words = (m + 63) / 64;
    std::vector<uint64_t> cur(words), nxt(words);
    for (size_t s = 0; s < m; ++s) {
      std::fill(cur.begin(), cur.end(), 0);
      cur[s / 64] |= uint64_t{1} << (s % 64);
      for (long long t = 0; t < ell; ++t) {
        std::fill(nxt.begin(), nxt.end(), 0);
        for (size_t i = 0; i < m; ++i) {
          if (!(cur[i / 64] >> (i % 64) & 1)) continue;
          for (int w : adj[i]) nxt[w / 64] |= uint64_t{1} << (w % 64);
        }
        cur.swap(nxt);
      }
      if (cur[s / 64] >> (s % 64) & 1) return true;
    }
  }
  return false;
}

bool validate_walk(const Hypergraph& h, const std::vector<int>& cyclic_vertices) {
  int r = h.r();
  long long len = static_cast<long long>(cyclic_vertices.size());
  if (len <= r) throw argument_error("walk length must exceed the uniformity");
  for (int v : cyclic_vertices)
    if (v < 1 || v > h.n()) throw argument_error("walk vertex out of range");
  std::vector<int> window(r);
  for (long long i = 0; i < len; ++i) {
    for (int j = 0; j < r; ++j) window[j] = cyclic_vertices[(i + j) % len];
    std::sort(window.begin(), window.end());
    for (int j = 1; j < r; ++j)
      if (window[j] == window[j - 1]) return false;
    if (!h.has_edge(window)) return false;
  }
  return true;
}

}  // namespace tcl
