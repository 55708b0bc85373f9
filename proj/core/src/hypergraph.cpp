#include "tcl/hypergraph.hpp"

#include <algorithm>
#include <numeric>

namespace tcl {

Hypergraph::Hypergraph(int r, int n) : r_(r), n_(n) {
  if (r < 2 || r > kMaxUniformity)
    throw capability_error("hypergraph: uniformity must be in 2.." + std::to_string(kMaxUniformity));
  if (n < 0 || n > kMaxVertices) throw capability_error("hypergraph: vertex count out of range");
}

Hypergraph Hypergraph::from_edges(int r, int n, const std::vector<std::vector<int>>& edges) {
  Hypergraph h(r, n);
  for (const auto& e : edges) h.add_edge(e);
  return h;
}

void Hypergraph::check_edge(const std::vector<int>& edge) const {
  if (static_cast<int>(edge.size()) != r_) throw argument_error("edge size != r");
  for (size_t i = 0; i < edge.size(); ++i) {
    if (edge[i] < 1 || edge[i] > n_) throw argument_error("edge vertex out of range");
    if (i > 0 && edge[i] <= edge[i - 1]) throw argument_error("edge vertices must increase");
  }
}

void Hypergraph::add_edge(const std::vector<int>& edge) {
  check_edge(edge);
  EdgeKey key = pack(edge);
  auto it = std::lower_bound(keys_.begin(), keys_.end(), key);
  if (it != keys_.end() && *it == key) throw argument_error("duplicate edge");
  keys_.insert(it, key);
}

bool Hypergraph::has_edge(const std::vector<int>& sorted_edge) const {
  if (static_cast<int>(sorted_edge.size()) != r_) return false;
  return has_edge_key(pack(sorted_edge));
}

bool Hypergraph::has_edge_key(EdgeKey key) const {
  return std::binary_search(keys_.begin(), keys_.end(), key);
}

std::vector<std::vector<int>> Hypergraph::edges() const {
  std::vector<std::vector<int>> out;
  out.reserve(keys_.size());
  for (EdgeKey k : keys_) out.push_back(unpack(k, r_));
  return out;
}

EdgeKey Hypergraph::pack(const std::vector<int>& sorted_vertices) {
  EdgeKey key = 0;
  for (int v : sorted_vertices) key = (key << 16) | static_cast<unsigned>(v);
  return key;
}

std::vector<int> Hypergraph::unpack(EdgeKey key, int size) {
  std::vector<int> out(size);
  for (int i = size - 1; i >= 0; --i) {
    out[i] = static_cast<int>(key & 0xffff);
    key >>= 16;
  }
  return out;
}

int Hypergraph::codegree(const std::vector<int>& s) const { return static_cast<int>(link(s).size()); }

std::vector<int> Hypergraph::link(const std::vector<int>& s) const {
  if (static_cast<int>(s.size()) != r_ - 1) throw argument_error("codegree: need an (r-1)-subset");
  std::vector<int> sorted = s;
  std::sort(sorted.begin(), sorted.end());
  for (size_t i = 0; i < sorted.size(); ++i) {
    if (sorted[i] < 1 || sorted[i] > n_) throw argument_error("codegree: vertex out of range");
    if (i > 0 && sorted[i] == sorted[i - 1]) throw argument_error("codegree: repeated vertex");
  }
  std::vector<int> out;
  std::vector<int> probe(r_);
  for (int v = 1; v <= n_; ++v) {
    if (std::binary_search(sorted.begin(), sorted.end(), v)) continue;
    probe.assign(sorted.begin(), sorted.end());
    probe.insert(std::upper_bound(probe.begin(), probe.end(), v), v);
    if (has_edge_key(pack(probe))) out.push_back(v);
  }
  return out;
}

int Hypergraph::min_codegree() const {
  if (n_ < r_) throw argument_error("min_codegree: need n >= r");
  std::unordered_map<EdgeKey, int, EdgeKeyHash> counts;
  std::vector<int> verts(r_);
  std::vector<int> sub(r_ - 1);
  for (EdgeKey key : keys_) {
    verts = unpack(key, r_);
    for (int skip = 0; skip < r_; ++skip) {
      sub.clear();
      for (int i = 0; i < r_; ++i)
        if (i != skip) sub.push_back(verts[i]);
      ++counts[pack(sub)];
    }
  }
  uint64_t total_subsets = binom(static_cast<uint64_t>(n_), static_cast<uint64_t>(r_ - 1));
  if (static_cast<uint64_t>(counts.size()) < total_subsets) return 0;
  int best = n_;
  for (const auto& [sk, c] : counts) best = std::min(best, c);
  return best;
}

bool is_orientation_of(const Hypergraph& h, const std::vector<int>& tuple) {
  if (static_cast<int>(tuple.size()) != h.r()) return false;
  std::vector<int> sorted = tuple;
  std::sort(sorted.begin(), sorted.end());
  for (size_t i = 1; i < sorted.size(); ++i)
    if (sorted[i] == sorted[i - 1]) return false;
  if (sorted.front() < 1 || sorted.back() > h.n()) return false;
  return h.has_edge(sorted);
}

LinkIndex::LinkIndex(const Hypergraph& h) {
  std::vector<int> verts(h.r());
  std::vector<int> sub;
  for (EdgeKey key : h.edge_keys()) {
    verts = Hypergraph::unpack(key, h.r());
    for (int skip = 0; skip < h.r(); ++skip) {
      sub.clear();
      for (int i = 0; i < h.r(); ++i)
        if (i != skip) sub.push_back(verts[i]);
      buckets_[Hypergraph::pack(sub)].push_back(verts[skip]);
    }
  }
  for (auto& [k, v] : buckets_) std::sort(v.begin(), v.end());
}

const std::vector<int>& LinkIndex::extensions(EdgeKey subset_key) const {
  auto it = buckets_.find(subset_key);
  return it == buckets_.end() ? empty_ : it->second;
}

Hypergraph tight_cycle(int r, long long ell) {
  if (ell <= r) throw argument_error("tight_cycle: need ell > r");
  if (ell > kMaxVertices) throw capability_error("tight_cycle: ell out of range");
  Hypergraph h(r, static_cast<int>(ell));
  std::vector<int> edge(r);
  for (long long start = 0; start < ell; ++start) {
    for (int j = 0; j < r; ++j) edge[j] = static_cast<int>((start + j) % ell) + 1;
    std::sort(edge.begin(), edge.end());
    h.add_edge(edge);
  }
  return h;
}

Hypergraph blowup(const Hypergraph& h, int t) {
  if (t < 1) throw argument_error("blowup: need t >= 1");
  if (static_cast<long long>(h.n()) * t > kMaxVertices)
    throw capability_error("blowup: result too large");
  Hypergraph out(h.r(), h.n() * t);
  int r = h.r();
  std::vector<int> base(r), expanded(r), choice(r, 0);
  for (EdgeKey key : h.edge_keys()) {
    base = Hypergraph::unpack(key, r);
    std::fill(choice.begin(), choice.end(), 0);
    while (true) {
      for (int i = 0; i < r; ++i) expanded[i] = (base[i] - 1) * t + choice[i] + 1;
      std::sort(expanded.begin(), expanded.end());
      out.add_edge(expanded);
      int pos = r - 1;
      while (pos >= 0 && choice[pos] == t - 1) choice[pos--] = 0;
      if (pos < 0) break;
      ++choice[pos];
    }
  }
  return out;
}

namespace {

struct Embedder {
  const Hypergraph& host;
  const Hypergraph& pattern;
  const LinkIndex& host_links;
  bool anchored;
  std::vector<std::vector<int>> pat_edges;
  std::vector<int> order;            // pattern vertices, placement order
  std::vector<std::vector<int>> close_at;  // pattern edge ids completed at step
  std::vector<int> image;            // 1-based pattern vertex -> host vertex or 0
  std::vector<bool> used;            // host vertex used
  std::vector<int> pat_degree, host_degree;

  bool run() {
    image.assign(pattern.n() + 1, 0);
    used.assign(host.n() + 1, false);
    return place(0);
  }

  bool place(size_t step) {
    if (step == order.size()) return true;
    int pv = order[step];
    // candidate images: extensions of an almost-complete edge when available
    const std::vector<int>* candidates = nullptr;
    std::vector<int> pool;
    std::vector<int> sub;
    for (int ei : close_at[step]) {
      sub.clear();
      for (int v : pat_edges[ei])
        if (v != pv) sub.push_back(image[v]);
      std::sort(sub.begin(), sub.end());
      const std::vector<int>& ext = host_links.extensions(Hypergraph::pack(sub));
      if (candidates == nullptr || ext.size() < candidates->size()) candidates = &ext;
      if (ext.empty()) return false;
    }
    if (candidates == nullptr) {
      pool.resize(host.n());
      std::iota(pool.begin(), pool.end(), 1);
      candidates = &pool;
    }
    for (int hv : *candidates) {
      if (used[hv]) continue;
      if (anchored) {
        if (step == 0) {
          // anchor: first placed vertex is the minimum of the image
        } else if (hv < image[order[0]]) {
          continue;
        }
      }
      if (host_degree[hv] < pat_degree[pv]) continue;
      image[pv] = hv;
      used[hv] = true;
      bool ok = true;
      std::vector<int> mapped;
      for (int ei : close_at[step]) {
        mapped.clear();
        for (int v : pat_edges[ei]) mapped.push_back(image[v]);
        std::sort(mapped.begin(), mapped.end());
        if (!host.has_edge(mapped)) {
          ok = false;
          break;
        }
      }
      if (ok && place(step + 1)) return true;
      image[pv] = 0;
      used[hv] = false;
    }
    return false;
  }
};

}  // namespace

bool contains_injective(const Hypergraph& host, const Hypergraph& pattern,
                        const EmbedOptions& opts) {
  if (host.r() != pattern.r()) throw dimension_error("contains_injective: uniformity mismatch");
  if (pattern.n() > opts.max_pattern_vertices)
    throw capability_error("contains_injective: pattern exceeds vertex cap " +
                           std::to_string(opts.max_pattern_vertices));
  if (pattern.n() > host.n()) return false;
  if (pattern.edge_count() == 0) return true;
  if (pattern.edge_count() > host.edge_count()) return false;

  LinkIndex links(host);
  Embedder emb{host, pattern, links, opts.anchor_vertex_transitive, pattern.edges(), {}, {}, {}, {}, {}, {}};

  emb.pat_degree.assign(pattern.n() + 1, 0);
  for (const auto& e : emb.pat_edges)
    for (int v : e) ++emb.pat_degree[v];
  emb.host_degree.assign(host.n() + 1, 0);
  for (const auto& e : host.edges())
    for (int v : e) ++emb.host_degree[v];

  // placement order: greedily maximize edges completed, then edges touched
  std::vector<bool> placed(pattern.n() + 1, false);
  std::vector<int> remaining(emb.pat_edges.size(), pattern.r());
  emb.close_at.assign(pattern.n(), {});
  for (int step = 0; step < pattern.n(); ++step) {
    int best = -1, best_complete = -1, best_touch = -1;
    for (int v = 1; v <= pattern.n(); ++v) {
      if (placed[v]) continue;
      int complete = 0, touch = 0;
      for (size_t ei = 0; ei < emb.pat_edges.size(); ++ei) {
        bool has = std::find(emb.pat_edges[ei].begin(), emb.pat_edges[ei].end(), v) !=
                   emb.pat_edges[ei].end();
        if (!has) continue;
        ++touch;
        if (remaining[ei] == 1) ++complete;
      }
      if (complete > best_complete ||
          (complete == best_complete && touch > best_touch)) {
        best = v;
        best_complete = complete;
        best_touch = touch;
      }
    }
    emb.order.push_back(best);
    placed[best] = true;
    for (size_t ei = 0; ei < emb.pat_edges.size(); ++ei) {
      bool has = std::find(emb.pat_edges[ei].begin(), emb.pat_edges[ei].end(), best) !=
                 emb.pat_edges[ei].end();
      if (has && --remaining[ei] == 0) emb.close_at[step].push_back(static_cast<int>(ei));
    }
  }
  return emb.run();
}

uint64_t binom(uint64_t n, uint64_t k) {
  if (k > n) return 0;
  k = std::min(k, n - k);
  constexpr uint64_t cap = uint64_t{1} << 62;
  unsigned __int128 acc = 1;
  for (uint64_t i = 1; i <= k; ++i) {
    acc = acc * (n - k + i) / i;
    if (acc > cap) return cap;
  }
  return static_cast<uint64_t>(acc);
}

}  // namespace tcl
