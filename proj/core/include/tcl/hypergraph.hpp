#pragma once

#include <cstdint>
#include <unordered_map>
#include <vector>

#include "tcl/errors.hpp"

namespace tcl {

// Sorted r-subsets of {1..n} packed into 16-bit lanes, first vertex in the
// highest lane, so numeric key order is lexicographic order on the tuples.
using EdgeKey = unsigned __int128;

inline constexpr int kMaxUniformity = 8;
inline constexpr int kMaxVertices = 0xffff;

// An r-uniform hypergraph on vertex set {1..n}. Queries are const and safe to
// share across threads; add_edge is for construction only.
class Hypergraph {
 public:
  Hypergraph(int r, int n);
  static Hypergraph from_edges(int r, int n, const std::vector<std::vector<int>>& edges);

  int r() const { return r_; }
  int n() const { return n_; }
  int edge_count() const { return static_cast<int>(keys_.size()); }

  // edge must be strictly increasing; duplicates are rejected
  void add_edge(const std::vector<int>& edge);
  bool has_edge(const std::vector<int>& sorted_edge) const;
  bool has_edge_key(EdgeKey key) const;
  std::vector<std::vector<int>> edges() const;  // sorted lexicographically
  const std::vector<EdgeKey>& edge_keys() const { return keys_; }

  // Number of vertices v outside S with S+v an edge; S must have r-1 distinct
  // vertices in range.
  int codegree(const std::vector<int>& s) const;
  std::vector<int> link(const std::vector<int>& s) const;  // the extending vertices
  // Minimum codegree over all (r-1)-subsets of {1..n}; 0 when some subset
  // extends to no edge. Requires n >= r.
  int min_codegree() const;

  static EdgeKey pack(const std::vector<int>& sorted_vertices);
  static std::vector<int> unpack(EdgeKey key, int size);

  friend bool operator==(const Hypergraph& a, const Hypergraph& b) {
    return a.r_ == b.r_ && a.n_ == b.n_ && a.keys_ == b.keys_;
  }

 private:
  void check_edge(const std::vector<int>& edge) const;
  int r_;
  int n_;
  std::vector<EdgeKey> keys_;  // sorted
};

// An ordered tuple of r distinct vertices whose support is an edge.
struct OrientedEdge {
  std::vector<int> tuple;
};
bool is_orientation_of(const Hypergraph& h, const std::vector<int>& tuple);

// Mixes both 64-bit halves of a packed key so unordered containers can be
// keyed by full EdgeKeys (an xor-fold would collide for r >= 6, where keys
// exceed 64 bits).
struct EdgeKeyHash {
  size_t operator()(EdgeKey key) const {
    uint64_t x = static_cast<uint64_t>(key) ^ (static_cast<uint64_t>(key >> 64) * 0x9e3779b97f4a7c15ULL);
    x ^= x >> 30;
    x *= 0xbf58476d1ce4e5b9ULL;
    x ^= x >> 27;
    x *= 0x94d049bb133111ebULL;
    return static_cast<size_t>(x ^ (x >> 31));
  }
};

// Extension lists keyed by (r-1)-subset, shared by the walk digraph, the
// coloring constraint graph, and the embedder.
class LinkIndex {
 public:
  explicit LinkIndex(const Hypergraph& h);
  // extensions of a sorted (r-1)-subset, ascending; empty when none
  const std::vector<int>& extensions(EdgeKey subset_key) const;
  const std::unordered_map<EdgeKey, std::vector<int>, EdgeKeyHash>& buckets() const {
    return buckets_;
  }

 private:
  std::unordered_map<EdgeKey, std::vector<int>, EdgeKeyHash> buckets_;
  std::vector<int> empty_;
};

// The tight cycle C_ell^r: vertices 1..ell, edges all windows of r cyclically
// consecutive vertices. Requires ell > r.
Hypergraph tight_cycle(int r, long long ell);

// Balanced blowup: vertex v becomes class {(v-1)t+1 .. vt}; each edge expands
// to all t^r transversals of its classes.
Hypergraph blowup(const Hypergraph& h, int t);

struct EmbedOptions {
  int max_pattern_vertices = 12;
  // When the pattern is vertex-transitive the first pattern vertex may be
  // anchored to the minimum image vertex.
  bool anchor_vertex_transitive = false;
};
// Injective homomorphism test: an injection V(pattern) -> V(host) sending
// every pattern edge onto a host edge.
bool contains_injective(const Hypergraph& host, const Hypergraph& pattern,
                        const EmbedOptions& opts = {});

// Binomial coefficient, saturating at 2^62 to keep completeness checks exact
// without overflow.
uint64_t binom(uint64_t n, uint64_t k);

}  // namespace tcl
