#include "tcl/coloring.hpp"

#include <algorithm>
#include <set>

namespace tcl {

namespace {

// Position of each entry of the sorted edge within the oriented tuple, as a
// permutation: pi(i) = position of the i-th smallest vertex.
Permutation orientation_perm(const std::vector<int>& sorted_edge,
                             const std::vector<int>& oriented) {
  int r = static_cast<int>(sorted_edge.size());
  std::vector<int> img(r);
  for (int i = 0; i < r; ++i) {
    auto it = std::find(oriented.begin(), oriented.end(), sorted_edge[i]);
    if (it == oriented.end()) throw argument_error("orientation does not match edge");
    img[i] = static_cast<int>(it - oriented.begin()) + 1;
  }
  return Permutation::from_images(img);
}

void check_value(const ColorSystem& sys, const ColorValue& v) {
  if (v.color < 0 || v.color >= static_cast<int>(sys.colors.size()))
    throw argument_error("color index out of range");
  if (v.coset < 0 || v.coset >= sys.colors[v.color].coset_count)
    throw argument_error("coset id out of range");
}

// Sorted (r-1)-set -> extension vertices, deterministic order.
std::map<EdgeKey, std::vector<int>> shared_sets(const Hypergraph& h) {
  std::map<EdgeKey, std::vector<int>> out;
  std::vector<int> verts, sub;
  for (EdgeKey key : h.edge_keys()) {
    verts = Hypergraph::unpack(key, h.r());
    for (int skip = 0; skip < h.r(); ++skip) {
      sub.clear();
      for (int i = 0; i < h.r(); ++i)
        if (i != skip) sub.push_back(verts[i]);
      out[Hypergraph::pack(sub)].push_back(verts[skip]);
    }
  }
  for (auto& [k, v] : out) std::sort(v.begin(), v.end());
  return out;
}

std::vector<int> sorted_union(const std::vector<int>& w, int u) {
  std::vector<int> e = w;
  e.insert(std::upper_bound(e.begin(), e.end(), u), u);
  return e;
}

}  // namespace

const ColorValue& AccordantColoring::value_at(const std::vector<int>& sorted_edge) const {
  auto it = assignment.find(sorted_edge);
  if (it == assignment.end()) throw incomplete_coloring_error("edge has no assigned value");
  return it->second;
}

ColorValue chi(const AccordantColoring& c, const std::vector<int>& oriented_edge) {
  std::vector<int> sorted = oriented_edge;
  std::sort(sorted.begin(), sorted.end());
  const ColorValue& base = c.value_at(sorted);
  check_value(*c.system, base);
  Permutation pi = orientation_perm(sorted, oriented_edge);
  return {base.color, c.system->colors[base.color].act(pi, base.coset)};
}

VerifyResult verify_coloring(const Hypergraph& h, const AccordantColoring& c,
                             std::size_t max_violations) {
  if (!c.system) throw argument_error("coloring has no color system");
  if (c.system->r != h.r()) throw dimension_error("coloring and graph uniformity differ");
  for (const auto& [edge, value] : c.assignment) {
    if (!h.has_edge(edge)) throw argument_error("assignment contains a non-edge");
    check_value(*c.system, value);
  }
  for (const auto& edge : h.edges()) c.value_at(edge);  // completeness

  VerifyResult out;
  int r = h.r();
  uint32_t fact = Permutation::factorial(r);
  std::vector<int> x(r), y(r);
  for (const auto& [wkey, exts] : shared_sets(h)) {
    if (exts.size() < 2) continue;
    std::vector<int> w = Hypergraph::unpack(wkey, r - 1);
    for (size_t a = 0; a < exts.size(); ++a) {
      for (size_t b = a + 1; b < exts.size(); ++b) {
        int u = exts[a], v = exts[b];
        std::vector<int> e = sorted_union(w, u);
        std::vector<int> e2 = sorted_union(w, v);
        const ColorValue& val_e = c.value_at(e);
        const ColorValue& val_e2 = c.value_at(e2);
        const CosetSpace& space = c.system->colors[val_e.color];
        for (uint32_t rk = 0; rk < fact; ++rk) {
          Permutation pi = Permutation::unrank(r, rk);
          for (int i = 0; i < r; ++i) x[pi(i + 1) - 1] = e[i];
          y = x;
          *std::find(y.begin(), y.end(), u) = v;
          ColorValue cx{val_e.color, space.act(pi, val_e.coset)};
          Permutation pi_y = orientation_perm(e2, y);
          ColorValue cy{val_e2.color,
                        c.system->colors[val_e2.color].act(pi_y, val_e2.coset)};
          if (cx != cy) {
            out.ok = false;
            out.violations.push_back({x, y});
            if (out.violations.size() >= max_violations) return out;
          }
        }
      }
    }
  }
  return out;
}

ColorValue propagate_accordance(const ColorSystem& sys, const std::vector<int>& shared_sorted,
                                int u, int v, const ColorValue& value_of_wu) {
  check_value(sys, value_of_wu);
  int r = sys.r;
  if (static_cast<int>(shared_sorted.size()) != r - 1)
    throw argument_error("shared set must have r-1 vertices");
  std::vector<int> xu = shared_sorted, xv = shared_sorted;
  xu.push_back(u);
  xv.push_back(v);
  Permutation pi_u = orientation_perm(sorted_union(shared_sorted, u), xu);
  Permutation pi_v = orientation_perm(sorted_union(shared_sorted, v), xv);
  const CosetSpace& space = sys.colors[value_of_wu.color];
  return {value_of_wu.color, space.act(pi_v.inverse().compose(pi_u), value_of_wu.coset)};
}

FindResult find_coloring(const Hypergraph& h, long long k, ColorMode mode) {
  auto sys = enumerate_available_colors(h.r(), static_cast<int>(k), mode);
  FindResult out;
  out.coloring.system = sys;

  std::vector<std::vector<int>> edges = h.edges();
  std::map<std::vector<int>, int> edge_id;
  for (size_t i = 0; i < edges.size(); ++i) edge_id[edges[i]] = static_cast<int>(i);

  struct Arc {
    int other;
    std::vector<int> w;
    int u, v;  // this edge = w+u, other edge = w+v
  };
  std::vector<std::vector<Arc>> adj(edges.size());
  for (const auto& [wkey, exts] : shared_sets(h)) {
    if (exts.size() < 2) continue;
    std::vector<int> w = Hypergraph::unpack(wkey, h.r() - 1);
    for (size_t a = 0; a < exts.size(); ++a)
      for (size_t b = a + 1; b < exts.size(); ++b) {
        int ea = edge_id.at(sorted_union(w, exts[a]));
        int eb = edge_id.at(sorted_union(w, exts[b]));
        adj[ea].push_back({eb, w, exts[a], exts[b]});
        adj[eb].push_back({ea, w, exts[b], exts[a]});
      }
  }

  std::vector<int> comp(edges.size(), -1);
  for (size_t root = 0; root < edges.size(); ++root) {
    if (comp[root] != -1) continue;
    ++out.components;
    std::vector<int> members{static_cast<int>(root)};
    comp[root] = static_cast<int>(root);
    for (size_t qi = 0; qi < members.size(); ++qi)
      for (const Arc& arc : adj[members[qi]])
        if (comp[arc.other] == -1) {
          comp[arc.other] = static_cast<int>(root);
          members.push_back(arc.other);
        }

    bool colored = false;
    std::vector<ColorValue> value(edges.size());
    std::vector<bool> has_value(edges.size(), false);
    for (int j = 0; !colored && j < static_cast<int>(sys->colors.size()); ++j) {
      for (int c0 = 0; !colored && c0 < sys->colors[j].coset_count; ++c0) {
        ++out.values_tried;
        for (int m : members) has_value[m] = false;
        value[root] = {j, c0};
        has_value[root] = true;
        std::vector<int> queue{static_cast<int>(root)};
        bool conflict = false;
        for (size_t qi = 0; qi < queue.size() && !conflict; ++qi) {
          int e = queue[qi];
          for (const Arc& arc : adj[e]) {
            ColorValue forced = propagate_accordance(*sys, arc.w, arc.u, arc.v, value[e]);
            if (!has_value[arc.other]) {
              value[arc.other] = forced;
              has_value[arc.other] = true;
              queue.push_back(arc.other);
            } else if (value[arc.other] != forced) {
              conflict = true;
              break;
            }
          }
        }
        if (!conflict) {
          colored = true;
          for (int m : members) out.coloring.assignment[edges[m]] = value[m];
        }
      }
    }
    if (!colored) {
      for (int m : members) out.unsat_component.push_back(edges[m]);
      std::sort(out.unsat_component.begin(), out.unsat_component.end());
      out.coloring.assignment.clear();
      return out;
    }
  }

  VerifyResult check = verify_coloring(h, out.coloring, 1);
  if (!check.ok) throw error("find_coloring: propagated coloring fails verification");
  out.sat = true;
  return out;
}

PartLabeling extract_parts(const std::vector<int>& sorted_edge, const AccordantColoring& c) {
  const ColorValue& val = c.value_at(sorted_edge);
  check_value(*c.system, val);
  const CosetSpace& space = c.system->colors[val.color];
  if (space.young_i <= 0)
    throw unsupported_color_error("edge color is not a set-stabilizer class");
  Permutation inv = space.representative(val.coset).inverse();
  PartLabeling out;
  out.i = space.young_i;
  int r = static_cast<int>(sorted_edge.size());
  for (int a = 1; a <= r; ++a) {
    if (inv(a) <= space.young_i)
      out.h_plus.push_back(sorted_edge[a - 1]);
    else
      out.h_minus.push_back(sorted_edge[a - 1]);
  }
  return out;
}

std::vector<int> used_colors(const AccordantColoring& c) {
  std::set<int> seen;
  for (const auto& [edge, value] : c.assignment) seen.insert(value.color);
  return {seen.begin(), seen.end()};
}

}  // namespace tcl
