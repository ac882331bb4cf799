// Copyright 2026 The ringchroma Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

// Optimal colouring of rings and of graphs that reduce to rings by
// simplicial elimination.
//
// Notation: parts are 0-based here, so X_1 of the usual 1-based write-up is
// part 0 and t_2 is the top of part 1. "Odd" and "even" always refer to the
// 1-based index, i.e. part i is odd when i % 2 == 0.

#ifndef RINGCHROMA_RING_COLORING_HPP
#define RINGCHROMA_RING_COLORING_HPP

#include <algorithm>
#include <optional>
#include <queue>
#include <vector>

#include "ringchroma/chi_structure.hpp"
#include "ringchroma/coloring.hpp"
#include "ringchroma/errors.hpp"
#include "ringchroma/graph.hpp"
#include "ringchroma/recognition.hpp"

namespace ringchroma {

/// Colours an even ring with omega colours: odd parts get colour h at height
/// h, even parts get omega - h + 1.
inline Coloring color_even_ring(const Graph& g, const RingPartition& p) {
  if (p.k() % 2 != 0) throw InputError("color_even_ring needs an even number of parts");
  require_ordered_ring(g, p);
  const int omega = omega_ring(g, p);
  Coloring c(g.vertex_count());
  for (int i = 0; i < p.k(); ++i)
    for (int h = 0; h < p.size(i); ++h)
      c.assign(p.part(i)[h], i % 2 == 0 ? h + 1 : omega - h);
  return c;
}

/// A component of the subgraph induced by two colour classes: an induced
/// path with one vertex in each of the consecutive parts first_part,
/// first_part+1, ..., plus at most one pendant per path vertex, taken from the
/// same part and strictly higher.
struct TwoColorComponent {
  std::vector<Vertex> path;
  int first_part = 0;
  /// pendants[l] hangs off path[l], or -1.
  std::vector<Vertex> pendants;
  VertexSet vertices;
};

namespace detail {

inline std::vector<VertexSet> color_pair_components(const Graph& g, const Coloring& c, Color a,
                                                    Color b) {
  Bitset mask(static_cast<std::size_t>(g.vertex_count()));
  for (Vertex v = 0; v < std::min(g.vertex_count(), c.vertex_count()); ++v)
    if (c[v] == a || c[v] == b) mask.set(static_cast<std::size_t>(v));
  return components(g, mask);
}

inline TwoColorComponent decompose_component(const Graph& g, const RingPartition& p,
                                             const PartIndex& idx, const VertexSet& comp) {
  TwoColorComponent out;
  out.vertices = comp;
  const int k = p.k();
  std::vector<std::vector<Vertex>> by_part(static_cast<std::size_t>(k));
  for (Vertex v : comp) by_part[idx.part_of[v]].push_back(v);
  auto in_comp = [&](Vertex v) { return std::binary_search(comp.begin(), comp.end(), v); };
  std::vector<Vertex> spine;
  std::vector<std::pair<Vertex, Vertex>> hang;  // (path vertex, pendant)
  for (int i = 0; i < k; ++i) {
    auto& vs = by_part[i];
    if (vs.empty()) continue;
    if (vs.size() > 2) throw StructureError("two-colour component has three vertices in one part");
    if (vs.size() == 1) {
      spine.push_back(vs[0]);
      continue;
    }
    Vertex lo = vs[0], hi = vs[1];
    if (idx.height[lo] > idx.height[hi]) std::swap(lo, hi);
    int deg_hi = 0;
    for (Vertex u : g.neighbors(hi))
      if (in_comp(u)) ++deg_hi;
    if (deg_hi != 1) throw StructureError("higher vertex of a part is not a pendant");
    spine.push_back(lo);
    hang.emplace_back(lo, hi);
  }
  // Order the spine as a path running forward through consecutive parts.
  std::vector<int> parts_met;
  for (Vertex v : spine) parts_met.push_back(idx.part_of[v]);
  std::sort(parts_met.begin(), parts_met.end());
  const int len = static_cast<int>(spine.size());
  int start = -1;
  if (len == k) {
    // Covers every part: start right after the missing spine edge.
    for (Vertex v : spine) {
      int pi = idx.part_of[v];
      bool has_prev_edge = false;
      for (Vertex u : spine)
        if (idx.part_of[u] == p.wrap(pi - 1) && g.adjacent(u, v)) has_prev_edge = true;
      if (!has_prev_edge) {
        if (start != -1) throw StructureError("spine is not a single path");
        start = pi;
      }
    }
    if (start == -1) throw StructureError("two-colour component contains a hole");
  } else {
    // The parts met form a cyclic interval; its first part follows a gap.
    std::vector<char> met(static_cast<std::size_t>(k), 0);
    for (int pi : parts_met) met[pi] = 1;
    for (int pi : parts_met)
      if (!met[p.wrap(pi - 1)]) {
        if (start != -1) throw StructureError("two-colour component spans a non-interval of parts");
        start = pi;
      }
  }
  out.first_part = start;
  for (int s = 0; s < len; ++s) {
    int pi = p.wrap(start + s);
    Vertex v = -1;
    for (Vertex u : spine)
      if (idx.part_of[u] == pi) v = u;
    if (v == -1) throw StructureError("two-colour component skips a part");
    out.path.push_back(v);
  }
  for (int a = 0; a < len; ++a)
    for (int b = a + 1; b < len; ++b)
      if (g.adjacent(out.path[a], out.path[b]) != (b == a + 1))
        throw StructureError("two-colour component spine is not an induced path");
  out.pendants.assign(static_cast<std::size_t>(len), -1);
  for (auto [lo, hi] : hang) {
    auto it = std::find(out.path.begin(), out.path.end(), lo);
    if (!g.adjacent(lo, hi)) throw StructureError("pendant not attached to its path vertex");
    out.pendants[it - out.path.begin()] = hi;
  }
  return out;
}

}  // namespace detail

/// Components of the subgraph induced by colours a and b, each split into an
/// induced path plus pendants. Throws StructureError if a component does not
/// have that shape.
inline std::vector<TwoColorComponent> two_color_components(const Graph& g, const RingPartition& p,
                                                           const Coloring& c, Color a, Color b) {
  if (a == b) throw InputError("two_color_components needs two distinct colours");
  if (!is_proper(g, c)) throw InputError("colouring is not proper");
  PartIndex idx = index_partition(g, p);
  std::vector<TwoColorComponent> out;
  for (const VertexSet& comp : detail::color_pair_components(g, c, a, b))
    out.push_back(detail::decompose_component(g, p, idx, comp));
  return out;
}

/// Independent replay of the component shape: vertices cover the component,
/// the path is induced and runs through consecutive parts, and every pendant
/// is strictly higher than its path vertex in the same part and touches
/// nothing else in the component.
inline bool check_component_shape(const Graph& g, const RingPartition& p,
                                  const TwoColorComponent& t) {
  PartIndex idx = index_partition(g, p);
  VertexSet all = t.path;
  for (Vertex v : t.pendants)
    if (v != -1) all.push_back(v);
  std::sort(all.begin(), all.end());
  if (all != t.vertices || std::adjacent_find(all.begin(), all.end()) != all.end()) return false;
  if (t.path.empty() || t.pendants.size() != t.path.size()) return false;
  if (static_cast<int>(t.path.size()) > p.k()) return false;
  for (std::size_t l = 0; l < t.path.size(); ++l) {
    if (idx.part_of[t.path[l]] != p.wrap(t.first_part + static_cast<int>(l))) return false;
    for (std::size_t m = l + 1; m < t.path.size(); ++m)
      if (g.adjacent(t.path[l], t.path[m]) != (m == l + 1)) return false;
    Vertex q = t.pendants[l];
    if (q == -1) continue;
    if (idx.part_of[q] != idx.part_of[t.path[l]] || idx.height[q] <= idx.height[t.path[l]])
      return false;
    for (Vertex u : all)
      if (u != q && g.adjacent(u, q) != (u == t.path[l])) return false;
  }
  return true;
}

/// Verdict plus, on failure, a violating (colour, component, part).
struct UnimprovabilityCertificate {
  bool verdict = true;
  Color color = 0;
  VertexSet component;
  /// 0-based part index.
  int part = -1;
};

namespace detail {

inline void require_minus_t2(const Graph& g, const RingPartition& p, const Coloring& c) {
  if (p.k() % 2 == 0) throw InputError("the ring must have an odd number of parts");
  require_ordered_ring(g, p);
  if (c.vertex_count() != g.vertex_count()) throw InputError("colouring size differs from graph");
  const Vertex t2 = p.top(1);
  for (Vertex v = 0; v < g.vertex_count(); ++v)
    if (c.has(v) == (v == t2)) throw InputError("colouring must cover exactly V minus t_2");
  if (!is_proper(g, c)) throw InputError("colouring is not proper");
}

/// Height of colour col in part i, or -1.
inline int height_of_color(const RingPartition& p, const Coloring& c, int i, Color col) {
  for (int h = 0; h < p.size(i); ++h)
    if (c[p.part(i)[h]] == col) return h;
  return -1;
}

/// a is lower than b in part i (both distinct colours).
inline bool lower_in_part(const RingPartition& p, const Coloring& c, int i, Color a, Color b) {
  int ha = height_of_color(p, c, i, a);
  int hb = height_of_color(p, c, i, b);
  if (ha == -1) return false;
  return hb == -1 || ha < hb;
}

}  // namespace detail

/// Checks the unimprovability condition of a colouring of R minus t_2.
inline UnimprovabilityCertificate is_unimprovable(const Graph& g, const RingPartition& p,
                                                  const Coloring& c) {
  detail::require_minus_t2(g, p, c);
  PartIndex idx = index_partition(g, p);
  const Vertex s1 = p.bottom(0);
  const Color c1 = c[s1];
  for (Color a : c.palette()) {
    if (a == c1) continue;
    for (const VertexSet& q : detail::color_pair_components(g, c, c1, a)) {
      if (std::binary_search(q.begin(), q.end(), s1)) continue;
      std::vector<char> met(static_cast<std::size_t>(p.k()), 0);
      for (Vertex v : q) met[idx.part_of[v]] = 1;
      for (int i = 2; i < p.k(); ++i) {
        if (!met[i]) continue;
        bool odd = i % 2 == 0;
        bool ok = odd ? detail::lower_in_part(p, c, i, c1, a) : detail::lower_in_part(p, c, i, a, c1);
        if (!ok) return {false, a, q, i};
      }
    }
  }
  return {};
}

/// Sum over parts 3..k (1-based) of the per-part rank of colour c(s_1).
inline int coloring_rank(const RingPartition& p, const Coloring& c) {
  const Color c1 = c[p.bottom(0)];
  int rank = 0;
  for (int i = 2; i < p.k(); ++i) {
    int h = detail::height_of_color(p, c, i, c1);
    if (i % 2 == 0)
      rank += h == -1 ? p.size(i) + 1 : h + 1;
    else
      rank += h == -1 ? 1 : p.size(i) - (h + 1) + 2;
  }
  return rank;
}

/// Swaps c(s_1) with the witness colour on violating components until the
/// colouring is unimprovable. If `rank_trace` is given it receives the rank
/// before the first swap and after every swap.
inline Coloring make_unimprovable(const Graph& g, const RingPartition& p, Coloring c,
                                  std::vector<int>* rank_trace = nullptr) {
  detail::require_minus_t2(g, p, c);
  const Color c1 = c[p.bottom(0)];
  int rank = coloring_rank(p, c);
  if (rank_trace) rank_trace->push_back(rank);
  for (;;) {
    UnimprovabilityCertificate cert = is_unimprovable(g, p, c);
    if (cert.verdict) return c;
    for (Vertex v : cert.component) c.assign(v, c[v] == c1 ? cert.color : c1);
    int next = coloring_rank(p, c);
    if (next >= rank) throw StructureError("swap did not decrease the rank");
    rank = next;
    if (rank_trace) rank_trace->push_back(rank);
  }
}

namespace detail {

inline Coloring greedy_along(const Graph& g, Coloring c, const std::vector<Vertex>& order) {
  std::vector<Vertex> rev(order.rbegin(), order.rend());
  greedy_extend(g, c, rev);
  return c;
}

}  // namespace detail

/// Extends a proper colouring of R minus t_2 (r colours) to a colouring of
/// the odd ring R with at most max{chi(R), r} colours.
inline Coloring extend_optimal_coloring(const Graph& g, const RingPartition& p, const Coloring& input) {
  detail::require_minus_t2(g, p, input);
  const int n = g.vertex_count();
  const Vertex t2 = p.top(1);
  const Vertex s1 = p.bottom(0);

  Coloring c = compact_colors(make_unimprovable(g, p, input));
  const int r = c.colors_used();
  if (c[s1] != r) c.swap_names(c[s1], r);

  std::vector<Vertex> rest;  // V(R) \ S
  for (Vertex v = 0; v < n; ++v)
    if (v == t2 || c[v] != r) rest.push_back(v);
  InducedSubgraph sub = induced_subgraph(g, rest);
  SimplicialSequence seq = simplicial_elimination_sequence(sub.graph);

  Coloring tilde(sub.graph.vertex_count());
  if (!seq.residual.empty()) {
    VertexSet residual_parent;
    for (Vertex v : seq.residual) residual_parent.push_back(sub.to_parent[v]);
    InducedSubgraph ring = induced_subgraph(g, residual_parent);
    std::optional<RingPartition> rp = restrict_partition(p, ring);
    if (!rp || !verify_ring_partition(ring.graph, *rp) || !verify_ring_ordering(ring.graph, *rp))
      throw StructureError("residual after removing a colour class is not a ring");
    Coloring inner = restrict_coloring(ring, c);
    Coloring done;
    if (ring.from_parent[t2] != -1) {
      inner.erase(ring.from_parent[t2]);
      done = extend_optimal_coloring(ring.graph, *rp, inner);
    } else {
      done = inner;
    }
    for (Vertex v : seq.residual) tilde.assign(v, done[ring.from_parent[sub.to_parent[v]]]);
  }
  tilde = detail::greedy_along(sub.graph, tilde, seq.order);

  if (tilde.colors_used() <= r - 1) {
    Coloring out = compact_colors(lift_coloring(sub, tilde, n));
    const Color fresh = out.max_color() + 1;
    for (Vertex v = 0; v < n; ++v)
      if (!out.has(v)) out.assign(v, fresh);
    return out;
  }
  c.assign(t2, r + 1);
  return c;
}

/// Optimal colouring of a graph in which every induced subgraph is a ring or
/// has a simplicial vertex; nullopt when G is shown to be outside that class.
inline std::optional<Coloring> color_ring_or_simplicial(const Graph& g) {
  const int n = g.vertex_count();
  if (n == 0) return Coloring(0);
  SimplicialSequence seq = simplicial_elimination_sequence(g);
  if (!seq.order.empty()) {
    Coloring c(n);
    if (!seq.residual.empty()) {
      InducedSubgraph sub = induced_subgraph(g, seq.residual);
      std::optional<Coloring> inner = color_ring_or_simplicial(sub.graph);
      if (!inner) return std::nullopt;
      c = lift_coloring(sub, *inner, n);
    }
    return detail::greedy_along(g, std::move(c), seq.order);
  }
  std::optional<RingPartition> p = recognize_ring(g);
  if (!p) return std::nullopt;
  if (p->k() % 2 == 0) return color_even_ring(g, *p);
  const Vertex t2 = p->top(1);
  VertexSet others;
  for (Vertex v = 0; v < n; ++v)
    if (v != t2) others.push_back(v);
  InducedSubgraph sub = induced_subgraph(g, others);
  std::optional<Coloring> inner = color_ring_or_simplicial(sub.graph);
  if (!inner) throw StructureError("ring minus a vertex fell outside the class");
  return extend_optimal_coloring(g, *p, lift_coloring(sub, *inner, n));
}

}  // namespace ringchroma

#endif  // RINGCHROMA_RING_COLORING_HPP
