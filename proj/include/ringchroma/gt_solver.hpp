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

// Clique-cutset decomposition and colouring of graphs whose atoms are
// complete graphs, rings, or graphs of stability number at most two.

#ifndef RINGCHROMA_GT_SOLVER_HPP
#define RINGCHROMA_GT_SOLVER_HPP

#include <algorithm>
#include <limits>
#include <optional>
#include <queue>
#include <vector>

#include "ringchroma/chi_structure.hpp"
#include "ringchroma/coloring.hpp"
#include "ringchroma/errors.hpp"
#include "ringchroma/graph.hpp"
#include "ringchroma/matching.hpp"
#include "ringchroma/ring_coloring.hpp"

namespace ringchroma {

/// (A, B, C): A and B nonempty and anticomplete, C a (possibly empty) clique.
struct CliqueCutPartition {
  VertexSet a, b, c;

  friend bool operator==(const CliqueCutPartition&, const CliqueCutPartition&) = default;
};

inline bool is_clique_cut_partition(const Graph& g, const CliqueCutPartition& p) {
  if (p.a.empty() || p.b.empty()) return false;
  std::vector<int> where(static_cast<std::size_t>(g.vertex_count()), -1);
  auto put = [&](const VertexSet& s, int tag) {
    for (Vertex v : s) {
      if (!g.contains(v) || where[v] != -1) return false;
      where[v] = tag;
    }
    return true;
  };
  if (!put(p.a, 0) || !put(p.b, 1) || !put(p.c, 2)) return false;
  for (int w : where)
    if (w == -1) return false;
  if (!is_clique(g, p.c)) return false;
  for (Vertex u : p.a)
    for (Vertex v : g.neighbors(u))
      if (where[v] == 1) return false;
  return true;
}

/// Minimal elimination ordering by maximum cardinality search with fill
/// tracking. Returns the elimination order (first eliminated first) and the
/// higher neighbourhood of each vertex in the filled graph.
struct MinimalOrdering {
  std::vector<Vertex> order;
  std::vector<VertexSet> higher;
};

inline MinimalOrdering mcs_m(const Graph& g) {
  const int n = g.vertex_count();
  std::vector<int> weight(static_cast<std::size_t>(n), 0);
  std::vector<int> number(static_cast<std::size_t>(n), -1);
  std::vector<std::vector<Vertex>> filled(static_cast<std::size_t>(n));
  MinimalOrdering out;
  out.order.assign(static_cast<std::size_t>(n), -1);
  constexpr int kInf = std::numeric_limits<int>::max();
  for (int i = n - 1; i >= 0; --i) {
    Vertex v = -1;
    for (Vertex u = 0; u < n; ++u)
      if (number[u] == -1 && (v == -1 || weight[u] > weight[v])) v = u;
    // reach[u] = least possible maximum weight of an interior vertex on a
    // path v..u through unnumbered vertices.
    std::vector<int> reach(static_cast<std::size_t>(n), kInf);
    using Item = std::pair<int, Vertex>;
    std::priority_queue<Item, std::vector<Item>, std::greater<>> pq;
    reach[v] = -1;
    pq.emplace(-1, v);
    while (!pq.empty()) {
      auto [d, x] = pq.top();
      pq.pop();
      if (d != reach[x]) continue;
      for (Vertex y : g.neighbors(x)) {
        if (number[y] != -1 || y == v) continue;
        int through = x == v ? -1 : std::max(d, weight[x]);
        if (through < reach[y]) {
          reach[y] = through;
          pq.emplace(through, y);
        }
      }
    }
    std::vector<Vertex> bump;
    for (Vertex u = 0; u < n; ++u)
      if (u != v && number[u] == -1 && reach[u] < weight[u]) bump.push_back(u);
    for (Vertex u : bump) {
      ++weight[u];
      filled[v].push_back(u);
      filled[u].push_back(v);
    }
    number[v] = i;
    out.order[i] = v;
  }
  out.higher.assign(static_cast<std::size_t>(n), {});
  for (Vertex v = 0; v < n; ++v) {
    for (Vertex u : filled[v])
      if (number[u] > number[v]) out.higher[v].push_back(u);
    std::sort(out.higher[v].begin(), out.higher[v].end());
    out.higher[v].erase(std::unique(out.higher[v].begin(), out.higher[v].end()), out.higher[v].end());
  }
  return out;
}

namespace detail {

/// Some clique-cut-partition of g, not necessarily with an atom on the A side.
inline std::optional<CliqueCutPartition> find_clique_cut(const Graph& g) {
  const int n = g.vertex_count();
  if (n < 2) return std::nullopt;
  auto split = [&](const VertexSet& sep, Vertex x) -> std::optional<CliqueCutPartition> {
    Bitset mask = full_mask(g);
    for (Vertex s : sep) mask.reset(static_cast<std::size_t>(s));
    auto comps = components(g, mask);
    if (comps.size() < 2) return std::nullopt;
    CliqueCutPartition p;
    p.c = sep;
    for (const auto& comp : comps) {
      if (std::binary_search(comp.begin(), comp.end(), x))
        p.a = comp;
      else
        p.b.insert(p.b.end(), comp.begin(), comp.end());
    }
    std::sort(p.b.begin(), p.b.end());
    return p;
  };
  if (auto p = split({}, 0)) return p;
  MinimalOrdering mo = mcs_m(g);
  for (Vertex x : mo.order) {
    const VertexSet& s = mo.higher[x];
    if (!is_clique(g, s)) continue;
    if (auto p = split(s, x)) return p;
  }
  return std::nullopt;
}

}  // namespace detail

/// A clique-cut-partition (A, B, C) with G[A ∪ C] free of clique cutsets, or
/// nullopt when G has no clique cutset.
inline std::optional<CliqueCutPartition> clique_cutset_decompose(const Graph& g) {
  std::optional<CliqueCutPartition> cut = detail::find_clique_cut(g);
  if (!cut) return std::nullopt;
  // Shrink A while G[A ∪ C] still splits. C is a clique, so it sits on one
  // side of any inner cut; the other side becomes the new A.
  for (;;) {
    VertexSet ac = cut->a;
    ac.insert(ac.end(), cut->c.begin(), cut->c.end());
    std::sort(ac.begin(), ac.end());
    InducedSubgraph sub = induced_subgraph(g, ac);
    std::optional<CliqueCutPartition> inner = detail::find_clique_cut(sub.graph);
    if (!inner) return cut;
    auto lift = [&](const VertexSet& s) {
      VertexSet o;
      for (Vertex v : s) o.push_back(sub.to_parent[v]);
      std::sort(o.begin(), o.end());
      return o;
    };
    VertexSet ia = lift(inner->a), ib = lift(inner->b), ic = lift(inner->c);
    auto meets = [&](const VertexSet& side) {
      for (Vertex v : cut->c)
        if (std::binary_search(side.begin(), side.end(), v)) return true;
      return false;
    };
    if (meets(ia)) std::swap(ia, ib);
    CliqueCutPartition next;
    next.a = ia;
    next.c = ic;
    for (Vertex v = 0; v < g.vertex_count(); ++v)
      if (!std::binary_search(ia.begin(), ia.end(), v) && !std::binary_search(ic.begin(), ic.end(), v))
        next.b.push_back(v);
    cut = std::move(next);
  }
}

/// True iff G has no stable set of size three.
inline bool stability_le2(const Graph& g) {
  const int n = g.vertex_count();
  std::vector<Bitset> non(static_cast<std::size_t>(n));
  for (Vertex v = 0; v < n; ++v) {
    non[v] = full_mask(g);
    non[v].subtract(closed_row(g, v));
  }
  for (Vertex u = 0; u < n; ++u)
    for (Vertex v = u + 1; v < n; ++v)
      if (!g.adjacent(u, v) && non[u].intersects(non[v])) return false;
  return true;
}

/// Optimal colouring when the stability number is at most two: the pairs of a
/// maximum matching of the complement share colours, everything else is a
/// singleton class.
inline Coloring color_alpha_le2(const Graph& g) {
  if (!stability_le2(g)) throw InputError("graph has a stable set of size three");
  Matching m = max_matching_general(complement(g));
  Coloring c(g.vertex_count());
  Color next = 1;
  for (auto [u, v] : m.edges) {
    c.assign(u, next);
    c.assign(v, next);
    ++next;
  }
  for (Vertex v = 0; v < g.vertex_count(); ++v)
    if (!c.has(v)) c.assign(v, next++);
  return c;
}

inline int chi_alpha_le2(const Graph& g) {
  if (!stability_le2(g)) throw InputError("graph has a stable set of size three");
  return g.vertex_count() - static_cast<int>(max_matching_general(complement(g)).size());
}

namespace detail {

/// Optimal colouring of an atom, or nullopt.
inline std::optional<Coloring> color_atom(const Graph& atom) {
  if (std::optional<Coloring> c = color_ring_or_simplicial(atom)) return c;
  if (stability_le2(atom)) return color_alpha_le2(atom);
  return std::nullopt;
}

inline std::optional<int> chi_atom(const Graph& atom) {
  if (std::optional<int> x = chi_ring_class(atom)) return x;
  if (stability_le2(atom)) return chi_alpha_le2(atom);
  return std::nullopt;
}

inline VertexSet union_sorted(VertexSet a, const VertexSet& b) {
  a.insert(a.end(), b.begin(), b.end());
  std::sort(a.begin(), a.end());
  return a;
}

}  // namespace detail

/// Optimal colouring through clique-cutset decomposition; nullopt is a
/// truthful report that G lies outside the class.
inline std::optional<Coloring> color_gt(const Graph& g) {
  const int n = g.vertex_count();
  if (n == 0) return Coloring(0);
  std::optional<CliqueCutPartition> cut = clique_cutset_decompose(g);
  if (!cut) return detail::color_atom(g);

  InducedSubgraph side_b = induced_subgraph(g, detail::union_sorted(cut->b, cut->c));
  std::optional<Coloring> cb = color_gt(side_b.graph);
  if (!cb) return std::nullopt;
  InducedSubgraph side_a = induced_subgraph(g, detail::union_sorted(cut->a, cut->c));
  std::optional<Coloring> ca = detail::color_atom(side_a.graph);
  if (!ca) return std::nullopt;

  Coloring out = compact_colors(lift_coloring(side_a, *ca, n));
  Coloring bl = compact_colors(lift_coloring(side_b, *cb, n));
  // Rename B-side colours so they agree with the A side on C; the remaining
  // names go first-fit to the smallest unused values.
  const int rb = bl.max_color();
  std::vector<Color> rename(static_cast<std::size_t>(rb) + 1, 0);
  std::vector<char> taken(static_cast<std::size_t>(n) + 2, 0);
  for (Vertex v : cut->c) {
    rename[bl[v]] = out[v];
    taken[out[v]] = 1;
  }
  Color probe = 1;
  for (Color col = 1; col <= rb; ++col) {
    if (rename[col] != 0) continue;
    while (taken[probe]) ++probe;
    rename[col] = probe;
    taken[probe] = 1;
  }
  for (Vertex v : cut->b) out.assign(v, rename[bl[v]]);
  return out;
}

/// Chromatic number through clique-cutset decomposition; nullopt as for
/// color_gt.
inline std::optional<int> chi_gt(const Graph& g) {
  if (g.vertex_count() == 0) return 0;
  std::optional<CliqueCutPartition> cut = clique_cutset_decompose(g);
  if (!cut) return detail::chi_atom(g);
  std::optional<int> rb = chi_gt(induced_subgraph(g, detail::union_sorted(cut->b, cut->c)).graph);
  if (!rb) return std::nullopt;
  std::optional<int> ra = detail::chi_atom(induced_subgraph(g, detail::union_sorted(cut->a, cut->c)).graph);
  if (!ra) return std::nullopt;
  return std::max(*ra, *rb);
}

}  // namespace ringchroma

#endif  // RINGCHROMA_GT_SOLVER_HPP
