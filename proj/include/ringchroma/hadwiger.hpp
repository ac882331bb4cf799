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

// Explicit clique minors of hyperholes, rings and hyperantiholes.

#ifndef RINGCHROMA_HADWIGER_HPP
#define RINGCHROMA_HADWIGER_HPP

#include <algorithm>
#include <cstdlib>
#include <optional>
#include <vector>

#include "ringchroma/chi_structure.hpp"
#include "ringchroma/errors.hpp"
#include "ringchroma/graph.hpp"
#include "ringchroma/matching.hpp"
#include "ringchroma/recognition.hpp"

namespace ringchroma {

/// Disjoint vertex sets; a complete-minor witness when each is connected and
/// every two are joined by an edge.
using BranchSets = std::vector<VertexSet>;

inline bool verify_minor(const Graph& g, const BranchSets& b, int target) {
  if (static_cast<int>(b.size()) < target) return false;
  std::vector<int> owner(static_cast<std::size_t>(g.vertex_count()), -1);
  for (std::size_t i = 0; i < b.size(); ++i) {
    if (b[i].empty()) return false;
    for (Vertex v : b[i]) {
      if (!g.contains(v) || owner[v] != -1) return false;
      owner[v] = static_cast<int>(i);
    }
    if (!induces_connected(g, b[i])) return false;
  }
  const std::size_t m = b.size();
  std::vector<char> touch(m * m, 0);
  for (auto [u, v] : g.edges()) {
    int a = owner[u], c = owner[v];
    if (a != -1 && c != -1 && a != c) touch[a * m + c] = touch[c * m + a] = 1;
  }
  for (std::size_t i = 0; i < m; ++i)
    for (std::size_t j = i + 1; j < m; ++j)
      if (!touch[i * m + j]) return false;
  return true;
}

namespace detail {

inline int first_min_part(const std::vector<VertexSet>& parts) {
  int best = 0;
  for (int i = 1; i < static_cast<int>(parts.size()); ++i)
    if (parts[i].size() < parts[best].size()) best = i;
  return best;
}

inline std::vector<VertexSet> rotate_parts(const std::vector<VertexSet>& parts, int start) {
  std::vector<VertexSet> out;
  const int k = static_cast<int>(parts.size());
  for (int i = 0; i < k; ++i) out.push_back(parts[(start + i) % k]);
  return out;
}

}  // namespace detail

/// Minor of a hyperhole with as many branch sets as |X_1| + omega(H - X_1),
/// X_1 a smallest part: one path per height through the parts away from the
/// heaviest consecutive pair, plus that pair as singletons.
inline BranchSets hadwiger_minor_hyperhole(const Graph& g, const RingPartition& p) {
  if (!is_hyperhole_partition(g, p)) throw InputError("partition does not describe a hyperhole");
  const int k = p.k();
  auto x = detail::rotate_parts(p.parts(), detail::first_min_part(p.parts()));
  // 0-based j in 1..k-2 maximising |X_j| + |X_{j+1}|.
  int j = 1;
  for (int t = 2; t <= k - 2; ++t)
    if (x[t].size() + x[t + 1].size() > x[j].size() + x[j + 1].size()) j = t;
  BranchSets out;
  const std::size_t paths = x[0].size();
  for (std::size_t h = 0; h < paths; ++h) {
    VertexSet path;
    for (int s = j + 2; s <= j - 1 + k; ++s) path.push_back(x[s % k][h]);
    std::sort(path.begin(), path.end());
    out.push_back(std::move(path));
  }
  for (int t : {j, j + 1})
    for (Vertex v : x[t]) out.push_back({v});
  return out;
}

/// True iff the parts partition V(A) into cliques, each anticomplete to its
/// two neighbouring parts and complete to the rest.
inline bool is_hyperantihole_partition(const Graph& g, const std::vector<VertexSet>& parts) {
  const int k = static_cast<int>(parts.size());
  if (k < 4) return false;
  std::vector<int> part_of(static_cast<std::size_t>(g.vertex_count()), -1);
  for (int i = 0; i < k; ++i) {
    if (parts[i].empty()) return false;
    for (Vertex v : parts[i]) {
      if (!g.contains(v) || part_of[v] != -1) return false;
      part_of[v] = i;
    }
  }
  for (int w : part_of)
    if (w == -1) return false;
  for (Vertex u = 0; u < g.vertex_count(); ++u)
    for (Vertex v = u + 1; v < g.vertex_count(); ++v) {
      int d = std::abs(part_of[u] - part_of[v]);
      bool want = !(d == 1 || d == k - 1);
      if (g.adjacent(u, v) != want) return false;
    }
  return true;
}

/// Hyperantihole partition of g, if any. The parts are the classes of
/// vertices with equal closed neighbourhoods, ordered along the cycle formed
/// by the anticomplete pairs, starting from the part of vertex 0 and heading
/// to the neighbouring part with the smaller least vertex.
inline std::optional<std::vector<VertexSet>> recognize_hyperantihole(const Graph& g) {
  const int n = g.vertex_count();
  if (n < 4) return std::nullopt;
  std::vector<int> cls(static_cast<std::size_t>(n), -1);
  std::vector<VertexSet> parts;
  std::vector<Bitset> rows;
  for (Vertex v = 0; v < n; ++v) rows.push_back(closed_row(g, v));
  for (Vertex v = 0; v < n; ++v) {
    if (cls[v] != -1) continue;
    cls[v] = static_cast<int>(parts.size());
    VertexSet part{v};
    for (Vertex u = v + 1; u < n; ++u)
      if (cls[u] == -1 && rows[u] == rows[v]) {
        cls[u] = cls[v];
        part.push_back(u);
      }
    parts.push_back(std::move(part));
  }
  const int k = static_cast<int>(parts.size());
  if (k < 4) return std::nullopt;
  // Quotient of the complement: parts joined when no edge runs between them.
  std::vector<VertexSet> nb(static_cast<std::size_t>(k));
  for (int i = 0; i < k; ++i)
    for (int j = 0; j < k; ++j)
      if (i != j && !g.adjacent(parts[i][0], parts[j][0])) nb[i].push_back(j);
  for (const auto& x : nb)
    if (x.size() != 2) return std::nullopt;
  std::vector<VertexSet> order{parts[0]};
  int prev = 0, cur = nb[0][0];
  while (cur != 0) {
    if (static_cast<int>(order.size()) == k) return std::nullopt;
    order.push_back(parts[cur]);
    int next = nb[cur][0] == prev ? nb[cur][1] : nb[cur][0];
    prev = cur;
    cur = next;
  }
  if (static_cast<int>(order.size()) != k) return std::nullopt;
  if (!is_hyperantihole_partition(g, order)) return std::nullopt;
  return order;
}

/// Minor of a hyperantihole with chi(A) branch sets.
inline BranchSets hadwiger_minor_hyperantihole(const Graph& g, const std::vector<VertexSet>& parts) {
  if (!is_hyperantihole_partition(g, parts)) throw InputError("not a hyperantihole partition");
  const int k = static_cast<int>(parts.size());
  BranchSets out;
  if (k == 4) {
    VertexSet a = parts[0], b = parts[1];
    a.insert(a.end(), parts[2].begin(), parts[2].end());
    b.insert(b.end(), parts[3].begin(), parts[3].end());
    for (Vertex v : a.size() >= b.size() ? a : b) out.push_back({v});
    return out;
  }
  auto x = detail::rotate_parts(parts, detail::first_min_part(parts));
  // A - X_1 is cobipartite: parts 1,3,5,... against parts 2,4,...
  VertexSet even_side, odd_side;
  for (int i = 1; i < k; ++i) {
    auto& side = i % 2 == 1 ? even_side : odd_side;
    side.insert(side.end(), x[i].begin(), x[i].end());
  }
  VertexSet clique = max_clique_cobipartite(g, even_side, odd_side);
  auto meets = [&](const VertexSet& part) {
    for (Vertex v : part)
      if (std::binary_search(clique.begin(), clique.end(), v)) return true;
    return false;
  };
  if (!meets(x[1]) && !meets(x[k - 1])) {
    for (Vertex v : clique) out.push_back({v});
    for (Vertex v : x[0]) out.push_back({v});
    return out;
  }
  if (!meets(x[1])) {
    // Mirror so the clique meets the second part.
    std::reverse(x.begin() + 1, x.end());
  }
  VertexSet far;
  for (int t : {k - 2, k - 1})
    for (Vertex v : x[t])
      if (!std::binary_search(clique.begin(), clique.end(), v)) far.push_back(v);
  for (std::size_t h = 0; h < x[0].size(); ++h) {
    VertexSet triple{x[0][h], x[2][h], far[h]};
    std::sort(triple.begin(), triple.end());
    out.push_back(std::move(triple));
  }
  for (Vertex v : clique) out.push_back({v});
  return out;
}

/// Minor of a ring with chi(R) branch sets, built on a hyperhole of the same
/// chromatic number: a maximum clique extended by the bottoms of the other
/// parts when the clique number decides chi, the maximum hyperhole otherwise.
inline BranchSets hadwiger_minor_ring(const Graph& g, const RingPartition& p) {
  require_ordered_ring(g, p);
  if (is_hyperhole_partition(g, p)) return hadwiger_minor_hyperhole(g, p);
  const int k = p.k();
  VertexSet clique = max_clique_ring(g, p);
  HyperholeSelection sel = max_hyperhole(g, p);
  std::vector<VertexSet> hparts;
  if (static_cast<int>(clique.size()) >= ceil_div(selection_size(sel), k / 2)) {
    for (int i = 0; i < k; ++i) {
      VertexSet part;
      for (Vertex v : p.part(i))
        if (std::binary_search(clique.begin(), clique.end(), v)) part.push_back(v);
      if (part.empty()) part.push_back(p.bottom(i));
      hparts.push_back(std::move(part));
    }
  } else {
    for (int i = 0; i < k; ++i)
      hparts.emplace_back(p.part(i).begin(), p.part(i).begin() + sel.cuts[i]);
  }
  VertexSet hv;
  for (const auto& part : hparts) hv.insert(hv.end(), part.begin(), part.end());
  std::sort(hv.begin(), hv.end());
  InducedSubgraph sub = induced_subgraph(g, hv);
  std::vector<VertexSet> local;
  for (const auto& part : hparts) {
    VertexSet q;
    for (Vertex v : part) q.push_back(sub.from_parent[v]);
    local.push_back(std::move(q));
  }
  BranchSets inner = hadwiger_minor_hyperhole(sub.graph, RingPartition(std::move(local)));
  BranchSets out;
  for (const auto& s : inner) {
    VertexSet t;
    for (Vertex v : s) t.push_back(sub.to_parent[v]);
    std::sort(t.begin(), t.end());
    out.push_back(std::move(t));
  }
  return out;
}

}  // namespace ringchroma

#endif  // RINGCHROMA_HADWIGER_HPP
