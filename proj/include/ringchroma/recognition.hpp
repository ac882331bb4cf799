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

// Simplicial elimination, chordality, and ring recognition.

#ifndef RINGCHROMA_RECOGNITION_HPP
#define RINGCHROMA_RECOGNITION_HPP

#include <algorithm>
#include <numeric>
#include <optional>
#include <set>
#include <vector>

#include "ringchroma/errors.hpp"
#include "ringchroma/graph.hpp"

namespace ringchroma {

struct SimplicialSequence {
  /// v_1..v_t; v_i is simplicial in G minus v_1..v_{i-1}.
  std::vector<Vertex> order;
  /// Vertices left over, sorted. Empty iff the graph is chordal.
  VertexSet residual;
};

/// Maximal simplicial sequence. Maintains diff(x,y) = |N[x] \ N[y]| for every
/// live edge xy, plus the number of live neighbours y with diff(x,y) > 0, so
/// that a vertex is simplicial exactly when that count is zero. Whenever
/// several vertices are simplicial the smallest identifier goes first.
inline SimplicialSequence simplicial_elimination_sequence(const Graph& g) {
  const int n = g.vertex_count();
  const auto un = static_cast<std::size_t>(n);
  std::vector<int> diff(un * un, 0);
  std::vector<int> nonzero(un, 0);
  std::vector<Bitset> closed;
  closed.reserve(un);
  for (Vertex v = 0; v < n; ++v) closed.push_back(closed_row(g, v));
  for (Vertex x = 0; x < n; ++x)
    for (Vertex y : g.neighbors(x)) {
      int d = static_cast<int>(closed[x].count_and_not(closed[y]));
      diff[x * un + y] = d;
      if (d > 0) ++nonzero[x];
    }

  std::vector<char> alive(un, 1);
  std::set<Vertex> ready;
  for (Vertex v = 0; v < n; ++v)
    if (nonzero[v] == 0) ready.insert(v);

  SimplicialSequence out;
  while (!ready.empty()) {
    Vertex v = *ready.begin();
    ready.erase(ready.begin());
    alive[v] = 0;
    out.order.push_back(v);
    for (Vertex x : g.neighbors(v)) {
      if (!alive[x]) continue;
      // Edge xv disappears.
      if (diff[x * un + v] > 0 && --nonzero[x] == 0) ready.insert(x);
      // v leaves N[x] \ N[y] for every live neighbour y of x outside N[v].
      for (Vertex y : g.neighbors(x)) {
        if (!alive[y] || y == v || closed[v].test(static_cast<std::size_t>(y))) continue;
        int& d = diff[x * un + y];
        if (--d == 0 && --nonzero[x] == 0) ready.insert(x);
      }
    }
  }
  for (Vertex v = 0; v < n; ++v)
    if (alive[v]) out.residual.push_back(v);
  return out;
}

inline bool is_chordal(const Graph& g) {
  return simplicial_elimination_sequence(g).residual.empty();
}

inline bool is_simplicial(const Graph& g, Vertex v) {
  check_vertex(g, v);
  return is_clique(g, g.neighbors(v));
}

/// Ring partition X_1..X_k (stored 0-based). Each part is listed bottom to
/// top: parts[i][0] is s_i and parts[i].back() is t_i.
class RingPartition {
 public:
  RingPartition() = default;
  explicit RingPartition(std::vector<VertexSet> parts) : parts_(std::move(parts)) {
    if (parts_.size() < 4) throw InputError("a ring partition needs k >= 4 parts");
    for (const auto& p : parts_)
      if (p.empty()) throw InputError("ring partition parts must be nonempty");
  }

  int k() const noexcept { return static_cast<int>(parts_.size()); }
  /// Part i, 0-based and taken modulo k.
  const VertexSet& part(int i) const noexcept { return parts_[wrap(i)]; }
  const std::vector<VertexSet>& parts() const noexcept { return parts_; }
  int size(int i) const noexcept { return static_cast<int>(part(i).size()); }
  Vertex bottom(int i) const noexcept { return part(i).front(); }
  Vertex top(int i) const noexcept { return part(i).back(); }
  int wrap(int i) const noexcept { return ((i % k()) + k()) % k(); }
  std::size_t vertex_total() const {
    std::size_t s = 0;
    for (const auto& p : parts_) s += p.size();
    return s;
  }

  friend bool operator==(const RingPartition&, const RingPartition&) = default;

 private:
  std::vector<VertexSet> parts_;
};

/// part_of[v] and height[v] (0-based position inside its part).
struct PartIndex {
  std::vector<int> part_of;
  std::vector<int> height;
};

/// Throws unless the parts partition V(G).
inline PartIndex index_partition(const Graph& g, const RingPartition& p) {
  PartIndex idx;
  idx.part_of.assign(static_cast<std::size_t>(g.vertex_count()), -1);
  idx.height.assign(static_cast<std::size_t>(g.vertex_count()), -1);
  for (int i = 0; i < p.k(); ++i)
    for (std::size_t h = 0; h < p.part(i).size(); ++h) {
      Vertex v = p.part(i)[h];
      if (!g.contains(v)) throw InputError("partition names a vertex outside the graph");
      if (idx.part_of[v] != -1) throw InputError("partition parts overlap");
      idx.part_of[v] = i;
      idx.height[v] = static_cast<int>(h);
    }
  for (int x : idx.part_of)
    if (x == -1) throw InputError("partition does not cover every vertex");
  return idx;
}

namespace detail {

inline std::vector<Bitset> part_masks(const Graph& g, const RingPartition& p) {
  std::vector<Bitset> m;
  for (int i = 0; i < p.k(); ++i) m.push_back(mask_of(g, p.part(i)));
  return m;
}

inline bool comparable(const Graph& g, Vertex u, Vertex v) {
  if (!g.adjacent(u, v)) return false;
  Bitset nu = closed_row(g, u);
  Bitset nv = closed_row(g, v);
  return nu.is_subset_of(nv) || nv.is_subset_of(nu);
}

}  // namespace detail

/// Checks the four characterising conditions: parts are cliques, each part is
/// anticomplete to everything outside its neighbouring parts, each part has a
/// vertex complete to both neighbouring parts, and vertices inside a part are
/// pairwise comparable under domination. The order inside parts is ignored.
inline bool verify_ring_partition(const Graph& g, const RingPartition& p) {
  index_partition(g, p);
  const int k = p.k();
  auto masks = detail::part_masks(g, p);
  for (int i = 0; i < k; ++i) {
    const VertexSet& xi = p.part(i);
    if (!is_clique(g, xi)) return false;
    Bitset near = masks[p.wrap(i - 1)];
    near |= masks[i];
    near |= masks[p.wrap(i + 1)];
    Bitset sides = masks[p.wrap(i - 1)];
    sides |= masks[p.wrap(i + 1)];
    bool has_full = false;
    for (Vertex v : xi) {
      if (!g.row(v).is_subset_of(near)) return false;
      if (sides.is_subset_of(g.row(v))) has_full = true;
    }
    if (!has_full) return false;
    for (std::size_t a = 0; a < xi.size(); ++a)
      for (std::size_t b = a + 1; b < xi.size(); ++b)
        if (!detail::comparable(g, xi[a], xi[b])) return false;
  }
  return true;
}

/// Checks the order inside every part: closed neighbourhoods shrink from
/// bottom to top and the bottom vertex sees exactly the three parts around it.
inline bool verify_ring_ordering(const Graph& g, const RingPartition& p) {
  index_partition(g, p);
  auto masks = detail::part_masks(g, p);
  for (int i = 0; i < p.k(); ++i) {
    const VertexSet& xi = p.part(i);
    Bitset near = masks[p.wrap(i - 1)];
    near |= masks[i];
    near |= masks[p.wrap(i + 1)];
    if (!(closed_row(g, xi[0]) == near)) return false;
    for (std::size_t h = 0; h + 1 < xi.size(); ++h)
      if (!closed_row(g, xi[h + 1]).is_subset_of(closed_row(g, xi[h]))) return false;
    if (!masks[i].is_subset_of(closed_row(g, xi.back()))) return false;
  }
  return true;
}

/// Sorts one part by nonincreasing degree, ties by identifier.
inline void order_part_by_degree(const Graph& g, VertexSet& part) {
  std::sort(part.begin(), part.end(), [&](Vertex a, Vertex b) {
    if (g.degree(a) != g.degree(b)) return g.degree(a) > g.degree(b);
    return a < b;
  });
}

/// Rotates and reflects so that X_1 holds the smallest identifier and the
/// minimum of X_2 is below the minimum of X_k.
inline RingPartition canonical_orientation(RingPartition p) {
  const int k = p.k();
  std::vector<Vertex> mins;
  for (int i = 0; i < k; ++i) mins.push_back(*std::min_element(p.part(i).begin(), p.part(i).end()));
  int start = static_cast<int>(std::min_element(mins.begin(), mins.end()) - mins.begin());
  int dir = mins[p.wrap(start + 1)] < mins[p.wrap(start - 1)] ? 1 : -1;
  std::vector<VertexSet> parts;
  for (int j = 0; j < k; ++j) parts.push_back(p.part(start + dir * j));
  return RingPartition(std::move(parts));
}

/// Ring recognition through the domination-comparability relation. Returns
/// the ring partition with every part in bottom-to-top order, or nullopt when
/// G is not a ring.
inline std::optional<RingPartition> recognize_ring(const Graph& g) {
  const int n = g.vertex_count();
  if (n < 4) return std::nullopt;
  std::vector<int> uf(static_cast<std::size_t>(n));
  std::iota(uf.begin(), uf.end(), 0);
  auto find = [&](int x) {
    while (uf[x] != x) x = uf[x] = uf[uf[x]];
    return x;
  };
  std::vector<Bitset> closed;
  for (Vertex v = 0; v < n; ++v) closed.push_back(closed_row(g, v));
  for (auto [u, v] : g.edges())
    if (closed[u].is_subset_of(closed[v]) || closed[v].is_subset_of(closed[u]))
      uf[find(u)] = find(v);

  std::vector<int> comp_id(static_cast<std::size_t>(n), -1);
  std::vector<VertexSet> parts;
  for (Vertex v = 0; v < n; ++v) {
    int r = find(v);
    if (comp_id[r] == -1) {
      comp_id[r] = static_cast<int>(parts.size());
      parts.emplace_back();
    }
    parts[comp_id[r]].push_back(v);
  }
  const int k = static_cast<int>(parts.size());
  if (k < 4) return std::nullopt;
  std::vector<int> part_of(static_cast<std::size_t>(n));
  for (int i = 0; i < k; ++i)
    for (Vertex v : parts[i]) part_of[v] = i;

  for (auto& part : parts) {
    if (!is_clique(g, part)) return std::nullopt;
    order_part_by_degree(g, part);
    // Nonincreasing degree plus pairwise comparability means the closed
    // neighbourhoods are nested along the order.
    for (std::size_t h = 0; h + 1 < part.size(); ++h)
      if (!closed[part[h + 1]].is_subset_of(closed[part[h]])) return std::nullopt;
  }

  // The quotient graph must be one cycle through all parts.
  std::vector<std::set<int>> quotient(static_cast<std::size_t>(k));
  for (auto [u, v] : g.edges())
    if (part_of[u] != part_of[v]) {
      quotient[part_of[u]].insert(part_of[v]);
      quotient[part_of[v]].insert(part_of[u]);
      if (quotient[part_of[u]].size() > 2 || quotient[part_of[v]].size() > 2) return std::nullopt;
    }
  for (const auto& q : quotient)
    if (q.size() != 2) return std::nullopt;
  std::vector<int> cyc{0};
  int prev = -1, cur = 0;
  for (;;) {
    int next = *quotient[cur].begin() == prev ? *quotient[cur].rbegin() : *quotient[cur].begin();
    if (next == 0) break;
    cyc.push_back(next);
    prev = cur;
    cur = next;
    if (static_cast<int>(cyc.size()) > k) return std::nullopt;
  }
  if (static_cast<int>(cyc.size()) != k) return std::nullopt;

  std::vector<VertexSet> ordered;
  for (int i : cyc) ordered.push_back(parts[i]);
  RingPartition rp = canonical_orientation(RingPartition(std::move(ordered)));
  if (!verify_ring_partition(g, rp) || !verify_ring_ordering(g, rp)) return std::nullopt;
  return rp;
}

/// Restriction of a ring partition to an induced subgraph, keeping the
/// inherited orders. Returns nullopt if some part would become empty.
inline std::optional<RingPartition> restrict_partition(const RingPartition& p,
                                                       const InducedSubgraph& sub) {
  std::vector<VertexSet> parts;
  for (int i = 0; i < p.k(); ++i) {
    VertexSet q;
    for (Vertex v : p.part(i))
      if (sub.from_parent[v] != -1) q.push_back(sub.from_parent[v]);
    if (q.empty()) return std::nullopt;
    parts.push_back(std::move(q));
  }
  return RingPartition(std::move(parts));
}

}  // namespace ringchroma

#endif  // RINGCHROMA_RECOGNITION_HPP
