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

// Instance generators: hyperholes, hyperantiholes, their extremal members,
// random staircase rings, simplicial growth and clique-cutset gluing.

#ifndef RINGCHROMA_GENERATORS_HPP
#define RINGCHROMA_GENERATORS_HPP

#include <algorithm>
#include <cstdint>
#include <random>
#include <vector>

#include "ringchroma/errors.hpp"
#include "ringchroma/graph.hpp"
#include "ringchroma/recognition.hpp"

namespace ringchroma {

using Rng = std::mt19937_64;

struct RingInstance {
  Graph graph;
  RingPartition partition;
};

struct HyperantiholeInstance {
  Graph graph;
  std::vector<VertexSet> parts;
};

namespace detail {

inline std::vector<VertexSet> consecutive_parts(const std::vector<int>& sizes) {
  std::vector<VertexSet> parts;
  Vertex next = 0;
  for (int s : sizes) {
    VertexSet p;
    for (int h = 0; h < s; ++h) p.push_back(next++);
    parts.push_back(std::move(p));
  }
  return parts;
}

inline void require_sizes(int k, const std::vector<int>& sizes) {
  if (k < 4) throw InputError("k must be at least 4");
  if (static_cast<int>(sizes.size()) != k) throw InputError("need exactly k part sizes");
  for (int s : sizes)
    if (s < 1) throw InputError("part sizes must be positive");
}

inline int uniform(Rng& rng, int lo, int hi) {
  return std::uniform_int_distribution<int>(lo, hi)(rng);
}

}  // namespace detail

/// Ring with parts of the given sizes and staircase interfaces:
/// thresholds[i][p] is the number of vertices of part i+1 adjacent to the
/// (p+1)-th vertex of part i (counted from the bottom).
struct StaircaseSpec {
  int k = 0;
  std::vector<int> sizes;
  std::vector<std::vector<int>> thresholds;
};

inline void validate_staircase(const StaircaseSpec& s) {
  detail::require_sizes(s.k, s.sizes);
  if (static_cast<int>(s.thresholds.size()) != s.k) throw InputError("need k threshold rows");
  for (int i = 0; i < s.k; ++i) {
    const auto& t = s.thresholds[i];
    const int next = s.sizes[(i + 1) % s.k];
    if (static_cast<int>(t.size()) != s.sizes[i]) throw InputError("threshold row has wrong length");
    if (t.front() != next) throw InputError("first threshold must reach the whole next part");
    for (std::size_t p = 0; p + 1 < t.size(); ++p)
      if (t[p + 1] > t[p]) throw InputError("thresholds must be nonincreasing");
    if (t.back() < 1) throw InputError("thresholds must be at least 1");
  }
}

inline RingInstance gen_ring(const StaircaseSpec& s) {
  validate_staircase(s);
  auto parts = detail::consecutive_parts(s.sizes);
  int n = 0;
  for (int x : s.sizes) n += x;
  GraphBuilder b(n);
  for (int i = 0; i < s.k; ++i) {
    const VertexSet& xi = parts[i];
    const VertexSet& xn = parts[(i + 1) % s.k];
    for (std::size_t a = 0; a < xi.size(); ++a)
      for (std::size_t c = a + 1; c < xi.size(); ++c) b.add_edge(xi[a], xi[c]);
    for (std::size_t p = 0; p < xi.size(); ++p)
      for (int q = 0; q < s.thresholds[i][p]; ++q) b.add_edge(xi[p], xn[q]);
  }
  return {std::move(b).build(), RingPartition(std::move(parts))};
}

inline StaircaseSpec full_staircase(int k, const std::vector<int>& sizes) {
  detail::require_sizes(k, sizes);
  StaircaseSpec s{k, sizes, {}};
  for (int i = 0; i < k; ++i) s.thresholds.emplace_back(sizes[i], sizes[(i + 1) % k]);
  return s;
}

inline RingInstance gen_hyperhole(int k, const std::vector<int>& sizes) {
  return gen_ring(full_staircase(k, sizes));
}

/// Odd parts floor(n/2), even parts ceil(n/2) (1-based part numbering).
inline RingInstance gen_extremal_hyperhole(int k, int n) {
  if (k < 5 || k % 2 == 0) throw InputError("k must be odd and at least 5");
  if (n < 2) throw InputError("n must be at least 2");
  std::vector<int> sizes;
  for (int i = 0; i < k; ++i) sizes.push_back(i % 2 == 0 ? n / 2 : (n + 1) / 2);
  return gen_hyperhole(k, sizes);
}

inline HyperantiholeInstance gen_hyperantihole(int k, const std::vector<int>& sizes) {
  detail::require_sizes(k, sizes);
  auto parts = detail::consecutive_parts(sizes);
  int n = 0;
  for (int x : sizes) n += x;
  GraphBuilder b(n);
  for (int i = 0; i < k; ++i)
    for (int j = i; j < k; ++j) {
      bool neighbours = (j == i + 1) || (i == 0 && j == k - 1);
      if (neighbours) continue;
      for (Vertex u : parts[i])
        for (Vertex v : parts[j])
          if (u != v) b.add_edge(u, v);
    }
  return {std::move(b).build(), std::move(parts)};
}

/// Sizes of the extremal hyperantihole with clique number n.
inline std::vector<int> extremal_hyperantihole_sizes(int k, int n) {
  if (k < 5 || k % 2 == 0) throw InputError("k must be odd and at least 5");
  if (n < (k - 1) / 2) throw InputError("n must be at least (k-1)/2");
  const int m = n / (k - 1);
  const int l = n - (k - 1) * m;
  std::vector<int> sizes;
  if (l <= (k - 3) / 2) {
    for (int i = 0; i < k; ++i) sizes.push_back(i < 2 * l ? 2 * m + 1 : 2 * m);
  } else {
    for (int i = 0; i < k; ++i) sizes.push_back(i < 2 * l - k + 1 ? 2 * m + 2 : 2 * m + 1);
  }
  return sizes;
}

inline HyperantiholeInstance gen_extremal_hyperantihole(int k, int n) {
  return gen_hyperantihole(k, extremal_hyperantihole_sizes(k, n));
}

/// Random thresholds for the given sizes; about a third of the interfaces are
/// complete.
inline StaircaseSpec random_staircase(int k, const std::vector<int>& sizes, Rng& rng) {
  detail::require_sizes(k, sizes);
  StaircaseSpec s{k, sizes, {}};
  for (int i = 0; i < k; ++i) {
    const int next = sizes[(i + 1) % k];
    std::vector<int> row(static_cast<std::size_t>(sizes[i]), next);
    if (detail::uniform(rng, 0, 2) != 0) {
      for (std::size_t p = 1; p < row.size(); ++p) row[p] = detail::uniform(rng, 1, next);
      std::sort(row.begin() + 1, row.end(), std::greater<>());
    }
    s.thresholds.push_back(std::move(row));
  }
  return s;
}

/// Random ring with k parts of sizes in 1..max_size.
inline RingInstance gen_random_ring(int k, int max_size, std::uint64_t seed) {
  if (k < 4) throw InputError("k must be at least 4");
  if (max_size < 1) throw InputError("max_size must be at least 1");
  Rng rng(seed);
  std::vector<int> sizes;
  for (int i = 0; i < k; ++i) sizes.push_back(detail::uniform(rng, 1, max_size));
  return gen_ring(random_staircase(k, sizes, rng));
}

/// Random ring with k parts and exactly n vertices in total.
inline RingInstance gen_random_ring_total(int k, int n, Rng& rng) {
  if (k < 4) throw InputError("k must be at least 4");
  if (n < k) throw InputError("need at least one vertex per part");
  std::vector<int> sizes(static_cast<std::size_t>(k), 1);
  for (int extra = n - k; extra > 0; --extra) ++sizes[detail::uniform(rng, 0, k - 1)];
  return gen_ring(random_staircase(k, sizes, rng));
}

/// Adds vertex n adjacent to a random nonempty subset of a maximal clique
/// grown greedily from a random vertex.
inline Graph add_simplicial(const Graph& g, Rng& rng) {
  const int n = g.vertex_count();
  GraphBuilder b(n + 1);
  for (auto [u, v] : g.edges()) b.add_edge(u, v);
  if (n == 0) return std::move(b).build();
  Vertex start = detail::uniform(rng, 0, n - 1);
  VertexSet cand = g.neighbors(start);
  std::shuffle(cand.begin(), cand.end(), rng);
  VertexSet clique{start};
  for (Vertex v : cand) {
    bool ok = true;
    for (Vertex c : clique)
      if (!g.adjacent(v, c)) ok = false;
    if (ok) clique.push_back(v);
  }
  std::shuffle(clique.begin(), clique.end(), rng);
  const int keep = detail::uniform(rng, 1, static_cast<int>(clique.size()));
  for (int i = 0; i < keep; ++i) b.add_edge(n, clique[i]);
  return std::move(b).build();
}

/// Glues G2 onto G1 by identifying K2 with K1 (both sorted ascending, matched
/// position by position). G1 keeps its identifiers; the other vertices of G2
/// follow in ascending order.
inline Graph compose_clique_cutset(const Graph& g1, const Graph& g2, VertexSet k1, VertexSet k2) {
  std::sort(k1.begin(), k1.end());
  std::sort(k2.begin(), k2.end());
  if (k1.size() != k2.size()) throw InputError("glued cliques differ in size");
  if (std::adjacent_find(k1.begin(), k1.end()) != k1.end() ||
      std::adjacent_find(k2.begin(), k2.end()) != k2.end())
    throw InputError("glued clique lists repeat a vertex");
  for (Vertex v : k1) check_vertex(g1, v);
  for (Vertex v : k2) check_vertex(g2, v);
  if (!is_clique(g1, k1) || !is_clique(g2, k2)) throw InputError("glued sets must be cliques");
  std::vector<Vertex> map(static_cast<std::size_t>(g2.vertex_count()), -1);
  for (std::size_t i = 0; i < k2.size(); ++i) map[k2[i]] = k1[i];
  Vertex next = g1.vertex_count();
  for (Vertex v = 0; v < g2.vertex_count(); ++v)
    if (map[v] == -1) map[v] = next++;
  GraphBuilder b(next);
  for (auto [u, v] : g1.edges()) b.add_edge(u, v);
  for (auto [u, v] : g2.edges()) b.add_edge(map[u], map[v]);
  return std::move(b).build();
}

}  // namespace ringchroma

#endif  // RINGCHROMA_GENERATORS_HPP
