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

// Exhaustive reference computations for small graphs. Deliberately simple and
// independent of the structural algorithms: only the Graph type is shared.

#ifndef RINGCHROMA_ORACLE_HPP
#define RINGCHROMA_ORACLE_HPP

#include <algorithm>
#include <bit>
#include <cstdint>
#include <functional>
#include <stdexcept>
#include <string>
#include <vector>

#include "ringchroma/coloring.hpp"
#include "ringchroma/errors.hpp"
#include "ringchroma/graph.hpp"
#include "ringchroma/recognition.hpp"

namespace ringchroma {

struct OracleCaps {
  int chi = 20;
  int omega = 40;
  int holes = 20;
  int matching = 20;
  long long hyperhole_tuples = 1'000'000;
};

namespace detail {

inline void check_cap(long long size, long long cap, const char* what) {
  if (size > cap)
    throw CapacityError(std::string(what) + ": instance size " + std::to_string(size) +
                        " exceeds cap " + std::to_string(cap));
}

// Bron-Kerbosch with pivoting over 64-bit masks (n <= 64).
inline void bron_kerbosch(const std::vector<std::uint64_t>& adj, std::uint64_t r, std::uint64_t p,
                          std::uint64_t x, int depth, int& best, std::uint64_t& best_set) {
  if (p == 0 && x == 0) {
    if (depth > best) {
      best = depth;
      best_set = r;
    }
    return;
  }
  if (depth + std::popcount(p) <= best) return;
  std::uint64_t px = p | x;
  int pivot = std::countr_zero(px);
  std::uint64_t cand = p & ~adj[pivot];
  while (cand != 0) {
    int v = std::countr_zero(cand);
    cand &= cand - 1;
    std::uint64_t bit = std::uint64_t{1} << v;
    bron_kerbosch(adj, r | bit, p & adj[v], x & adj[v], depth + 1, best, best_set);
    p &= ~bit;
    x |= bit;
  }
}

inline std::vector<std::uint64_t> masks64(const Graph& g) {
  std::vector<std::uint64_t> adj(static_cast<std::size_t>(g.vertex_count()), 0);
  for (auto [u, v] : g.edges()) {
    adj[u] |= std::uint64_t{1} << v;
    adj[v] |= std::uint64_t{1} << u;
  }
  return adj;
}

}  // namespace detail

/// Maximum clique by exhaustive search.
inline VertexSet brute_max_clique(const Graph& g, int cap = OracleCaps{}.omega) {
  detail::check_cap(g.vertex_count(), std::min(cap, 64), "brute_omega");
  if (g.vertex_count() == 0) return {};
  auto adj = detail::masks64(g);
  int best = 0;
  std::uint64_t best_set = 0;
  const int n = g.vertex_count();
  std::uint64_t all = n == 64 ? ~std::uint64_t{0} : (std::uint64_t{1} << n) - 1;
  detail::bron_kerbosch(adj, 0, all, 0, 0, best, best_set);
  VertexSet out;
  for (int v = 0; v < n; ++v)
    if ((best_set >> v) & 1U) out.push_back(v);
  return out;
}

inline int brute_omega(const Graph& g, int cap = OracleCaps{}.omega) {
  return static_cast<int>(brute_max_clique(g, cap).size());
}

inline int brute_alpha(const Graph& g, int cap = OracleCaps{}.omega) {
  detail::check_cap(g.vertex_count(), std::min(cap, 64), "brute_alpha");
  GraphBuilder b(g.vertex_count());
  for (Vertex u = 0; u < g.vertex_count(); ++u)
    for (Vertex v = u + 1; v < g.vertex_count(); ++v)
      if (!g.adjacent(u, v)) b.add_edge(u, v);
  return brute_omega(std::move(b).build(), cap);
}

struct ChiWitness {
  int chi = 0;
  Coloring coloring;
};

namespace detail {

// Backtracking r-colourability test; the next vertex is the uncoloured one
// with most distinct neighbour colours, ties by degree then identifier.
inline bool try_color(const Graph& g, int r, std::vector<int>& col) {
  const int n = g.vertex_count();
  int pick = -1, pick_sat = -1, pick_deg = -1;
  std::uint64_t pick_used = 0;
  for (Vertex v = 0; v < n; ++v) {
    if (col[v] != 0) continue;
    std::uint64_t used = 0;
    for (Vertex u : g.neighbors(v))
      if (col[u] != 0) used |= std::uint64_t{1} << col[u];
    int sat = std::popcount(used);
    if (sat > pick_sat || (sat == pick_sat && g.degree(v) > pick_deg)) {
      pick = v;
      pick_sat = sat;
      pick_deg = g.degree(v);
      pick_used = used;
    }
  }
  if (pick == -1) return true;
  // Symmetry breaking: never open more than one new colour at a time.
  int max_used = 0;
  for (int c : col) max_used = std::max(max_used, c);
  for (int c = 1; c <= std::min(r, max_used + 1); ++c) {
    if ((pick_used >> c) & 1U) continue;
    col[pick] = c;
    if (try_color(g, r, col)) return true;
    col[pick] = 0;
  }
  return false;
}

}  // namespace detail

/// Exact chromatic number with a witness colouring. Tries r = omega,
/// omega+1, ... so every smaller r has been refuted by the search.
inline ChiWitness brute_chi(const Graph& g, int cap = OracleCaps{}.chi) {
  detail::check_cap(g.vertex_count(), std::min(cap, 62), "brute_chi");
  const int n = g.vertex_count();
  ChiWitness w;
  w.coloring = Coloring(n);
  if (n == 0) return w;
  for (int r = std::max(1, brute_omega(g)); r <= n; ++r) {
    std::vector<int> col(static_cast<std::size_t>(n), 0);
    if (detail::try_color(g, r, col)) {
      w.chi = r;
      w.coloring = Coloring(col);
      return w;
    }
  }
  throw std::logic_error("brute_chi: no colouring found");
}

/// Every chordless cycle of length at least four, as a vertex sequence that
/// starts at its smallest vertex and continues towards the smaller of its two
/// neighbours.
inline std::vector<std::vector<Vertex>> enumerate_holes(const Graph& g, int cap = OracleCaps{}.holes) {
  detail::check_cap(g.vertex_count(), cap, "enumerate_holes");
  std::vector<std::vector<Vertex>> out;
  const int n = g.vertex_count();
  std::vector<Vertex> path;
  std::function<void()> grow = [&]() {
    const Vertex s = path.front();
    const Vertex last = path.back();
    for (Vertex x : g.neighbors(last)) {
      if (x <= s || std::find(path.begin(), path.end(), x) != path.end()) continue;
      bool chord = false;
      for (std::size_t i = 1; i + 1 < path.size(); ++i)
        if (g.adjacent(x, path[i])) chord = true;
      if (chord) continue;
      if (g.adjacent(x, s)) {
        if (path.size() >= 3 && path[1] < x) {
          out.push_back(path);
          out.back().push_back(x);
        }
        continue;
      }
      path.push_back(x);
      grow();
      path.pop_back();
    }
  };
  for (Vertex s = 0; s < n; ++s) {
    path = {s};
    for (Vertex x : g.neighbors(s)) {
      if (x <= s) continue;
      path = {s, x};
      grow();
    }
  }
  return out;
}

/// Largest hyperhole over all cut tuples whose tops form a hole. Reads the
/// partition order as given.
inline int brute_max_hyperhole(const Graph& g, const RingPartition& p,
                               long long cap = OracleCaps{}.hyperhole_tuples) {
  long long tuples = 1;
  for (int i = 0; i < p.k(); ++i) {
    tuples *= p.size(i);
    detail::check_cap(tuples, cap, "brute_max_hyperhole");
  }
  const int k = p.k();
  std::vector<int> cut(static_cast<std::size_t>(k), 1);
  int best = 0;
  for (;;) {
    bool hole = true;
    for (int i = 0; i < k && hole; ++i)
      for (int j = i + 1; j < k && hole; ++j) {
        bool consecutive = j == i + 1 || (i == 0 && j == k - 1);
        if (g.adjacent(p.part(i)[cut[i] - 1], p.part(j)[cut[j] - 1]) != consecutive) hole = false;
      }
    if (hole) {
      int size = 0;
      for (int c : cut) size += c;
      best = std::max(best, size);
    }
    int i = 0;
    while (i < k && cut[i] == p.size(i)) cut[i++] = 1;
    if (i == k) break;
    ++cut[i];
  }
  return best;
}

/// Maximum matching size by subset dynamic programming.
inline int brute_matching(const Graph& g, int cap = OracleCaps{}.matching) {
  detail::check_cap(g.vertex_count(), cap, "brute_matching");
  const int n = g.vertex_count();
  std::vector<signed char> memo(std::size_t{1} << n, -1);
  std::function<int(std::uint32_t)> best = [&](std::uint32_t mask) -> int {
    if (mask == 0) return 0;
    if (memo[mask] >= 0) return memo[mask];
    int v = std::countr_zero(mask);
    std::uint32_t rest = mask & ~(1U << v);
    int r = best(rest);
    for (Vertex u : g.neighbors(v))
      if ((rest >> u) & 1U) r = std::max(r, 1 + best(rest & ~(1U << u)));
    memo[mask] = static_cast<signed char>(r);
    return r;
  };
  return best(n == 32 ? ~0U : (1U << n) - 1);
}

/// True iff some clique C (possibly empty, C != V) leaves G - C disconnected.
/// Enumerates cliques directly; meant for graphs of at most 16 vertices.
inline bool brute_has_clique_cutset(const Graph& g, int cap = 16) {
  detail::check_cap(g.vertex_count(), cap, "brute_has_clique_cutset");
  const int n = g.vertex_count();
  for (std::uint32_t mask = 0; mask < (1U << n); ++mask) {
    VertexSet c, rest;
    for (int v = 0; v < n; ++v) ((mask >> v) & 1U ? c : rest).push_back(v);
    if (rest.size() < 2 || !is_clique(g, c)) continue;
    if (!induces_connected(g, rest)) return true;
  }
  return false;
}

}  // namespace ringchroma

#endif  // RINGCHROMA_ORACLE_HPP
