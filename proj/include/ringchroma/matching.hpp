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

// Maximum-cardinality matching: Edmonds' blossom algorithm for general
// graphs, Hopcroft-Karp for bipartite ones, and the Konig construction of a
// maximum stable set from a bipartite matching.

#ifndef RINGCHROMA_MATCHING_HPP
#define RINGCHROMA_MATCHING_HPP

#include <algorithm>
#include <limits>
#include <queue>
#include <vector>

#include "ringchroma/errors.hpp"
#include "ringchroma/graph.hpp"

namespace ringchroma {

struct Matching {
  /// Matched pairs (u < v), sorted.
  std::vector<Edge> edges;
  /// mate[v] is v's partner or -1.
  std::vector<Vertex> mate;

  std::size_t size() const noexcept { return edges.size(); }
};

namespace detail {

inline Matching matching_from_mate(std::vector<Vertex> mate) {
  Matching m;
  for (Vertex v = 0; v < static_cast<Vertex>(mate.size()); ++v)
    if (mate[v] > v) m.edges.emplace_back(v, mate[v]);
  m.mate = std::move(mate);
  return m;
}

// Classic O(n^3) Edmonds: one BFS per free root, blossoms contracted through
// a base array.
class Blossom {
 public:
  explicit Blossom(const Graph& g)
      : g_(g), n_(g.vertex_count()), mate_(n_, -1), parent_(n_), base_(n_), used_(n_),
        blossom_(n_) {}

  std::vector<Vertex> run() {
    for (Vertex root = 0; root < n_; ++root) {
      if (mate_[root] != -1) continue;
      Vertex v = find_path(root);
      while (v != -1) {
        Vertex pv = parent_[v];
        Vertex ppv = mate_[pv];
        mate_[v] = pv;
        mate_[pv] = v;
        v = ppv;
      }
    }
    return mate_;
  }

 private:
  Vertex lca(Vertex a, Vertex b) {
    std::vector<char> seen(n_, 0);
    for (;;) {
      a = base_[a];
      seen[a] = 1;
      if (mate_[a] == -1) break;
      a = parent_[mate_[a]];
    }
    for (;;) {
      b = base_[b];
      if (seen[b]) return b;
      b = parent_[mate_[b]];
    }
  }

  void mark_path(Vertex v, Vertex b, Vertex child) {
    while (base_[v] != b) {
      blossom_[base_[v]] = blossom_[base_[mate_[v]]] = 1;
      parent_[v] = child;
      child = mate_[v];
      v = parent_[mate_[v]];
    }
  }

  Vertex find_path(Vertex root) {
    std::fill(used_.begin(), used_.end(), 0);
    std::fill(parent_.begin(), parent_.end(), -1);
    for (Vertex i = 0; i < n_; ++i) base_[i] = i;
    used_[root] = 1;
    std::queue<Vertex> q;
    q.push(root);
    while (!q.empty()) {
      Vertex v = q.front();
      q.pop();
      for (Vertex to : g_.neighbors(v)) {
        if (base_[v] == base_[to] || mate_[v] == to) continue;
        if (to == root || (mate_[to] != -1 && parent_[mate_[to]] != -1)) {
          Vertex cb = lca(v, to);
          std::fill(blossom_.begin(), blossom_.end(), 0);
          mark_path(v, cb, to);
          mark_path(to, cb, v);
          for (Vertex i = 0; i < n_; ++i) {
            if (blossom_[base_[i]]) {
              base_[i] = cb;
              if (!used_[i]) {
                used_[i] = 1;
                q.push(i);
              }
            }
          }
        } else if (parent_[to] == -1) {
          parent_[to] = v;
          if (mate_[to] == -1) return to;
          used_[mate_[to]] = 1;
          q.push(mate_[to]);
        }
      }
    }
    return -1;
  }

  const Graph& g_;
  int n_;
  std::vector<Vertex> mate_, parent_, base_;
  std::vector<char> used_, blossom_;
};

}  // namespace detail

/// Maximum matching of an arbitrary graph.
inline Matching max_matching_general(const Graph& g) {
  return detail::matching_from_mate(detail::Blossom(g).run());
}

/// Maximum matching of a bipartite graph with the given sides.
inline Matching max_matching_bipartite(const Graph& g, std::span<const Vertex> side_a,
                                       std::span<const Vertex> side_b) {
  const int n = g.vertex_count();
  std::vector<int> side(static_cast<std::size_t>(n), -1);
  for (Vertex v : side_a) {
    check_vertex(g, v);
    if (side[v] != -1) throw InputError("bipartition sides overlap");
    side[v] = 0;
  }
  for (Vertex v : side_b) {
    check_vertex(g, v);
    if (side[v] != -1) throw InputError("bipartition sides overlap");
    side[v] = 1;
  }
  for (Vertex v = 0; v < n; ++v)
    if (side[v] == -1) throw InputError("bipartition sides do not cover the vertex set");
  for (auto [u, v] : g.edges())
    if (side[u] == side[v]) throw InputError("edge inside a bipartition side");

  std::vector<Vertex> left(side_a.begin(), side_a.end());
  std::sort(left.begin(), left.end());
  std::vector<Vertex> mate(static_cast<std::size_t>(n), -1);
  std::vector<int> dist(static_cast<std::size_t>(n));
  constexpr int kInf = std::numeric_limits<int>::max();

  auto bfs = [&]() {
    std::queue<Vertex> q;
    bool found = false;
    for (Vertex u : left) {
      if (mate[u] == -1) {
        dist[u] = 0;
        q.push(u);
      } else {
        dist[u] = kInf;
      }
    }
    while (!q.empty()) {
      Vertex u = q.front();
      q.pop();
      for (Vertex v : g.neighbors(u)) {
        Vertex w = mate[v];
        if (w == -1) {
          found = true;
        } else if (dist[w] == kInf) {
          dist[w] = dist[u] + 1;
          q.push(w);
        }
      }
    }
    return found;
  };
  auto dfs = [&](auto&& self, Vertex u) -> bool {
    for (Vertex v : g.neighbors(u)) {
      Vertex w = mate[v];
      if (w == -1 || (dist[w] == dist[u] + 1 && self(self, w))) {
        mate[u] = v;
        mate[v] = u;
        return true;
      }
    }
    dist[u] = kInf;
    return false;
  };
  while (bfs())
    for (Vertex u : left)
      if (mate[u] == -1) dfs(dfs, u);
  return detail::matching_from_mate(std::move(mate));
}

/// Maximum stable set of a bipartite graph (Konig: complement of a minimum
/// vertex cover built from a maximum matching).
inline VertexSet max_stable_bipartite(const Graph& g, std::span<const Vertex> side_a,
                                      std::span<const Vertex> side_b) {
  Matching m = max_matching_bipartite(g, side_a, side_b);
  const int n = g.vertex_count();
  std::vector<char> is_left(static_cast<std::size_t>(n), 0);
  for (Vertex v : side_a) is_left[v] = 1;
  // Z = vertices reachable from free left vertices by alternating paths.
  std::vector<char> z(static_cast<std::size_t>(n), 0);
  std::queue<Vertex> q;
  for (Vertex v : side_a)
    if (m.mate[v] == -1) {
      z[v] = 1;
      q.push(v);
    }
  while (!q.empty()) {
    Vertex u = q.front();
    q.pop();
    if (is_left[u]) {
      for (Vertex v : g.neighbors(u))
        if (!z[v] && m.mate[u] != v) {
          z[v] = 1;
          q.push(v);
        }
    } else if (m.mate[u] != -1 && !z[m.mate[u]]) {
      z[m.mate[u]] = 1;
      q.push(m.mate[u]);
    }
  }
  // Cover = (L \ Z) ∪ (R ∩ Z); stable set is the rest.
  VertexSet out;
  for (Vertex v = 0; v < n; ++v) {
    bool in_cover = is_left[v] ? !z[v] : z[v];
    if (!in_cover) out.push_back(v);
  }
  return out;
}

/// Maximum clique of g[part_a ∪ part_b] where both parts are cliques.
/// Identifiers are in g.
inline VertexSet max_clique_cobipartite(const Graph& g, std::span<const Vertex> part_a,
                                        std::span<const Vertex> part_b) {
  VertexSet all(part_a.begin(), part_a.end());
  all.insert(all.end(), part_b.begin(), part_b.end());
  std::sort(all.begin(), all.end());
  if (std::adjacent_find(all.begin(), all.end()) != all.end())
    throw InputError("cobipartite parts overlap");
  if (!is_clique(g, part_a) || !is_clique(g, part_b))
    throw InputError("cobipartite parts must be cliques");
  InducedSubgraph sub = induced_subgraph(g, all);
  // Bipartite complement between the two parts.
  const int n = sub.graph.vertex_count();
  GraphBuilder b(n);
  VertexSet la, lb;
  for (Vertex v : part_a) la.push_back(sub.from_parent[v]);
  for (Vertex v : part_b) lb.push_back(sub.from_parent[v]);
  for (Vertex x : la)
    for (Vertex y : lb)
      if (!sub.graph.adjacent(x, y)) b.add_edge(x, y);
  Graph bip = std::move(b).build();
  VertexSet stable = max_stable_bipartite(bip, la, lb);
  VertexSet out;
  for (Vertex v : stable) out.push_back(sub.to_parent[v]);
  std::sort(out.begin(), out.end());
  return out;
}

}  // namespace ringchroma

#endif  // RINGCHROMA_MATCHING_HPP
