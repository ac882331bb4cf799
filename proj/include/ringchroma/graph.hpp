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

// Simple undirected graphs over dense vertex identifiers 0..n-1, plus the
// basic queries every other module builds on. Adjacency is kept twice: as
// bitset rows for constant-time tests and set arithmetic, and as sorted
// lists for iteration.

#ifndef RINGCHROMA_GRAPH_HPP
#define RINGCHROMA_GRAPH_HPP

#include <algorithm>
#include <numeric>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "ringchroma/bitset.hpp"
#include "ringchroma/errors.hpp"

namespace ringchroma {

using Vertex = int;
/// Vertex identifiers, sorted ascending unless a function says otherwise.
using VertexSet = std::vector<Vertex>;
using Edge = std::pair<Vertex, Vertex>;

class Graph;

/// Accumulates edges, then freezes them into an immutable Graph.
class GraphBuilder {
 public:
  explicit GraphBuilder(int vertex_count) : n_(vertex_count) {
    if (vertex_count < 0) throw InputError("negative vertex count");
    rows_.assign(static_cast<std::size_t>(n_), Bitset(static_cast<std::size_t>(n_)));
  }

  int vertex_count() const noexcept { return n_; }

  /// Adds uv. Returns false if the edge was already present.
  bool add_edge(Vertex u, Vertex v) {
    if (u < 0 || v < 0 || u >= n_ || v >= n_)
      throw InputError("edge endpoint out of range: " + std::to_string(u) + "-" +
                       std::to_string(v));
    if (u == v) throw InputError("self-loop at vertex " + std::to_string(u));
    if (rows_[u].test(static_cast<std::size_t>(v))) return false;
    rows_[u].set(static_cast<std::size_t>(v));
    rows_[v].set(static_cast<std::size_t>(u));
    return true;
  }

  bool has_edge(Vertex u, Vertex v) const {
    return rows_.at(u).test(static_cast<std::size_t>(v));
  }

  Graph build() &&;

 private:
  int n_;
  std::vector<Bitset> rows_;
};

class Graph {
 public:
  Graph() = default;

  /// Edgeless graph on n vertices.
  explicit Graph(int n) : Graph(GraphBuilder(n).build()) {}

  static Graph from_edges(int n, std::span<const Edge> edges) {
    GraphBuilder b(n);
    for (auto [u, v] : edges) b.add_edge(u, v);
    return std::move(b).build();
  }
  static Graph from_edges(int n, std::initializer_list<Edge> edges) {
    return from_edges(n, std::span<const Edge>(edges.begin(), edges.size()));
  }

  int vertex_count() const noexcept { return static_cast<int>(adj_.size()); }
  std::size_t edge_count() const noexcept { return edge_count_; }
  bool contains(Vertex v) const noexcept { return v >= 0 && v < vertex_count(); }

  bool adjacent(Vertex u, Vertex v) const noexcept {
    return rows_[u].test(static_cast<std::size_t>(v));
  }
  /// Open neighbourhood, sorted.
  const std::vector<Vertex>& neighbors(Vertex v) const noexcept { return adj_[v]; }
  /// Open neighbourhood as a bitset row.
  const Bitset& row(Vertex v) const noexcept { return rows_[v]; }
  int degree(Vertex v) const noexcept { return static_cast<int>(adj_[v].size()); }

  /// Edges with u < v in lexicographic order.
  std::vector<Edge> edges() const {
    std::vector<Edge> out;
    out.reserve(edge_count_);
    for (Vertex u = 0; u < vertex_count(); ++u)
      for (Vertex v : adj_[u])
        if (u < v) out.emplace_back(u, v);
    return out;
  }

  friend bool operator==(const Graph& a, const Graph& b) { return a.adj_ == b.adj_; }

 private:
  friend class GraphBuilder;
  explicit Graph(std::vector<Bitset> rows) : rows_(std::move(rows)) {
    adj_.resize(rows_.size());
    for (std::size_t v = 0; v < rows_.size(); ++v) {
      rows_[v].for_each([&](std::size_t u) { adj_[v].push_back(static_cast<Vertex>(u)); });
      edge_count_ += adj_[v].size();
    }
    edge_count_ /= 2;
  }

  std::vector<Bitset> rows_;
  std::vector<std::vector<Vertex>> adj_;
  std::size_t edge_count_ = 0;
};

inline Graph GraphBuilder::build() && { return Graph(std::move(rows_)); }

inline void check_vertex(const Graph& g, Vertex v) {
  if (!g.contains(v)) throw InputError("invalid vertex " + std::to_string(v));
}

/// N[v] = N(v) ∪ {v}, sorted.
inline VertexSet closed_neighborhood(const Graph& g, Vertex v) {
  check_vertex(g, v);
  VertexSet out = g.neighbors(v);
  out.insert(std::lower_bound(out.begin(), out.end(), v), v);
  return out;
}

inline Bitset closed_row(const Graph& g, Vertex v) {
  Bitset r = g.row(v);
  r.set(static_cast<std::size_t>(v));
  return r;
}

/// u dominates v iff N[v] ⊆ N[u].
inline bool dominates(const Graph& g, Vertex u, Vertex v) {
  check_vertex(g, u);
  check_vertex(g, v);
  if (u == v) throw InputError("dominates: u and v must be distinct");
  if (!g.adjacent(u, v)) return false;
  Bitset nv = g.row(v);
  nv.reset(static_cast<std::size_t>(u));
  return nv.is_subset_of(g.row(u));
}

inline bool is_clique(const Graph& g, std::span<const Vertex> s) {
  for (std::size_t i = 0; i < s.size(); ++i)
    for (std::size_t j = i + 1; j < s.size(); ++j)
      if (!g.adjacent(s[i], s[j])) return false;
  return true;
}

inline bool is_stable(const Graph& g, std::span<const Vertex> s) {
  for (std::size_t i = 0; i < s.size(); ++i)
    for (std::size_t j = i + 1; j < s.size(); ++j)
      if (g.adjacent(s[i], s[j])) return false;
  return true;
}

/// True iff s is nonempty and g[s] is connected.
inline bool induces_connected(const Graph& g, std::span<const Vertex> s) {
  if (s.empty()) return false;
  Bitset in(static_cast<std::size_t>(g.vertex_count()));
  for (Vertex v : s) in.set(static_cast<std::size_t>(v));
  Bitset seen(in.size());
  std::vector<Vertex> stack{s.front()};
  seen.set(static_cast<std::size_t>(s.front()));
  std::size_t reached = 1;
  while (!stack.empty()) {
    Vertex v = stack.back();
    stack.pop_back();
    for (Vertex u : g.neighbors(v)) {
      if (in.test(static_cast<std::size_t>(u)) && !seen.test(static_cast<std::size_t>(u))) {
        seen.set(static_cast<std::size_t>(u));
        ++reached;
        stack.push_back(u);
      }
    }
  }
  return reached == in.count();
}

/// Connected components of g restricted to `mask`, each sorted; components are
/// ordered by their smallest vertex.
inline std::vector<VertexSet> components(const Graph& g, const Bitset& mask) {
  std::vector<VertexSet> out;
  Bitset seen(mask.size());
  mask.for_each([&](std::size_t s) {
    if (seen.test(s)) return;
    VertexSet comp;
    std::vector<Vertex> stack{static_cast<Vertex>(s)};
    seen.set(s);
    while (!stack.empty()) {
      Vertex v = stack.back();
      stack.pop_back();
      comp.push_back(v);
      for (Vertex u : g.neighbors(v)) {
        auto uu = static_cast<std::size_t>(u);
        if (mask.test(uu) && !seen.test(uu)) {
          seen.set(uu);
          stack.push_back(u);
        }
      }
    }
    std::sort(comp.begin(), comp.end());
    out.push_back(std::move(comp));
  });
  return out;
}

inline Bitset full_mask(const Graph& g) {
  Bitset m(static_cast<std::size_t>(g.vertex_count()));
  m.set_all();
  return m;
}

inline Bitset mask_of(const Graph& g, std::span<const Vertex> s) {
  Bitset m(static_cast<std::size_t>(g.vertex_count()));
  for (Vertex v : s) {
    check_vertex(g, v);
    m.set(static_cast<std::size_t>(v));
  }
  return m;
}

inline VertexSet members(const Bitset& m) {
  VertexSet out;
  m.for_each([&](std::size_t v) { out.push_back(static_cast<Vertex>(v)); });
  return out;
}

/// g[S] relabelled to 0..|S|-1 in ascending order of the original identifiers.
struct InducedSubgraph {
  Graph graph;
  /// to_parent[i] is the original identifier of subgraph vertex i.
  std::vector<Vertex> to_parent;
  /// from_parent[v] is the subgraph identifier of v, or -1 when v ∉ S.
  std::vector<Vertex> from_parent;
};

inline InducedSubgraph induced_subgraph(const Graph& g, std::span<const Vertex> s) {
  if (s.empty()) throw InputError("induced_subgraph: vertex set must be nonempty");
  Bitset m = mask_of(g, s);
  InducedSubgraph out;
  out.to_parent = members(m);
  out.from_parent.assign(static_cast<std::size_t>(g.vertex_count()), -1);
  for (std::size_t i = 0; i < out.to_parent.size(); ++i)
    out.from_parent[out.to_parent[i]] = static_cast<Vertex>(i);
  GraphBuilder b(static_cast<int>(out.to_parent.size()));
  for (std::size_t i = 0; i < out.to_parent.size(); ++i)
    for (Vertex u : g.neighbors(out.to_parent[i])) {
      Vertex j = out.from_parent[u];
      if (j > static_cast<Vertex>(i)) b.add_edge(static_cast<Vertex>(i), j);
    }
  out.graph = std::move(b).build();
  return out;
}

inline InducedSubgraph induced_subgraph(const Graph& g, const Bitset& mask) {
  return induced_subgraph(g, members(mask));
}

inline Graph complement(const Graph& g) {
  const int n = g.vertex_count();
  GraphBuilder b(n);
  for (Vertex u = 0; u < n; ++u)
    for (Vertex v = u + 1; v < n; ++v)
      if (!g.adjacent(u, v)) b.add_edge(u, v);
  return std::move(b).build();
}

/// Relabels vertex v as perm[v].
inline Graph permute_vertices(const Graph& g, std::span<const Vertex> perm) {
  const int n = g.vertex_count();
  if (static_cast<int>(perm.size()) != n) throw InputError("permutation size mismatch");
  std::vector<char> hit(static_cast<std::size_t>(n), 0);
  for (Vertex p : perm) {
    if (p < 0 || p >= n || hit[p]) throw InputError("not a permutation");
    hit[p] = 1;
  }
  GraphBuilder b(n);
  for (auto [u, v] : g.edges()) b.add_edge(perm[u], perm[v]);
  return std::move(b).build();
}

/// Disjoint union: vertices of b are shifted by a.vertex_count().
inline Graph disjoint_union(const Graph& a, const Graph& b) {
  GraphBuilder out(a.vertex_count() + b.vertex_count());
  for (auto [u, v] : a.edges()) out.add_edge(u, v);
  for (auto [u, v] : b.edges()) out.add_edge(u + a.vertex_count(), v + a.vertex_count());
  return std::move(out).build();
}

// Small named graphs used throughout tests and examples.
inline Graph cycle_graph(int n) {
  GraphBuilder b(n);
  for (int i = 0; i < n; ++i) b.add_edge(i, (i + 1) % n);
  return std::move(b).build();
}

inline Graph complete_graph(int n) {
  GraphBuilder b(n);
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j) b.add_edge(i, j);
  return std::move(b).build();
}

inline Graph path_graph(int n) {
  GraphBuilder b(n);
  for (int i = 0; i + 1 < n; ++i) b.add_edge(i, i + 1);
  return std::move(b).build();
}

inline Graph petersen_graph() {
  GraphBuilder b(10);
  for (int i = 0; i < 5; ++i) {
    b.add_edge(i, (i + 1) % 5);
    b.add_edge(i, i + 5);
    b.add_edge(5 + i, 5 + (i + 2) % 5);
  }
  return std::move(b).build();
}

}  // namespace ringchroma

#endif  // RINGCHROMA_GRAPH_HPP
