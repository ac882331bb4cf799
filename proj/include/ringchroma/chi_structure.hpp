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

// Chromatic numbers without colourings: hyperholes, clique number of rings,
// maximum hyperholes, and the class-level chromatic number of graphs that
// reduce to a ring by simplicial elimination.

#ifndef RINGCHROMA_CHI_STRUCTURE_HPP
#define RINGCHROMA_CHI_STRUCTURE_HPP

#include <algorithm>
#include <limits>
#include <optional>
#include <utility>
#include <vector>

#include "ringchroma/errors.hpp"
#include "ringchroma/graph.hpp"
#include "ringchroma/matching.hpp"
#include "ringchroma/recognition.hpp"

namespace ringchroma {

inline int ceil_div(long long a, long long b) { return static_cast<int>((a + b - 1) / b); }

inline void require_ring(const Graph& g, const RingPartition& p) {
  if (!verify_ring_partition(g, p)) throw InputError("not a valid ring partition of the graph");
}

inline void require_ordered_ring(const Graph& g, const RingPartition& p) {
  require_ring(g, p);
  if (!verify_ring_ordering(g, p))
    throw InputError("ring partition parts are not in bottom-to-top order");
}

/// True iff every part is complete to both neighbouring parts.
inline bool is_hyperhole_partition(const Graph& g, const RingPartition& p) {
  if (!verify_ring_partition(g, p)) return false;
  for (int i = 0; i < p.k(); ++i)
    for (Vertex u : p.part(i))
      for (Vertex v : p.part(i + 1))
        if (!g.adjacent(u, v)) return false;
  return true;
}

/// max{omega, ceil(n / floor(k/2))} for a hyperhole.
inline int hyperhole_chi(const Graph& g, const RingPartition& p) {
  require_ring(g, p);
  if (!is_hyperhole_partition(g, p)) throw InputError("partition does not describe a hyperhole");
  int omega = 0;
  for (int i = 0; i < p.k(); ++i) omega = std::max(omega, p.size(i) + p.size(i + 1));
  return std::max(omega, ceil_div(g.vertex_count(), p.k() / 2));
}

/// A maximum clique of a ring. Every clique lives inside two consecutive
/// parts, and each such pair is cobipartite.
inline VertexSet max_clique_ring(const Graph& g, const RingPartition& p) {
  require_ring(g, p);
  VertexSet best;
  for (int i = 0; i < p.k(); ++i) {
    VertexSet q = max_clique_cobipartite(g, p.part(i), p.part(i + 1));
    if (q.size() > best.size()) best = std::move(q);
  }
  return best;
}

inline int omega_ring(const Graph& g, const RingPartition& p) {
  return static_cast<int>(max_clique_ring(g, p).size());
}

/// Cut index per part (1-based): the selection keeps the bottom cuts[i]
/// vertices of part i.
struct HyperholeSelection {
  std::vector<int> cuts;

  friend bool operator==(const HyperholeSelection&, const HyperholeSelection&) = default;
};

inline int selection_size(const HyperholeSelection& s) {
  int t = 0;
  for (int c : s.cuts) t += c;
  return t;
}

inline VertexSet selection_vertices(const RingPartition& p, const HyperholeSelection& s) {
  if (static_cast<int>(s.cuts.size()) != p.k()) throw InputError("selection length differs from k");
  VertexSet out;
  for (int i = 0; i < p.k(); ++i) {
    if (s.cuts[i] < 1 || s.cuts[i] > p.size(i)) throw InputError("cut index out of range");
    out.insert(out.end(), p.part(i).begin(), p.part(i).begin() + s.cuts[i]);
  }
  std::sort(out.begin(), out.end());
  return out;
}

/// Tops of the selection form a hole and consecutive selected blocks are
/// complete to each other.
inline bool is_valid_selection(const Graph& g, const RingPartition& p, const HyperholeSelection& s) {
  if (static_cast<int>(s.cuts.size()) != p.k()) return false;
  const int k = p.k();
  for (int i = 0; i < k; ++i)
    if (s.cuts[i] < 1 || s.cuts[i] > p.size(i)) return false;
  for (int i = 0; i < k; ++i)
    for (int j = i + 1; j < k; ++j) {
      bool consecutive = (j == i + 1) || (i == 0 && j == k - 1);
      Vertex a = p.part(i)[s.cuts[i] - 1];
      Vertex b = p.part(j)[s.cuts[j] - 1];
      if (g.adjacent(a, b) != consecutive) return false;
    }
  for (int i = 0; i < k; ++i)
    for (int a = 0; a < s.cuts[i]; ++a)
      for (int b = 0; b < s.cuts[(i + 1) % k]; ++b)
        if (!g.adjacent(p.part(i)[a], p.part(i + 1)[b])) return false;
  return true;
}

/// One shortest path of the layered search, for the starting height j.
struct HyperholePath {
  int j = 0;
  long long weight = 0;
  int size = 0;
  HyperholeSelection selection;
};

struct MaxHyperholeReport {
  HyperholeSelection best;
  std::vector<HyperholePath> paths;
};

/// Weight of the arc from u_i^p to u_{i+1}^q (heights 1-based).
inline long long hyperhole_arc_weight(int size_i, int p, int size_next, int q) {
  if (p < 1 || p > size_i || q < 1 || q > size_next) throw InputError("height out of range");
  return static_cast<long long>(size_i - p) + (size_next - q);
}

/// Maximum hyperhole of a ring with an ordered partition.
///
/// Layers X_1..X_k plus a copy of X_1; an arc joins u_i^p to u_{i+1}^q along
/// each ring edge with weight (|X_i|-p) + (|X_{i+1}|-q). For every start
/// height j the minimum-weight path from u_1^j to the copy of u_1^j fixes one
/// cut per part, and the hyperhole it selects has |V| - w/2 vertices.
///
/// The graph between layers is a staircase (the X_i-neighbours of u_{i+1}^q
/// are a prefix of X_i), so each layer is relaxed with a running prefix
/// minimum instead of a priority queue. Ties go to the smaller predecessor
/// identifier, then to the smaller j.
inline MaxHyperholeReport max_hyperhole_report(const Graph& g, const RingPartition& p) {
  require_ordered_ring(g, p);
  const int k = p.k();
  constexpr long long kInf = std::numeric_limits<long long>::max() / 4;
  // reach[i][q] = number of X_i vertices adjacent to u_{i+1}^q (a prefix).
  std::vector<std::vector<int>> reach(static_cast<std::size_t>(k));
  for (int i = 0; i < k; ++i) {
    const VertexSet& xi = p.part(i);
    for (Vertex q : p.part(i + 1)) {
      int c = 0;
      while (c < static_cast<int>(xi.size()) && g.adjacent(xi[c], q)) ++c;
      reach[i].push_back(c);
    }
  }

  MaxHyperholeReport report;
  int best_size = -1;
  for (int j = 1; j <= p.size(0); ++j) {
    // dist over layer i; pred[i][q] = height in layer i-1 of the predecessor.
    std::vector<long long> dist(static_cast<std::size_t>(p.size(0)), kInf);
    dist[j - 1] = 0;
    std::vector<std::vector<int>> pred(static_cast<std::size_t>(k + 1));
    for (int i = 0; i < k; ++i) {
      const VertexSet& xi = p.part(i);
      const VertexSet& xn = p.part(i + 1);
      const int si = static_cast<int>(xi.size());
      const int sn = static_cast<int>(xn.size());
      // Prefix minimum of dist[p] + (|X_i| - p) over heights 1..c, keeping
      // the smaller identifier on ties.
      std::vector<long long> pm(static_cast<std::size_t>(si));
      std::vector<int> arg(static_cast<std::size_t>(si));
      for (int h = 0; h < si; ++h) {
        long long val = dist[h] >= kInf ? kInf : dist[h] + (si - (h + 1));
        if (h == 0 || val < pm[h - 1] || (val == pm[h - 1] && val < kInf && xi[h] < xi[arg[h - 1]])) {
          pm[h] = val;
          arg[h] = h;
        } else {
          pm[h] = pm[h - 1];
          arg[h] = arg[h - 1];
        }
      }
      std::vector<long long> nd(static_cast<std::size_t>(sn), kInf);
      pred[i + 1].assign(static_cast<std::size_t>(sn), -1);
      for (int q = 0; q < sn; ++q) {
        int c = reach[i][q];
        if (c == 0 || pm[c - 1] >= kInf) continue;
        nd[q] = pm[c - 1] + (sn - (q + 1));
        pred[i + 1][q] = arg[c - 1];
      }
      dist = std::move(nd);
    }
    if (dist[j - 1] >= kInf) throw StructureError("no path closes the layered search");
    HyperholePath path;
    path.j = j;
    path.weight = dist[j - 1];
    path.selection.cuts.assign(static_cast<std::size_t>(k), 0);
    int h = j - 1;
    for (int i = k; i >= 1; --i) {
      h = pred[i][h];
      path.selection.cuts[i - 1] = h + 1;
    }
    if (path.selection.cuts[0] != j) throw StructureError("layered search left its start vertex");
    path.size = selection_size(path.selection);
    if (path.weight % 2 != 0 || path.size != g.vertex_count() - path.weight / 2)
      throw StructureError("hyperhole size does not match |V| - w/2");
    if (path.size > best_size) {
      best_size = path.size;
      report.best = path.selection;
    }
    report.paths.push_back(std::move(path));
  }
  return report;
}

inline HyperholeSelection max_hyperhole(const Graph& g, const RingPartition& p) {
  return max_hyperhole_report(g, p).best;
}

/// max{omega, ceil(|H| / floor(k/2))} for a maximum hyperhole H.
inline int chi_from_selection(const Graph& g, const RingPartition& p, const HyperholeSelection& s) {
  return std::max(omega_ring(g, p), ceil_div(selection_size(s), p.k() / 2));
}

/// Residual ring left after stripping a maximal simplicial sequence, together
/// with the clique sizes r_i = |N[v_i] \ {v_1..v_{i-1}}|.
struct SimplicialReduction {
  SimplicialSequence sequence;
  int max_r = 0;
  /// Present when the residual is nonempty and recognised as a ring.
  std::optional<InducedSubgraph> ring;
  std::optional<RingPartition> partition;
};

inline SimplicialReduction reduce_simplicial(const Graph& g) {
  SimplicialReduction red;
  red.sequence = simplicial_elimination_sequence(g);
  const int n = g.vertex_count();
  std::vector<char> gone(static_cast<std::size_t>(n), 0);
  for (Vertex v : red.sequence.order) {
    int r = 1;
    for (Vertex u : g.neighbors(v))
      if (!gone[u]) ++r;
    red.max_r = std::max(red.max_r, r);
    gone[v] = 1;
  }
  if (!red.sequence.residual.empty()) {
    InducedSubgraph sub = induced_subgraph(g, red.sequence.residual);
    if (auto rp = recognize_ring(sub.graph)) {
      red.partition = std::move(*rp);
      red.ring = std::move(sub);
    }
  }
  return red;
}

/// Chromatic number of a graph that becomes a ring (or nothing) after
/// simplicial elimination; nullopt when the residual is not a ring.
inline std::optional<int> chi_ring_class(const Graph& g) {
  SimplicialReduction red = reduce_simplicial(g);
  if (red.sequence.residual.empty()) return red.max_r;
  if (!red.ring) return std::nullopt;
  const Graph& r = red.ring->graph;
  const RingPartition& p = *red.partition;
  HyperholeSelection h = max_hyperhole(r, p);
  return std::max(red.max_r, chi_from_selection(r, p, h));
}

/// Clique number for the same class; nullopt when the residual is not a
/// ring.
inline std::optional<int> omega_ring_class(const Graph& g) {
  SimplicialReduction red = reduce_simplicial(g);
  if (red.sequence.residual.empty()) return red.max_r;
  if (!red.ring) return std::nullopt;
  return std::max(red.max_r, omega_ring(red.ring->graph, *red.partition));
}

}  // namespace ringchroma

#endif  // RINGCHROMA_CHI_STRUCTURE_HPP
