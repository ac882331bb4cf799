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

#ifndef RINGCHROMA_COLORING_HPP
#define RINGCHROMA_COLORING_HPP

#include <algorithm>
#include <map>
#include <span>
#include <string>
#include <vector>

#include "ringchroma/errors.hpp"
#include "ringchroma/graph.hpp"

namespace ringchroma {

using Color = int;

/// Partial map vertex -> colour. Colours are positive; 0 marks an uncoloured
/// vertex.
class Coloring {
 public:
  Coloring() = default;
  explicit Coloring(int vertex_count) : colors_(static_cast<std::size_t>(vertex_count), 0) {
    if (vertex_count < 0) throw InputError("negative vertex count");
  }
  explicit Coloring(std::vector<Color> colors) : colors_(std::move(colors)) {
    for (Color c : colors_)
      if (c < 0) throw InputError("colours must be positive (0 = uncoloured)");
  }

  int vertex_count() const noexcept { return static_cast<int>(colors_.size()); }
  bool has(Vertex v) const noexcept { return colors_[v] != 0; }
  Color operator[](Vertex v) const noexcept { return colors_[v]; }
  void assign(Vertex v, Color c) {
    if (c < 1) throw InputError("colour must be positive");
    colors_.at(v) = c;
  }
  void erase(Vertex v) { colors_.at(v) = 0; }

  VertexSet domain() const {
    VertexSet out;
    for (Vertex v = 0; v < vertex_count(); ++v)
      if (colors_[v] != 0) out.push_back(v);
    return out;
  }
  std::size_t domain_size() const {
    return static_cast<std::size_t>(
        std::count_if(colors_.begin(), colors_.end(), [](Color c) { return c != 0; }));
  }
  bool is_total() const { return domain_size() == colors_.size(); }

  /// Distinct colours in use, ascending.
  std::vector<Color> palette() const {
    std::vector<Color> p;
    for (Color c : colors_)
      if (c != 0) p.push_back(c);
    std::sort(p.begin(), p.end());
    p.erase(std::unique(p.begin(), p.end()), p.end());
    return p;
  }
  int colors_used() const { return static_cast<int>(palette().size()); }
  Color max_color() const {
    Color m = 0;
    for (Color c : colors_) m = std::max(m, c);
    return m;
  }

  /// Exchanges the names a and b everywhere.
  void swap_names(Color a, Color b) {
    for (Color& c : colors_) {
      if (c == a)
        c = b;
      else if (c == b)
        c = a;
    }
  }

  const std::vector<Color>& raw() const noexcept { return colors_; }

  friend bool operator==(const Coloring&, const Coloring&) = default;

 private:
  std::vector<Color> colors_;
};

/// True iff no edge inside the domain of c is monochromatic.
inline bool is_proper(const Graph& g, const Coloring& c) {
  for (Vertex v = g.vertex_count(); v < c.vertex_count(); ++v)
    if (c.has(v)) throw InputError("colouring domain exceeds the vertex range");
  const int n = std::min(g.vertex_count(), c.vertex_count());
  for (Vertex u = 0; u < n; ++u) {
    if (!c.has(u)) continue;
    for (Vertex v : g.neighbors(u))
      if (v > u && v < n && c[v] == c[u]) return false;
  }
  return true;
}

/// Relabels colours to 1..r preserving their relative order.
inline Coloring compact_colors(const Coloring& c) {
  std::vector<Color> p = c.palette();
  std::vector<Color> out(c.raw().size(), 0);
  for (std::size_t v = 0; v < out.size(); ++v)
    if (c.raw()[v] != 0)
      out[v] = static_cast<Color>(std::lower_bound(p.begin(), p.end(), c.raw()[v]) - p.begin()) + 1;
  return Coloring(std::move(out));
}

/// Smallest colour not used on any coloured neighbour of v.
inline Color smallest_free_color(const Graph& g, const Coloring& c, Vertex v) {
  std::vector<char> used(static_cast<std::size_t>(g.degree(v)) + 2, 0);
  for (Vertex u : g.neighbors(v)) {
    Color cu = c[u];
    if (cu != 0 && cu < static_cast<Color>(used.size())) used[cu] = 1;
  }
  Color col = 1;
  while (used[col]) ++col;
  return col;
}

/// Colours `order` greedily, each vertex with its smallest free colour.
inline void greedy_extend(const Graph& g, Coloring& c, std::span<const Vertex> order) {
  for (Vertex v : order) c.assign(v, smallest_free_color(g, c, v));
}

/// Lifts a colouring of an induced subgraph back to parent identifiers.
inline Coloring lift_coloring(const InducedSubgraph& sub, const Coloring& c, int parent_n) {
  Coloring out(parent_n);
  for (Vertex i = 0; i < c.vertex_count(); ++i)
    if (c.has(i)) out.assign(sub.to_parent[i], c[i]);
  return out;
}

/// Restricts a parent colouring to the vertices of an induced subgraph.
inline Coloring restrict_coloring(const InducedSubgraph& sub, const Coloring& c) {
  Coloring out(sub.graph.vertex_count());
  for (std::size_t i = 0; i < sub.to_parent.size(); ++i)
    if (c.has(sub.to_parent[i])) out.assign(static_cast<Vertex>(i), c[sub.to_parent[i]]);
  return out;
}

}  // namespace ringchroma

#endif  // RINGCHROMA_COLORING_HPP
