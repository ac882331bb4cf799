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

// DIMACS .col reader and writer. Vertices are 1-based in the file and 0-based
// in memory.

#ifndef RINGCHROMA_DIMACS_HPP
#define RINGCHROMA_DIMACS_HPP

#include <charconv>
#include <optional>
#include <sstream>
#include <string>
#include <string_view>
#include <vector>

#include "ringchroma/errors.hpp"
#include "ringchroma/graph.hpp"

namespace ringchroma {

namespace detail {

inline std::vector<std::string_view> split_ws(std::string_view s) {
  std::vector<std::string_view> out;
  std::size_t i = 0;
  while (i < s.size()) {
    while (i < s.size() && (s[i] == ' ' || s[i] == '\t' || s[i] == '\r')) ++i;
    std::size_t j = i;
    while (j < s.size() && s[j] != ' ' && s[j] != '\t' && s[j] != '\r') ++j;
    if (j > i) out.push_back(s.substr(i, j - i));
    i = j;
  }
  return out;
}

inline std::optional<long long> to_int(std::string_view s) {
  long long v = 0;
  auto [p, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
  if (ec != std::errc() || p != s.data() + s.size()) return std::nullopt;
  return v;
}

}  // namespace detail

/// Parses DIMACS text. The declared edge count must match the number of `e`
/// lines.
inline Graph load_dimacs(std::string_view text) {
  std::optional<GraphBuilder> builder;
  long long declared_m = 0;
  std::size_t seen_m = 0;
  std::size_t line_no = 0;
  std::size_t pos = 0;
  constexpr long long kMaxVertices = 1'000'000;
  while (pos <= text.size()) {
    std::size_t nl = text.find('\n', pos);
    if (nl == std::string_view::npos) nl = text.size();
    std::string_view line = text.substr(pos, nl - pos);
    pos = nl + 1;
    ++line_no;
    auto tok = detail::split_ws(line);
    if (tok.empty() || tok[0] == "c") continue;
    if (tok[0] == "p") {
      if (builder) throw ParseError(line_no, "duplicate problem line");
      if (tok.size() != 4 || (tok[1] != "edge" && tok[1] != "col"))
        throw ParseError(line_no, "malformed header, expected 'p edge <n> <m>'");
      auto n = detail::to_int(tok[2]);
      auto m = detail::to_int(tok[3]);
      if (!n || !m || *n < 0 || *m < 0 || *n > kMaxVertices)
        throw ParseError(line_no, "malformed header counts");
      builder.emplace(static_cast<int>(*n));
      declared_m = *m;
    } else if (tok[0] == "e") {
      if (!builder) throw ParseError(line_no, "edge before problem line");
      if (tok.size() != 3) throw ParseError(line_no, "malformed edge line");
      auto u = detail::to_int(tok[1]);
      auto v = detail::to_int(tok[2]);
      const int n = builder->vertex_count();
      if (!u || !v) throw ParseError(line_no, "malformed edge endpoints");
      if (*u < 1 || *v < 1 || *u > n || *v > n)
        throw ParseError(line_no, "vertex index out of range");
      if (*u == *v) throw ParseError(line_no, "self-loop");
      if (!builder->add_edge(static_cast<Vertex>(*u - 1), static_cast<Vertex>(*v - 1)))
        throw ParseError(line_no, "duplicate edge");
      ++seen_m;
    } else {
      throw ParseError(line_no, "unknown line type '" + std::string(tok[0]) + "'");
    }
  }
  if (!builder) throw ParseError(0, "missing problem line");
  if (static_cast<long long>(seen_m) != declared_m)
    throw ParseError(0, "header declares " + std::to_string(declared_m) + " edges but " +
                            std::to_string(seen_m) + " were given");
  return std::move(*builder).build();
}

/// Canonical DIMACS text: header, then edges with u < v in lexicographic
/// order. No comments.
inline std::string save_dimacs(const Graph& g) {
  std::ostringstream os;
  os << "p edge " << g.vertex_count() << ' ' << g.edge_count() << '\n';
  for (auto [u, v] : g.edges()) os << "e " << (u + 1) << ' ' << (v + 1) << '\n';
  return os.str();
}

}  // namespace ringchroma

#endif  // RINGCHROMA_DIMACS_HPP
