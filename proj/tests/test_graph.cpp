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


#include <gtest/gtest.h>

#include <vector>

#include "ringchroma/bitset.hpp"
#include "ringchroma/coloring.hpp"
#include "ringchroma/errors.hpp"
#include "ringchroma/graph.hpp"

namespace rc = ringchroma;
using rc::Graph;
using rc::VertexSet;

namespace {

Graph star(int leaves) {
  rc::GraphBuilder b(leaves + 1);
  for (int i = 1; i <= leaves; ++i) b.add_edge(0, i);
  return std::move(b).build();
}

}  // namespace

TEST(Bitset, SetTestCount) {
  rc::Bitset b(130);
  EXPECT_TRUE(b.none());
  b.set(0);
  b.set(64);
  b.set(129);
  EXPECT_EQ(b.count(), 3u);
  EXPECT_TRUE(b.test(64));
  EXPECT_FALSE(b.test(63));
  EXPECT_EQ(b.first(), 0u);
  b.reset(0);
  EXPECT_EQ(b.first(), 64u);
  rc::Bitset all(130);
  all.set_all();
  EXPECT_EQ(all.count(), 130u);
  EXPECT_TRUE(b.is_subset_of(all));
  EXPECT_FALSE(all.is_subset_of(b));
  all.subtract(b);
  EXPECT_EQ(all.count(), 128u);
  EXPECT_FALSE(all.intersects(b));
}

TEST(Graph, BuilderRejectsLoopsAndRange) {
  rc::GraphBuilder b(3);
  EXPECT_TRUE(b.add_edge(0, 1));
  EXPECT_FALSE(b.add_edge(1, 0));
  EXPECT_THROW(b.add_edge(2, 2), rc::InputError);
  EXPECT_THROW(b.add_edge(0, 3), rc::InputError);
  EXPECT_THROW(b.add_edge(-1, 0), rc::InputError);
  EXPECT_THROW(rc::GraphBuilder(-1), rc::InputError);
  Graph g = std::move(b).build();
  EXPECT_EQ(g.edge_count(), 1u);
  EXPECT_TRUE(g.adjacent(1, 0));
}

TEST(Graph, AdjacencyIsSymmetric) {
  Graph g = rc::petersen_graph();
  EXPECT_EQ(g.vertex_count(), 10);
  EXPECT_EQ(g.edge_count(), 15u);
  for (rc::Vertex u = 0; u < 10; ++u) {
    EXPECT_EQ(g.degree(u), 3);
    for (rc::Vertex v = 0; v < 10; ++v) EXPECT_EQ(g.adjacent(u, v), g.adjacent(v, u));
    EXPECT_FALSE(g.adjacent(u, u));
  }
}

TEST(Graph, ClosedNeighborhood) {
  EXPECT_EQ(rc::closed_neighborhood(rc::complete_graph(3), 0), (VertexSet{0, 1, 2}));
  EXPECT_EQ(rc::closed_neighborhood(rc::cycle_graph(5), 0), (VertexSet{0, 1, 4}));
  EXPECT_EQ(rc::closed_neighborhood(Graph(1), 0), (VertexSet{0}));
  EXPECT_THROW(rc::closed_neighborhood(Graph(1), 1), rc::InputError);
}

TEST(Graph, Dominates) {
  Graph s = star(3);
  EXPECT_TRUE(rc::dominates(s, 0, 1));
  EXPECT_FALSE(rc::dominates(s, 1, 0));
  EXPECT_FALSE(rc::dominates(rc::cycle_graph(5), 0, 2));
  Graph k2 = rc::complete_graph(2);
  EXPECT_TRUE(rc::dominates(k2, 0, 1));
  EXPECT_TRUE(rc::dominates(k2, 1, 0));
  EXPECT_THROW(rc::dominates(k2, 0, 0), rc::InputError);
}

TEST(Graph, CliqueStableConnected) {
  Graph c5 = rc::cycle_graph(5);
  EXPECT_TRUE(rc::is_clique(c5, VertexSet{0, 1}));
  EXPECT_FALSE(rc::is_clique(c5, VertexSet{0, 2}));
  EXPECT_TRUE(rc::is_stable(c5, VertexSet{0, 2}));
  EXPECT_TRUE(rc::induces_connected(c5, VertexSet{0, 1, 2}));
  EXPECT_FALSE(rc::induces_connected(c5, VertexSet{0, 2}));
  EXPECT_TRUE(rc::is_clique(c5, VertexSet{}));
}

TEST(Graph, Components) {
  Graph g = rc::disjoint_union(rc::cycle_graph(4), rc::complete_graph(3));
  auto comps = rc::components(g, rc::full_mask(g));
  ASSERT_EQ(comps.size(), 2u);
  EXPECT_EQ(comps[0], (VertexSet{0, 1, 2, 3}));
  EXPECT_EQ(comps[1], (VertexSet{4, 5, 6}));
}

TEST(Graph, InducedSubgraph) {
  auto p3 = rc::induced_subgraph(rc::cycle_graph(5), VertexSet{0, 1, 2});
  EXPECT_EQ(p3.graph, rc::path_graph(3));
  EXPECT_EQ(p3.to_parent, (VertexSet{0, 1, 2}));
  EXPECT_EQ(p3.from_parent[4], -1);

  Graph k4 = rc::complete_graph(4);
  auto whole = rc::induced_subgraph(k4, VertexSet{0, 1, 2, 3});
  EXPECT_EQ(whole.graph, k4);
  EXPECT_EQ(whole.to_parent, (VertexSet{0, 1, 2, 3}));

  auto iso = rc::induced_subgraph(rc::cycle_graph(6), VertexSet{0, 2, 4});
  EXPECT_EQ(iso.graph.edge_count(), 0u);
  EXPECT_EQ(iso.graph.vertex_count(), 3);

  EXPECT_THROW(rc::induced_subgraph(k4, VertexSet{}), rc::InputError);
}

TEST(Graph, Complement) {
  Graph c5 = rc::cycle_graph(5);
  Graph cc5 = rc::complement(c5);
  // C_5 is isomorphic to its complement under i -> 2i mod 5.
  std::vector<rc::Vertex> perm{0, 2, 4, 1, 3};
  EXPECT_EQ(rc::permute_vertices(c5, perm), cc5);
  EXPECT_EQ(rc::complement(rc::complete_graph(6)).edge_count(), 0u);
  Graph a7 = rc::complement(rc::cycle_graph(7));
  EXPECT_EQ(a7.edge_count(), 21u - 7u);
  for (rc::Vertex v = 0; v < 7; ++v) EXPECT_EQ(a7.degree(v), 4);
  EXPECT_EQ(rc::complement(a7), rc::cycle_graph(7));
}

TEST(Graph, PermuteRejectsNonPermutation) {
  std::vector<rc::Vertex> bad{0, 0, 1};
  EXPECT_THROW(rc::permute_vertices(rc::path_graph(3), bad), rc::InputError);
}

TEST(Coloring, Proper) {
  Graph c5 = rc::cycle_graph(5);
  EXPECT_TRUE(rc::is_proper(c5, rc::Coloring(std::vector<int>{1, 2, 1, 2, 3})));
  EXPECT_FALSE(rc::is_proper(rc::complete_graph(3), rc::Coloring(std::vector<int>{1, 1, 2})));
  EXPECT_TRUE(rc::is_proper(rc::petersen_graph(), rc::Coloring(10)));
  EXPECT_THROW(rc::Coloring(std::vector<int>{1, -1}), rc::InputError);
  EXPECT_THROW(rc::is_proper(rc::path_graph(2), rc::Coloring(std::vector<int>{1, 2, 3})),
               rc::InputError);
}

TEST(Coloring, CompactAndPalette) {
  rc::Coloring c(std::vector<int>{7, 0, 3, 7});
  EXPECT_EQ(c.palette(), (std::vector<int>{3, 7}));
  EXPECT_EQ(c.colors_used(), 2);
  EXPECT_FALSE(c.is_total());
  rc::Coloring d = rc::compact_colors(c);
  EXPECT_EQ(d.raw(), (std::vector<int>{2, 0, 1, 2}));
  d.swap_names(1, 2);
  EXPECT_EQ(d.raw(), (std::vector<int>{1, 0, 2, 1}));
}

TEST(Coloring, GreedyExtendAndLift) {
  Graph c5 = rc::cycle_graph(5);
  rc::Coloring c(5);
  std::vector<rc::Vertex> order{0, 1, 2, 3, 4};
  rc::greedy_extend(c5, c, order);
  EXPECT_TRUE(c.is_total());
  EXPECT_TRUE(rc::is_proper(c5, c));
  EXPECT_EQ(c.colors_used(), 3);

  auto sub = rc::induced_subgraph(c5, VertexSet{1, 3});
  rc::Coloring local = rc::restrict_coloring(sub, c);
  rc::Coloring back = rc::lift_coloring(sub, local, 5);
  EXPECT_EQ(back[1], c[1]);
  EXPECT_EQ(back[3], c[3]);
  EXPECT_FALSE(back.has(0));
}
