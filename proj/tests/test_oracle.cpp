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

#include <algorithm>
#include <random>
#include <vector>

#include "ringchroma/generators.hpp"
#include "ringchroma/graph.hpp"
#include "ringchroma/oracle.hpp"

namespace rc = ringchroma;
using rc::Graph;

TEST(BruteChi, Examples) {
  EXPECT_EQ(rc::brute_chi(Graph(0)).chi, 0);
  EXPECT_EQ(rc::brute_chi(Graph(3)).chi, 1);
  EXPECT_EQ(rc::brute_chi(rc::cycle_graph(5)).chi, 3);
  EXPECT_EQ(rc::brute_chi(rc::cycle_graph(6)).chi, 2);
  EXPECT_EQ(rc::brute_chi(rc::complete_graph(6)).chi, 6);
  EXPECT_EQ(rc::brute_chi(rc::petersen_graph()).chi, 3);
  // Mycielski graph of C5 (Groetzsch): triangle-free, chromatic number 4.
  rc::GraphBuilder b(11);
  for (int i = 0; i < 5; ++i) {
    b.add_edge(i, (i + 1) % 5);
    b.add_edge(5 + i, (i + 1) % 5);
    b.add_edge(5 + i, (i + 4) % 5);
    b.add_edge(5 + i, 10);
  }
  Graph grotzsch = std::move(b).build();
  EXPECT_EQ(rc::brute_omega(grotzsch), 2);
  EXPECT_EQ(rc::brute_chi(grotzsch).chi, 4);
}

TEST(BruteChi, AntiholeAgreesWithMatchingBound) {
  // For stability number two, chi = n - (maximum matching of the complement).
  Graph a7 = rc::complement(rc::cycle_graph(7));
  EXPECT_EQ(rc::brute_chi(a7).chi, 4);
  EXPECT_EQ(7 - rc::brute_matching(rc::cycle_graph(7)), 4);
}

TEST(BruteChi, WitnessIsProper) {
  rc::Rng rng(59);
  for (int trial = 0; trial < 200; ++trial) {
    const int n = rc::detail::uniform(rng, 1, 12);
    rc::GraphBuilder b(n);
    for (int u = 0; u < n; ++u)
      for (int v = u + 1; v < n; ++v)
        if (rc::detail::uniform(rng, 0, 99) < 45) b.add_edge(u, v);
    Graph g = std::move(b).build();
    rc::ChiWitness w = rc::brute_chi(g);
    EXPECT_TRUE(w.coloring.is_total());
    EXPECT_TRUE(rc::is_proper(g, w.coloring));
    EXPECT_EQ(w.coloring.colors_used(), w.chi);
    EXPECT_GE(w.chi, rc::brute_omega(g));
    // alpha * chi >= n.
    EXPECT_GE(rc::brute_alpha(g) * w.chi, n);
  }
}

TEST(BruteCliques, Examples) {
  Graph c5 = rc::cycle_graph(5);
  EXPECT_EQ(rc::brute_omega(c5), 2);
  EXPECT_EQ(rc::brute_alpha(c5), 2);
  rc::RingInstance h = rc::gen_hyperhole(7, std::vector<int>(7, 2));
  EXPECT_EQ(rc::brute_omega(h.graph), 4);
  Graph k33 = Graph::from_edges(6, {{0, 3}, {0, 4}, {0, 5}, {1, 3}, {1, 4}, {1, 5}, {2, 3}, {2, 4}, {2, 5}});
  EXPECT_EQ(rc::brute_omega(k33), 2);
  EXPECT_EQ(rc::brute_alpha(k33), 3);
  EXPECT_EQ(rc::brute_omega(Graph(0)), 0);
  EXPECT_TRUE(rc::is_clique(h.graph, rc::brute_max_clique(h.graph)));
}

TEST(Holes, Examples) {
  EXPECT_TRUE(rc::enumerate_holes(rc::complete_graph(5)).empty());
  EXPECT_TRUE(rc::enumerate_holes(rc::path_graph(6)).empty());
  auto c6 = rc::enumerate_holes(rc::cycle_graph(6));
  ASSERT_EQ(c6.size(), 1u);
  EXPECT_EQ(c6[0], (std::vector<rc::Vertex>{0, 1, 2, 3, 4, 5}));
  // K_{3,3} has nine 4-holes.
  Graph k33 = Graph::from_edges(6, {{0, 3}, {0, 4}, {0, 5}, {1, 3}, {1, 4}, {1, 5}, {2, 3}, {2, 4}, {2, 5}});
  EXPECT_EQ(rc::enumerate_holes(k33).size(), 9u);
  // The Petersen graph has twelve 5-cycles and ten 6-cycles, all chordless.
  auto p = rc::enumerate_holes(rc::petersen_graph());
  EXPECT_EQ(std::count_if(p.begin(), p.end(), [](const auto& h) { return h.size() == 5; }), 12);
  EXPECT_EQ(std::count_if(p.begin(), p.end(), [](const auto& h) { return h.size() == 6; }), 10);
}

TEST(Matching, Examples) {
  EXPECT_EQ(rc::brute_matching(rc::cycle_graph(7)), 3);
  EXPECT_EQ(rc::brute_matching(rc::complete_graph(5)), 2);
  EXPECT_EQ(rc::brute_matching(rc::petersen_graph()), 5);
  EXPECT_EQ(rc::brute_matching(Graph(4)), 0);
}

TEST(MaxHyperhole, Hyperhole) {
  rc::RingInstance h = rc::gen_hyperhole(5, {2, 1, 3, 1, 2});
  EXPECT_EQ(rc::brute_max_hyperhole(h.graph, h.partition), 9);
}

TEST(CliqueCutset, Examples) {
  EXPECT_TRUE(rc::brute_has_clique_cutset(rc::path_graph(3)));
  EXPECT_TRUE(rc::brute_has_clique_cutset(Graph(2)));
  EXPECT_FALSE(rc::brute_has_clique_cutset(rc::cycle_graph(5)));
  EXPECT_FALSE(rc::brute_has_clique_cutset(rc::complete_graph(4)));
}

TEST(Caps, Enforced) {
  EXPECT_THROW(rc::brute_chi(Graph(21)), rc::CapacityError);
  EXPECT_NO_THROW(rc::brute_chi(Graph(21), 21));
  EXPECT_THROW(rc::brute_chi(Graph(63), 100), rc::CapacityError);
  EXPECT_THROW(rc::brute_omega(Graph(41)), rc::CapacityError);
  EXPECT_THROW(rc::enumerate_holes(Graph(21)), rc::CapacityError);
  EXPECT_THROW(rc::brute_matching(Graph(21)), rc::CapacityError);
  EXPECT_THROW(rc::brute_has_clique_cutset(Graph(17)), rc::CapacityError);
  rc::RingInstance big = rc::gen_hyperhole(7, std::vector<int>(7, 8));
  EXPECT_THROW(rc::brute_max_hyperhole(big.graph, big.partition, 1000), rc::CapacityError);
}
