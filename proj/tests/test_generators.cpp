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

#include "ringchroma/bounds.hpp"
#include "ringchroma/chi_structure.hpp"
#include "ringchroma/dimacs.hpp"
#include "ringchroma/generators.hpp"
#include "ringchroma/graph.hpp"
#include "ringchroma/oracle.hpp"
#include "ringchroma/recognition.hpp"

namespace rc = ringchroma;
using rc::Graph;
using rc::VertexSet;

namespace {

std::vector<int> part_sizes(const rc::RingPartition& p) {
  std::vector<int> s;
  for (int i = 0; i < p.k(); ++i) s.push_back(p.size(i));
  return s;
}

}  // namespace

TEST(Hyperhole, UnitSizesGiveCycle) {
  rc::RingInstance r = rc::gen_hyperhole(5, {1, 1, 1, 1, 1});
  EXPECT_EQ(r.graph.vertex_count(), 5);
  EXPECT_EQ(rc::save_dimacs(r.graph), rc::save_dimacs(rc::cycle_graph(5)));
}

TEST(Hyperhole, SizesAndRecognition) {
  rc::RingInstance r = rc::gen_hyperhole(4, {2, 1, 1, 1});
  EXPECT_EQ(r.graph.vertex_count(), 5);
  EXPECT_TRUE(rc::is_hyperhole_partition(r.graph, r.partition));
  auto back = rc::recognize_ring(r.graph);
  ASSERT_TRUE(back);
  EXPECT_EQ(back->k(), 4);
}

TEST(Hyperhole, Extremal) {
  rc::RingInstance a = rc::gen_extremal_hyperhole(5, 2);
  EXPECT_EQ(rc::save_dimacs(a.graph), rc::save_dimacs(rc::cycle_graph(5)));
  EXPECT_EQ(rc::brute_chi(a.graph).chi, 3);
  rc::RingInstance b = rc::gen_extremal_hyperhole(7, 4);
  EXPECT_EQ(part_sizes(b.partition), std::vector<int>(7, 2));
  rc::RingInstance c = rc::gen_extremal_hyperhole(5, 3);
  EXPECT_EQ(part_sizes(c.partition), (std::vector<int>{1, 2, 1, 2, 1}));
  EXPECT_EQ(rc::brute_omega(c.graph), 3);
  EXPECT_EQ(rc::brute_chi(c.graph).chi, 4);
  EXPECT_THROW(rc::gen_extremal_hyperhole(6, 3), rc::InputError);
  EXPECT_THROW(rc::gen_extremal_hyperhole(5, 1), rc::InputError);
}

TEST(Hyperantihole, UnitSizesGiveAntihole) {
  rc::HyperantiholeInstance a = rc::gen_hyperantihole(7, std::vector<int>(7, 1));
  EXPECT_EQ(rc::save_dimacs(a.graph), rc::save_dimacs(rc::complement(rc::cycle_graph(7))));
  EXPECT_EQ(rc::brute_alpha(a.graph), 2);
}

TEST(Hyperantihole, StabilityTwoAndCliques) {
  rc::Rng rng(3);
  for (int trial = 0; trial < 60; ++trial) {
    const int k = 5 + 2 * rc::detail::uniform(rng, 0, 2);
    std::vector<int> sizes;
    for (int i = 0; i < k; ++i) sizes.push_back(rc::detail::uniform(rng, 1, 3));
    rc::HyperantiholeInstance a = rc::gen_hyperantihole(k, sizes);
    EXPECT_EQ(rc::brute_alpha(a.graph), 2);
    for (const auto& part : a.parts) EXPECT_TRUE(rc::is_clique(a.graph, part));
  }
}

TEST(Hyperantihole, ExtremalSizes) {
  EXPECT_EQ(rc::extremal_hyperantihole_sizes(7, 3), std::vector<int>(7, 1));
  EXPECT_EQ(rc::extremal_hyperantihole_sizes(7, 6), std::vector<int>(7, 2));
  rc::HyperantiholeInstance a = rc::gen_extremal_hyperantihole(7, 6);
  EXPECT_EQ(rc::brute_omega(a.graph), 6);
  EXPECT_EQ(rc::brute_chi(a.graph).chi, rc::g_k(7, 6));
  for (int k : {5, 7, 9})
    for (int n = (k - 1) / 2; n <= 30; ++n) {
      auto sizes = rc::extremal_hyperantihole_sizes(k, n);
      ASSERT_EQ(static_cast<int>(sizes.size()), k);
      EXPECT_GE(*std::min_element(sizes.begin(), sizes.end()), 1);
    }
  EXPECT_THROW(rc::extremal_hyperantihole_sizes(7, 2), rc::InputError);
  EXPECT_THROW(rc::extremal_hyperantihole_sizes(8, 5), rc::InputError);
}

TEST(RandomRing, ProducesVerifiedRings) {
  for (std::uint64_t seed = 0; seed < 1000; ++seed) {
    const int k = 4 + static_cast<int>(seed % 7);
    rc::RingInstance r = rc::gen_random_ring(k, 1 + static_cast<int>(seed % 5), seed);
    ASSERT_TRUE(rc::verify_ring_partition(r.graph, r.partition)) << "seed " << seed;
    ASSERT_TRUE(rc::verify_ring_ordering(r.graph, r.partition)) << "seed " << seed;
  }
}

TEST(RandomRing, DeterministicPerSeed) {
  EXPECT_EQ(rc::save_dimacs(rc::gen_random_ring(7, 4, 99).graph),
            rc::save_dimacs(rc::gen_random_ring(7, 4, 99).graph));
}

TEST(RandomRing, ExactTotal) {
  rc::Rng rng(5);
  for (int n = 6; n <= 40; ++n) {
    rc::RingInstance r = rc::gen_random_ring_total(6, n, rng);
    EXPECT_EQ(r.graph.vertex_count(), n);
  }
  EXPECT_THROW(rc::gen_random_ring_total(6, 5, rng), rc::InputError);
  EXPECT_THROW(rc::gen_random_ring_total(3, 9, rng), rc::InputError);
}

TEST(Simplicial, AddedVertexIsSimplicial) {
  rc::Rng rng(7);
  for (int trial = 0; trial < 200; ++trial) {
    Graph g = rc::gen_random_ring_total(5, 12, rng).graph;
    Graph h = rc::add_simplicial(g, rng);
    ASSERT_EQ(h.vertex_count(), g.vertex_count() + 1);
    EXPECT_TRUE(rc::is_simplicial(h, g.vertex_count()));
    EXPECT_GE(h.degree(g.vertex_count()), 1);
  }
}

TEST(Compose, TrianglesOnAnEdgeGiveDiamond) {
  Graph g = rc::compose_clique_cutset(rc::complete_graph(3), rc::complete_graph(3), {1, 2}, {0, 1});
  EXPECT_EQ(g.vertex_count(), 4);
  EXPECT_EQ(g.edge_count(), 5u);
  EXPECT_FALSE(g.adjacent(0, 3));
}

TEST(Compose, RingAndClique) {
  rc::RingInstance r = rc::gen_extremal_hyperhole(5, 3);
  Graph g = rc::compose_clique_cutset(r.graph, rc::complete_graph(5), {0, 1}, {3, 4});
  EXPECT_EQ(g.vertex_count(), r.graph.vertex_count() + 3);
  EXPECT_EQ(rc::brute_omega(g), 5);
  EXPECT_TRUE(rc::brute_has_clique_cutset(g));
  EXPECT_THROW(rc::compose_clique_cutset(r.graph, rc::complete_graph(5), {0, 3}, {0, 1}),
               rc::InputError);
  EXPECT_THROW(rc::compose_clique_cutset(r.graph, rc::complete_graph(5), {0}, {0, 1}),
               rc::InputError);
}

TEST(Staircase, Validation) {
  EXPECT_NO_THROW(rc::validate_staircase({4, {2, 2, 1, 1}, {{2, 1}, {1, 1}, {1}, {2}}}));
  // Wrong number of rows.
  EXPECT_THROW(rc::validate_staircase({4, {1, 1, 1, 1}, {{1}, {1}, {1}}}), rc::InputError);
  // Row length differs from the part size.
  EXPECT_THROW(rc::validate_staircase({4, {2, 1, 1, 1}, {{1}, {1}, {1}, {2}}}), rc::InputError);
  // Bottom vertex must see the whole next part.
  EXPECT_THROW(rc::validate_staircase({4, {1, 2, 1, 1}, {{1}, {1, 1}, {1}, {1}}}), rc::InputError);
  // Increasing row.
  EXPECT_THROW(rc::validate_staircase({4, {3, 2, 1, 1}, {{2, 1, 2}, {1, 1}, {1}, {3}}}),
               rc::InputError);
  // Zero threshold.
  EXPECT_THROW(rc::validate_staircase({4, {2, 2, 1, 1}, {{2, 0}, {1, 1}, {1}, {2}}}), rc::InputError);
  EXPECT_THROW(rc::validate_staircase({3, {1, 1, 1}, {{1}, {1}, {1}}}), rc::InputError);
}
