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
#include <optional>
#include <vector>

#include "ringchroma/chi_structure.hpp"
#include "ringchroma/generators.hpp"
#include "ringchroma/graph.hpp"
#include "ringchroma/oracle.hpp"
#include "ringchroma/recognition.hpp"

namespace rc = ringchroma;
using rc::Graph;
using rc::RingPartition;
using rc::VertexSet;

namespace {

RingPartition singletons(int k) {
  std::vector<VertexSet> parts;
  for (int v = 0; v < k; ++v) parts.push_back({v});
  return RingPartition(parts);
}

// Every cut tuple, visited in lexicographic order.
template <typename F>
void for_each_selection(const RingPartition& p, F&& f) {
  rc::HyperholeSelection s{std::vector<int>(static_cast<std::size_t>(p.k()), 1)};
  for (;;) {
    f(s);
    int i = 0;
    while (i < p.k() && s.cuts[i] == p.size(i)) s.cuts[i++] = 1;
    if (i == p.k()) return;
    ++s.cuts[i];
  }
}

}  // namespace

TEST(HyperholeChi, Examples) {
  EXPECT_EQ(rc::hyperhole_chi(rc::cycle_graph(5), singletons(5)), 3);
  EXPECT_EQ(rc::hyperhole_chi(rc::cycle_graph(6), singletons(6)), 2);
  rc::RingInstance h = rc::gen_hyperhole(5, {2, 2, 2, 2, 2});
  EXPECT_EQ(rc::hyperhole_chi(h.graph, h.partition), 5);
  EXPECT_EQ(rc::brute_chi(h.graph).chi, 5);
}

TEST(HyperholeChi, RejectsNonHyperhole) {
  rc::RingInstance r = rc::gen_ring({4, {2, 2, 1, 1}, {{2, 1}, {1, 1}, {1}, {2}}});
  EXPECT_FALSE(rc::is_hyperhole_partition(r.graph, r.partition));
  EXPECT_THROW(rc::hyperhole_chi(r.graph, r.partition), rc::InputError);
}

TEST(HyperholeChi, MatchesBruteForceOnSmallHyperholes) {
  rc::Rng rng(2);
  for (int trial = 0; trial < 120; ++trial) {
    const int k = rc::detail::uniform(rng, 4, 7);
    std::vector<int> sizes;
    for (int i = 0; i < k; ++i) sizes.push_back(rc::detail::uniform(rng, 1, 3));
    rc::RingInstance h = rc::gen_hyperhole(k, sizes);
    if (h.graph.vertex_count() > 16) continue;
    EXPECT_EQ(rc::hyperhole_chi(h.graph, h.partition), rc::brute_chi(h.graph).chi);
  }
}

TEST(OmegaRing, Examples) {
  rc::RingInstance h = rc::gen_hyperhole(5, {1, 2, 1, 2, 1});
  EXPECT_EQ(rc::omega_ring(h.graph, h.partition), 3);
  for (int k = 4; k <= 9; ++k) EXPECT_EQ(rc::omega_ring(rc::cycle_graph(k), singletons(k)), 2);
}

TEST(OmegaRing, MatchesBruteForce) {
  rc::Rng rng(3);
  for (int trial = 0; trial < 300; ++trial) {
    const int k = rc::detail::uniform(rng, 4, 8);
    rc::RingInstance r = rc::gen_random_ring_total(k, rc::detail::uniform(rng, k, 18), rng);
    VertexSet q = rc::max_clique_ring(r.graph, r.partition);
    EXPECT_TRUE(rc::is_clique(r.graph, q));
    EXPECT_EQ(static_cast<int>(q.size()), rc::brute_omega(r.graph));
  }
}

TEST(MaxHyperhole, HyperholeSelectsEverything) {
  rc::RingInstance h = rc::gen_hyperhole(7, {1, 3, 2, 1, 2, 2, 1});
  rc::MaxHyperholeReport rep = rc::max_hyperhole_report(h.graph, h.partition);
  EXPECT_EQ(rc::selection_size(rep.best), h.graph.vertex_count());
  EXPECT_EQ(rc::selection_vertices(h.partition, rep.best).size(),
            static_cast<std::size_t>(h.graph.vertex_count()));
  bool zero = false;
  for (const auto& path : rep.paths) zero = zero || path.weight == 0;
  EXPECT_TRUE(zero);
}

TEST(MaxHyperhole, ArcWeight) {
  EXPECT_EQ(rc::hyperhole_arc_weight(3, 2, 2, 1), 2);
  EXPECT_EQ(rc::hyperhole_arc_weight(3, 3, 2, 2), 0);
  EXPECT_THROW(rc::hyperhole_arc_weight(3, 4, 2, 1), rc::InputError);
}

TEST(MaxHyperhole, MatchesEnumeration) {
  rc::Rng rng(5);
  for (int trial = 0; trial < 400; ++trial) {
    const int k = rc::detail::uniform(rng, 4, 7);
    std::vector<int> sizes;
    for (int i = 0; i < k; ++i) sizes.push_back(rc::detail::uniform(rng, 1, 3));
    rc::RingInstance r = rc::gen_ring(rc::random_staircase(k, sizes, rng));
    rc::MaxHyperholeReport rep = rc::max_hyperhole_report(r.graph, r.partition);
    EXPECT_TRUE(rc::is_valid_selection(r.graph, r.partition, rep.best));
    EXPECT_EQ(rc::selection_size(rep.best), rc::brute_max_hyperhole(r.graph, r.partition));
    EXPECT_EQ(rep.paths.size(), static_cast<std::size_t>(r.partition.size(0)));
    for (const auto& path : rep.paths) {
      EXPECT_EQ(path.size, r.graph.vertex_count() - path.weight / 2);
      EXPECT_EQ(path.selection.cuts[0], path.j);
      EXPECT_TRUE(rc::is_valid_selection(r.graph, r.partition, path.selection));
    }
  }
}

TEST(MaxHyperhole, SelectionInducesAHyperhole) {
  rc::Rng rng(7);
  for (int trial = 0; trial < 100; ++trial) {
    const int k = rc::detail::uniform(rng, 4, 9);
    rc::RingInstance r = rc::gen_random_ring_total(k, rc::detail::uniform(rng, k, 40), rng);
    rc::HyperholeSelection s = rc::max_hyperhole(r.graph, r.partition);
    VertexSet vs = rc::selection_vertices(r.partition, s);
    auto sub = rc::induced_subgraph(r.graph, vs);
    auto p = rc::restrict_partition(r.partition, sub);
    ASSERT_TRUE(p);
    EXPECT_TRUE(rc::is_hyperhole_partition(sub.graph, *p));
  }
}

TEST(MaxHyperhole, RejectsBadSelections) {
  rc::RingInstance h = rc::gen_hyperhole(5, {2, 1, 1, 1, 1});
  EXPECT_THROW(rc::selection_vertices(h.partition, {{3, 1, 1, 1, 1}}), rc::InputError);
  EXPECT_THROW(rc::selection_vertices(h.partition, {{1, 1, 1, 1}}), rc::InputError);
  EXPECT_FALSE(rc::is_valid_selection(h.graph, h.partition, {{0, 1, 1, 1, 1}}));
}

TEST(ChiFromSelection, Examples) {
  rc::RingInstance even = rc::gen_hyperhole(6, {2, 2, 2, 2, 2, 2});
  EXPECT_EQ(rc::chi_from_selection(even.graph, even.partition, rc::max_hyperhole(even.graph, even.partition)), 4);
  EXPECT_EQ(rc::chi_from_selection(rc::cycle_graph(7), singletons(7),
                                   rc::max_hyperhole(rc::cycle_graph(7), singletons(7))),
            3);
  rc::RingInstance h = rc::gen_hyperhole(5, {2, 2, 2, 2, 2});
  EXPECT_EQ(rc::chi_from_selection(h.graph, h.partition, rc::max_hyperhole(h.graph, h.partition)), 5);
}

TEST(ChiRingClass, Examples) {
  EXPECT_EQ(rc::chi_ring_class(Graph(1)), 1);
  EXPECT_EQ(rc::chi_ring_class(rc::cycle_graph(5)), 3);
  EXPECT_EQ(rc::chi_ring_class(rc::complete_graph(4)), 4);
  EXPECT_FALSE(rc::chi_ring_class(rc::petersen_graph()));
  EXPECT_FALSE(rc::omega_ring_class(rc::petersen_graph()));
}

TEST(ChiRingClass, RingsWithSimplicialVerticesMatchBruteForce) {
  rc::Rng rng(11);
  for (int trial = 0; trial < 300; ++trial) {
    const int k = rc::detail::uniform(rng, 4, 8);
    Graph g = rc::gen_random_ring_total(k, rc::detail::uniform(rng, k, 13), rng).graph;
    for (int s = rc::detail::uniform(rng, 0, 3); s > 0; --s) g = rc::add_simplicial(g, rng);
    EXPECT_EQ(rc::chi_ring_class(g), rc::brute_chi(g).chi) << "trial " << trial;
    EXPECT_EQ(rc::omega_ring_class(g), rc::brute_omega(g));
  }
}

TEST(ChiRingClass, EqualsLargestHyperholeChi) {
  // chi of a ring is the largest chi over the hyperholes inside it; scan
  // every normal hyperhole by brute force.
  rc::Rng rng(13);
  for (int trial = 0; trial < 150; ++trial) {
    const int k = rc::detail::uniform(rng, 4, 7);
    rc::RingInstance r = rc::gen_random_ring_total(k, rc::detail::uniform(rng, k, 15), rng);
    int best = 0;
    for_each_selection(r.partition, [&](const rc::HyperholeSelection& s) {
      if (!rc::is_valid_selection(r.graph, r.partition, s)) return;
      auto sub = rc::induced_subgraph(r.graph, rc::selection_vertices(r.partition, s));
      best = std::max(best, rc::hyperhole_chi(sub.graph, *rc::restrict_partition(r.partition, sub)));
    });
    EXPECT_EQ(best, rc::brute_chi(r.graph).chi) << "trial " << trial;
  }
}

TEST(ReduceSimplicial, CliqueSizes) {
  Graph g = rc::complete_graph(3);
  rc::Rng rng(1);
  g = rc::add_simplicial(g, rng);
  rc::SimplicialReduction red = rc::reduce_simplicial(g);
  EXPECT_TRUE(red.sequence.residual.empty());
  EXPECT_EQ(red.max_r, rc::brute_omega(g));
  EXPECT_FALSE(red.ring);
}
