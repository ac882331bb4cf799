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

#include <cstdint>
#include <string>

#include "ringchroma/dimacs.hpp"
#include "ringchroma/errors.hpp"
#include "ringchroma/generators.hpp"
#include "ringchroma/graph.hpp"

namespace rc = ringchroma;

namespace {

std::size_t parse_error_line(const std::string& text) {
  try {
    rc::load_dimacs(text);
  } catch (const rc::ParseError& e) {
    return e.line();
  }
  ADD_FAILURE() << "no parse error for:\n" << text;
  return 9999;
}

}  // namespace

TEST(Dimacs, Triangle) {
  rc::Graph g = rc::load_dimacs("p edge 3 3\ne 1 2\ne 2 3\ne 1 3\n");
  EXPECT_EQ(g, rc::complete_graph(3));
}

TEST(Dimacs, SingleVertex) {
  rc::Graph g = rc::load_dimacs("p edge 1 0\n");
  EXPECT_EQ(g.vertex_count(), 1);
  EXPECT_EQ(g.edge_count(), 0u);
}

TEST(Dimacs, CommentsAndColFormat) {
  rc::Graph g = rc::load_dimacs("c hello\n\np col 4 2\nc mid\ne 1 2\ne 3 4\n");
  EXPECT_EQ(g.edge_count(), 2u);
  EXPECT_TRUE(g.adjacent(2, 3));
}

TEST(Dimacs, Errors) {
  EXPECT_EQ(parse_error_line("p edge 2 1\ne 1 1\n"), 2u);
  EXPECT_EQ(parse_error_line("p edge 2 1\ne 1 3\n"), 2u);
  EXPECT_EQ(parse_error_line("p edge 2 2\ne 1 2\ne 2 1\n"), 3u);
  EXPECT_EQ(parse_error_line("p edge 2 1\np edge 2 1\ne 1 2\n"), 2u);
  EXPECT_EQ(parse_error_line("p edge x 1\n"), 1u);
  EXPECT_EQ(parse_error_line("p edge 3 1\ne 1\n"), 2u);
  EXPECT_EQ(parse_error_line("p edge 3 1\nq 1 2\n"), 2u);
  EXPECT_EQ(parse_error_line("e 1 2\n"), 1u);
  EXPECT_EQ(parse_error_line(""), 0u);
  EXPECT_EQ(parse_error_line("p edge 3 2\ne 1 2\n"), 0u);
}

TEST(Dimacs, ParseErrorIsInputError) {
  EXPECT_THROW(rc::load_dimacs("garbage"), rc::InputError);
}

TEST(Dimacs, RoundTripIsCanonical) {
  for (std::uint64_t seed = 0; seed < 40; ++seed) {
    rc::RingInstance r = rc::gen_random_ring(4 + static_cast<int>(seed % 5), 4, seed);
    const std::string text = rc::save_dimacs(r.graph);
    rc::Graph back = rc::load_dimacs(text);
    EXPECT_EQ(back, r.graph);
    EXPECT_EQ(rc::save_dimacs(back), text);
  }
}

TEST(Dimacs, CanonicalizesEdgeOrder) {
  rc::Graph g = rc::load_dimacs("p edge 3 2\ne 3 2\ne 2 1\n");
  EXPECT_EQ(rc::save_dimacs(g), "p edge 3 2\ne 1 2\ne 2 3\n");
}
