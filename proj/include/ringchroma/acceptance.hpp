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

// End-to-end acceptance suite: eleven seeded, exactly reproducible checks
// that compare the structural algorithms with brute force, closed formulas
// and certificate replays. Shared by the acceptance test and the CLI.

#ifndef RINGCHROMA_ACCEPTANCE_HPP
#define RINGCHROMA_ACCEPTANCE_HPP

#include <algorithm>
#include <chrono>
#include <cstdint>
#include <exception>
#include <functional>
#include <numeric>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "ringchroma/bounds.hpp"
#include "ringchroma/chi_structure.hpp"
#include "ringchroma/coloring.hpp"
#include "ringchroma/generators.hpp"
#include "ringchroma/graph.hpp"
#include "ringchroma/gt_solver.hpp"
#include "ringchroma/hadwiger.hpp"
#include "ringchroma/oracle.hpp"
#include "ringchroma/recognition.hpp"
#include "ringchroma/ring_coloring.hpp"

namespace ringchroma {

struct AcceptanceOptions {
  /// Fewer instances per criterion; for smoke runs only.
  bool quick = false;
  std::uint64_t seed = 20260101;
};

struct CriterionResult {
  int id = 0;
  std::string name;
  bool pass = false;
  int instances = 0;
  std::string detail;
  double seconds = 0.0;
};

namespace acceptance_detail {

/// First failure wins; later checks are skipped.
class Tally {
 public:
  int instances = 0;
  std::string failure;

  bool ok() const { return failure.empty(); }

  void fail(const std::string& what) {
    if (failure.empty()) failure = what;
  }

  template <typename... Args>
  void expect(bool cond, Args&&... args) {
    if (cond || !failure.empty()) return;
    std::ostringstream s;
    (s << ... << args);
    failure = s.str();
  }
};

inline int scaled(const AcceptanceOptions& o, int full) { return o.quick ? std::max(1, full / 10) : full; }

/// Random relabelling, so nothing downstream can lean on generator order.
inline Graph shuffled(const Graph& g, Rng& rng) {
  std::vector<Vertex> perm(static_cast<std::size_t>(g.vertex_count()));
  std::iota(perm.begin(), perm.end(), 0);
  std::shuffle(perm.begin(), perm.end(), rng);
  return permute_vertices(g, perm);
}

inline int colors_of(const Coloring& c) { return static_cast<int>(c.colors_used()); }

inline std::string describe(const Graph& g) {
  std::ostringstream s;
  s << "n=" << g.vertex_count() << " m=" << g.edge_count();
  return s.str();
}

/// A maximal clique grown greedily from a random vertex, in random order.
inline VertexSet random_clique(const Graph& g, Rng& rng) {
  VertexSet order(static_cast<std::size_t>(g.vertex_count()));
  std::iota(order.begin(), order.end(), 0);
  std::shuffle(order.begin(), order.end(), rng);
  VertexSet clique;
  for (Vertex v : order) {
    bool ok = true;
    for (Vertex c : clique)
      if (!g.adjacent(v, c)) ok = false;
    if (ok) clique.push_back(v);
  }
  return clique;
}

}  // namespace acceptance_detail

/// 1. Ring colouring against brute force on small random rings, some grown
/// by simplicial vertices.
inline CriterionResult criterion_ring_coloring_oracle(const AcceptanceOptions& o) {
  using namespace acceptance_detail;
  Tally t;
  Rng rng(o.seed + 1);
  const int count = scaled(o, 500);
  for (int i = 0; i < count && t.ok(); ++i) {
    const int k = 4 + i % 5;
    const int extra = detail::uniform(rng, 0, 2) == 0 ? detail::uniform(rng, 1, 3) : 0;
    const int n = detail::uniform(rng, k, 16 - extra);
    Graph g = gen_random_ring_total(k, n, rng).graph;
    for (int s = 0; s < extra; ++s) g = add_simplicial(g, rng);
    g = shuffled(g, rng);
    std::optional<Coloring> c = color_ring_or_simplicial(g);
    ++t.instances;
    t.expect(c.has_value(), "instance ", i, " (", describe(g), "): not recognised");
    if (!c) break;
    t.expect(c->is_total() && is_proper(g, *c), "instance ", i, ": colouring not proper");
    const int oracle = brute_chi(g).chi;
    t.expect(colors_of(*c) == oracle, "instance ", i, " (", describe(g), "): solver ", colors_of(*c),
             " oracle ", oracle);
  }
  return {1, "ring colouring matches brute-force chromatic number", t.ok(), t.instances, t.failure};
}

/// 2. Chromatic number formula against the colouring and the hyperhole
/// formula.
inline CriterionResult criterion_chi_formula(const AcceptanceOptions& o) {
  using namespace acceptance_detail;
  Tally t;
  Rng rng(o.seed + 2);
  const int count = scaled(o, 500);
  for (int i = 0; i < count && t.ok(); ++i) {
    const int k = detail::uniform(rng, 4, 12);
    const int n = detail::uniform(rng, k, 60);
    RingInstance r = gen_random_ring_total(k, n, rng);
    ++t.instances;
    std::optional<int> chi = chi_ring_class(r.graph);
    std::optional<Coloring> c = color_ring_or_simplicial(r.graph);
    t.expect(chi.has_value() && c.has_value(), "instance ", i, ": not recognised");
    if (!chi || !c) break;
    t.expect(is_proper(r.graph, *c) && c->is_total(), "instance ", i, ": colouring not proper");
    const int hsize = selection_size(max_hyperhole(r.graph, r.partition));
    const int formula = std::max(omega_ring(r.graph, r.partition), ceil_div(hsize, k / 2));
    t.expect(*chi == colors_of(*c) && *chi == formula, "instance ", i, " (k=", k, " n=", n, "): chi ",
             *chi, " colouring ", colors_of(*c), " formula ", formula);
  }
  return {2, "chromatic number equals colouring size and hyperhole formula", t.ok(), t.instances,
          t.failure};
}

/// 3. Even rings are coloured with omega colours.
inline CriterionResult criterion_even_perfect(const AcceptanceOptions& o) {
  using namespace acceptance_detail;
  Tally t;
  Rng rng(o.seed + 3);
  const int count = scaled(o, 200);
  for (int i = 0; i < count && t.ok(); ++i) {
    const int k = 2 * detail::uniform(rng, 2, 6);
    const int n = detail::uniform(rng, k, 50);
    RingInstance r = gen_random_ring_total(k, n, rng);
    ++t.instances;
    std::optional<Coloring> c = color_ring_or_simplicial(r.graph);
    t.expect(c.has_value(), "instance ", i, ": not recognised");
    if (!c) break;
    const int omega = omega_ring(r.graph, r.partition);
    t.expect(is_proper(r.graph, *c) && colors_of(*c) == omega, "instance ", i, " (k=", k, "): ",
             colors_of(*c), " colours, omega ", omega);
  }
  return {3, "even rings use omega colours", t.ok(), t.instances, t.failure};
}

/// 4. Extremal hyperholes reach f_k.
inline CriterionResult criterion_extremal_hyperholes(const AcceptanceOptions& o) {
  using namespace acceptance_detail;
  Tally t;
  const int top = o.quick ? 8 : 24;
  for (int k : {5, 7, 9})
    for (int n = 2; n <= top && t.ok(); ++n) {
      RingInstance h = gen_extremal_hyperhole(k, n);
      ++t.instances;
      std::optional<int> omega = omega_ring_class(h.graph);
      std::optional<int> chi = chi_ring_class(h.graph);
      std::optional<Coloring> c = color_ring_or_simplicial(h.graph);
      t.expect(omega && chi && c, "k=", k, " n=", n, ": not recognised");
      if (!omega || !chi || !c) break;
      const long long want = f_k(k, n);
      t.expect(*omega == n, "k=", k, " n=", n, ": omega ", *omega);
      t.expect(*chi == want && colors_of(*c) == want && is_proper(h.graph, *c), "k=", k, " n=", n,
               ": chi ", *chi, " colouring ", colors_of(*c), " expected ", want);
    }
  return {4, "extremal hyperholes have omega n and chi f_k(n)", t.ok(), t.instances, t.failure};
}

/// 5. Extremal hyperantiholes reach g_k.
inline CriterionResult criterion_extremal_hyperantiholes(const AcceptanceOptions& o) {
  using namespace acceptance_detail;
  Tally t;
  const int top = o.quick ? 10 : 20;
  for (int k : {5, 7, 9})
    for (int n = (k - 1) / 2; n <= top && t.ok(); ++n) {
      HyperantiholeInstance a = gen_extremal_hyperantihole(k, n);
      ++t.instances;
      Coloring c = color_alpha_le2(a.graph);
      Matching m = max_matching_general(complement(a.graph));
      const long long want = g_k(k, n);
      const int formula = a.graph.vertex_count() - static_cast<int>(m.size());
      t.expect(is_proper(a.graph, c) && colors_of(c) == want && formula == want, "k=", k, " n=", n,
               ": colouring ", colors_of(c), " |V|-|M| ", formula, " expected ", want);
      if (n <= 14) {
        const int omega = brute_omega(a.graph);
        t.expect(omega == n, "k=", k, " n=", n, ": brute omega ", omega);
      }
    }
  return {5, "extremal hyperantiholes have omega n and chi g_k(n)", t.ok(), t.instances, t.failure};
}

/// 6. Bounding functions: both forms agree and the order relations hold.
inline CriterionResult criterion_bounds(const AcceptanceOptions&) {
  using namespace acceptance_detail;
  Tally t;
  for (long long k : {5LL, 7LL, 9LL, 11LL})
    for (long long n = 1; n <= 40 && t.ok(); ++n) {
      ++t.instances;
      t.expect(f_k_piecewise(k, n) == f_k_closed(k, n), "f_k forms differ at k=", k, " n=", n);
      t.expect(g_k_piecewise(k, n) == g_k_closed(k, n), "g_k forms differ at k=", k, " n=", n);
      if (!t.ok()) break;
      t.expect(f_T(n) >= f_k(k, n) && f_k(k, n) >= g_k(k, n), "f_T >= f_k >= g_k fails at k=", k,
               " n=", n);
      t.expect(f_k(k, n + 1) >= f_k(k, n) && g_k(k, n + 1) >= g_k(k, n) && f_T(n + 1) >= f_T(n),
               "monotonicity fails at k=", k, " n=", n);
      t.expect(f_k(k, n) >= f_k(k + 2, n) && g_k(k, n) >= g_k(k + 2, n), "k-monotonicity fails at k=", k,
               " n=", n);
      if (k == 5) t.expect(f_T(n) == f_k(5, n) && f_T(n) == g_k(5, n), "f_T != f_5 or g_5 at n=", n);
    }
  return {6, "bounding functions: closed forms and monotonicity", t.ok(), t.instances, t.failure};
}

namespace acceptance_detail {

/// One random building block of the class.
inline Graph random_block(Rng& rng, int budget) {
  const int kind = detail::uniform(rng, 0, 3);
  if (kind == 0) return complete_graph(detail::uniform(rng, 1, std::min(6, budget)));
  if (kind == 3 && budget >= 7) {
    std::vector<int> sizes;
    const int cap = std::max(1, std::min(3, budget / 7));
    for (int i = 0; i < 7; ++i) sizes.push_back(detail::uniform(rng, 1, cap));
    return gen_hyperantihole(7, sizes).graph;
  }
  if (budget < 4) return complete_graph(budget);
  const int k = detail::uniform(rng, 4, std::min(9, budget));
  const int n = detail::uniform(rng, k, std::max(k, std::min(budget, 3 * k)));
  Graph g = gen_random_ring_total(k, n, rng).graph;
  if (kind == 2)
    for (int s = detail::uniform(rng, 1, 3); s > 0 && g.vertex_count() < budget; --s) g = add_simplicial(g, rng);
  return g;
}

/// Glues blocks along random cliques (possibly empty) until the budget is
/// spent.
inline Graph random_gt_composite(Rng& rng, int max_n) {
  Graph acc = random_block(rng, max_n);
  const int pieces = detail::uniform(rng, 1, 5);
  for (int p = 0; p < pieces; ++p) {
    const int room = max_n - acc.vertex_count();
    if (room < 1) break;
    Graph next = random_block(rng, room);
    VertexSet ka = random_clique(acc, rng);
    VertexSet kb = random_clique(next, rng);
    const int most = std::min({static_cast<int>(ka.size()), static_cast<int>(kb.size()),
                               next.vertex_count() - 1});
    const int s = detail::uniform(rng, 0, most);
    ka.resize(static_cast<std::size_t>(s));
    kb.resize(static_cast<std::size_t>(s));
    acc = compose_clique_cutset(acc, next, ka, kb);
  }
  return shuffled(acc, rng);
}

}  // namespace acceptance_detail

/// 7. Clique-cutset composites of rings, cliques, simplicial growths and
/// 7-hyperantiholes.
inline CriterionResult criterion_gt_composites(const AcceptanceOptions& o) {
  using namespace acceptance_detail;
  Tally t;
  Rng rng(o.seed + 7);
  const int count = scaled(o, 240);
  const int caps[] = {16, 30, 120};
  for (int i = 0; i < count && t.ok(); ++i) {
    Graph g = random_gt_composite(rng, caps[i % 3]);
    const int n = g.vertex_count();
    ++t.instances;
    std::optional<Coloring> c = color_gt(g);
    std::optional<int> chi = chi_gt(g);
    t.expect(c && chi, "instance ", i, " (", describe(g), "): reported outside the class");
    if (!c || !chi) break;
    t.expect(c->is_total() && is_proper(g, *c), "instance ", i, ": colouring not proper");
    t.expect(colors_of(*c) == *chi, "instance ", i, ": colouring ", colors_of(*c), " chi ", *chi);
    if (n <= 16) {
      const int oracle = brute_chi(g).chi;
      t.expect(*chi == oracle, "instance ", i, " (", describe(g), "): chi ", *chi, " oracle ", oracle);
    }
    if (n <= 30) {
      const int omega = brute_omega(g);
      t.expect(*chi <= f_T(omega), "instance ", i, ": chi ", *chi, " above f_T(", omega, ")");
    }
  }
  return {7, "clique-cutset composites: colouring, chi, oracle and f_T bound", t.ok(), t.instances,
          t.failure};
}

/// 8. Structural facts replayed on small rings: hole shape, chordal
/// complements of parts, two-colour component shape.
inline CriterionResult criterion_structure_replay(const AcceptanceOptions& o) {
  using namespace acceptance_detail;
  Tally t;
  Rng rng(o.seed + 8);
  const int count = scaled(o, 200);
  for (int i = 0; i < count && t.ok(); ++i) {
    const int k = detail::uniform(rng, 4, 9);
    const int n = detail::uniform(rng, k, 20);
    RingInstance r = gen_random_ring_total(k, n, rng);
    const Graph& g = r.graph;
    const RingPartition& p = r.partition;
    ++t.instances;
    PartIndex idx = index_partition(g, p);
    for (const auto& hole : enumerate_holes(g)) {
      std::vector<int> hits(static_cast<std::size_t>(k), 0);
      for (Vertex v : hole) ++hits[idx.part_of[v]];
      bool once = std::all_of(hits.begin(), hits.end(), [](int h) { return h == 1; });
      t.expect(static_cast<int>(hole.size()) == k && once, "instance ", i, ": hole of length ",
               hole.size(), " in a ", k, "-ring");
    }
    for (int j = 0; j < k; ++j) {
      VertexSet rest;
      for (Vertex v = 0; v < g.vertex_count(); ++v)
        if (idx.part_of[v] != j) rest.push_back(v);
      t.expect(is_chordal(induced_subgraph(g, rest).graph), "instance ", i, ": R minus part ", j,
               " not chordal");
    }
    if (k % 2 == 0) continue;
    std::optional<Coloring> c = color_ring_or_simplicial(g);
    t.expect(c.has_value(), "instance ", i, ": not recognised");
    if (!c) break;
    std::vector<Color> pal = c->palette();
    for (std::size_t a = 0; a < pal.size(); ++a)
      for (std::size_t b = a + 1; b < pal.size(); ++b) {
        try {
          for (const auto& comp : two_color_components(g, p, *c, pal[a], pal[b]))
            t.expect(check_component_shape(g, p, comp), "instance ", i, ": colours ", pal[a], ",",
                     pal[b], " component fails replay");
        } catch (const StructureError& e) {
          t.fail("instance " + std::to_string(i) + ": " + e.what());
        }
      }
  }
  return {8, "structure replay: holes, chordality, two-colour components", t.ok(), t.instances,
          t.failure};
}

/// 9. Explicit clique minors with as many branch sets as the chromatic number.
inline CriterionResult criterion_hadwiger(const AcceptanceOptions& o) {
  using namespace acceptance_detail;
  Tally t;
  Rng rng(o.seed + 9);
  const int count = scaled(o, 150);
  for (int i = 0; i < count && t.ok(); ++i) {
    const int k = detail::uniform(rng, 4, 9);
    std::vector<int> sizes;
    for (int j = 0; j < k; ++j) sizes.push_back(detail::uniform(rng, 1, 4));
    RingInstance h = gen_hyperhole(k, sizes);
    ++t.instances;
    std::optional<Coloring> c = color_ring_or_simplicial(h.graph);
    t.expect(c.has_value(), "hyperhole ", i, ": not recognised");
    if (!c) break;
    t.expect(verify_minor(h.graph, hadwiger_minor_hyperhole(h.graph, h.partition), colors_of(*c)),
             "hyperhole ", i, " (k=", k, "): minor check failed");
  }
  for (int i = 0; i < count && t.ok(); ++i) {
    const int k = detail::uniform(rng, 4, 9);
    const int n = detail::uniform(rng, k, 30);
    RingInstance r = gen_random_ring_total(k, n, rng);
    ++t.instances;
    std::optional<Coloring> c = color_ring_or_simplicial(r.graph);
    t.expect(c.has_value(), "ring ", i, ": not recognised");
    if (!c) break;
    t.expect(verify_minor(r.graph, hadwiger_minor_ring(r.graph, r.partition), colors_of(*c)), "ring ",
             i, " (k=", k, " n=", n, "): minor check failed");
  }
  for (int i = 0; i < count && t.ok(); ++i) {
    const int k = i % 2 == 0 ? 5 : 7;
    std::vector<int> sizes(static_cast<std::size_t>(k), 1);
    for (int extra = detail::uniform(rng, 0, 12 - k); extra > 0; --extra)
      ++sizes[detail::uniform(rng, 0, k - 1)];
    HyperantiholeInstance a = gen_hyperantihole(k, sizes);
    ++t.instances;
    const int chi = colors_of(color_alpha_le2(a.graph));
    t.expect(verify_minor(a.graph, hadwiger_minor_hyperantihole(a.graph, a.parts), chi),
             "hyperantihole ", i, " (k=", k, "): minor check failed");
  }
  for (int k : {5, 7})
    for (int n = (k - 1) / 2; n <= 12 && t.ok(); ++n) {
      HyperantiholeInstance a = gen_extremal_hyperantihole(k, n);
      ++t.instances;
      const int chi = colors_of(color_alpha_le2(a.graph));
      t.expect(verify_minor(a.graph, hadwiger_minor_hyperantihole(a.graph, a.parts), chi),
               "extremal hyperantihole k=", k, " n=", n, ": minor check failed");
    }
  return {9, "clique minors with chi branch sets", t.ok(), t.instances, t.failure};
}

/// 10. Maximum hyperhole search against enumeration, with the size identity
/// on every path.
inline CriterionResult criterion_max_hyperhole(const AcceptanceOptions& o) {
  using namespace acceptance_detail;
  Tally t;
  Rng rng(o.seed + 10);
  const int count = scaled(o, 400);
  for (int i = 0; i < count && t.ok(); ++i) {
    const int k = detail::uniform(rng, 4, 10);
    std::vector<int> sizes;
    long long product = 1;
    for (int j = 0; j < k; ++j) {
      int s = detail::uniform(rng, 1, 6);
      while (product * s > 100000) --s;
      sizes.push_back(s);
      product *= s;
    }
    RingInstance r = gen_ring(random_staircase(k, sizes, rng));
    ++t.instances;
    MaxHyperholeReport rep = max_hyperhole_report(r.graph, r.partition);
    const int got = selection_size(rep.best);
    const int want = brute_max_hyperhole(r.graph, r.partition);
    t.expect(is_valid_selection(r.graph, r.partition, rep.best) && got == want, "instance ", i,
             ": search ", got, " enumeration ", want);
    for (const HyperholePath& path : rep.paths)
      t.expect(2LL * (r.graph.vertex_count() - path.size) == path.weight &&
                   selection_size(path.selection) == path.size,
               "instance ", i, ": size identity fails for start ", path.j);
  }
  return {10, "maximum hyperhole matches enumeration", t.ok(), t.instances, t.failure};
}

/// 11. Timing smoke check on large random rings.
inline CriterionResult criterion_performance(const AcceptanceOptions& o) {
  using namespace acceptance_detail;
  using Clock = std::chrono::steady_clock;
  Tally t;
  Rng rng(o.seed + 11);
  const int big = o.quick ? 500 : 2000;
  const int mid = o.quick ? 100 : 300;
  std::ostringstream note;
  {
    RingInstance r = gen_random_ring_total(7, big, rng);
    auto t0 = Clock::now();
    std::optional<int> chi = chi_ring_class(r.graph);
    double s = std::chrono::duration<double>(Clock::now() - t0).count();
    ++t.instances;
    note << "chi n=" << big << " " << s << "s; ";
    t.expect(chi.has_value() && s <= 10.0, "chi on n=", big, " took ", s, "s");
  }
  {
    RingInstance r = gen_random_ring_total(9, mid, rng);
    auto t0 = Clock::now();
    std::optional<Coloring> c = color_ring_or_simplicial(r.graph);
    double s = std::chrono::duration<double>(Clock::now() - t0).count();
    ++t.instances;
    note << "colour n=" << mid << " " << s << "s";
    t.expect(c.has_value() && is_proper(r.graph, *c) && s <= 60.0, "colouring n=", mid, " took ", s, "s");
  }
  return {11, "performance smoke check", t.ok(), t.instances, t.ok() ? note.str() : t.failure};
}

using CriterionFn = std::function<CriterionResult(const AcceptanceOptions&)>;

inline std::vector<CriterionFn> acceptance_criteria() {
  return {criterion_ring_coloring_oracle, criterion_chi_formula,        criterion_even_perfect,
          criterion_extremal_hyperholes,  criterion_extremal_hyperantiholes, criterion_bounds,
          criterion_gt_composites,        criterion_structure_replay,   criterion_hadwiger,
          criterion_max_hyperhole,        criterion_performance};
}

/// Runs one criterion, timing it and turning exceptions into failures.
inline CriterionResult run_criterion(int id, const AcceptanceOptions& o) {
  auto all = acceptance_criteria();
  if (id < 1 || id > static_cast<int>(all.size())) throw InputError("no criterion " + std::to_string(id));
  auto t0 = std::chrono::steady_clock::now();
  CriterionResult r;
  try {
    r = all[id - 1](o);
  } catch (const std::exception& e) {
    r.id = id;
    r.name = "criterion " + std::to_string(id);
    r.pass = false;
    r.detail = std::string("exception: ") + e.what();
  }
  r.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
  return r;
}

inline std::vector<CriterionResult> run_acceptance(const AcceptanceOptions& o) {
  std::vector<CriterionResult> out;
  for (int id = 1; id <= static_cast<int>(acceptance_criteria().size()); ++id)
    out.push_back(run_criterion(id, o));
  return out;
}

}  // namespace ringchroma

#endif  // RINGCHROMA_ACCEPTANCE_HPP
