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


// ringchroma: batch front end. Reads DIMACS graphs, writes one JSON envelope
// {"status": "ok" | "negative" | "error", "data": {...}} to stdout.
// Vertex identifiers in JSON are the 1-based DIMACS identifiers.
//
// Exit codes: 0 success, 1 negative answer (not a ring, outside the class,
// invalid certificate, failed acceptance criterion), 2 input error,
// 3 capacity exceeded, 4 internal error.

#include <cstdint>
#include <fstream>
#include <iostream>
#include <iterator>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"
#include "ringchroma.hpp"

namespace {

using json = nlohmann::json;
using namespace ringchroma;

constexpr int kExitNegative = 1;
constexpr int kExitInput = 2;
constexpr int kExitCapacity = 3;
constexpr int kExitInternal = 4;

std::string read_text(const std::string& path) {
  if (path == "-") return {std::istreambuf_iterator<char>(std::cin), {}};
  std::ifstream in(path, std::ios::binary);
  if (!in) throw InputError("cannot open " + path);
  std::ostringstream s;
  s << in.rdbuf();
  return s.str();
}

Graph read_graph(const std::string& path) { return load_dimacs(read_text(path)); }

json ids(const VertexSet& s) {
  json a = json::array();
  for (Vertex v : s) a.push_back(v + 1);
  return a;
}

json id_lists(const std::vector<VertexSet>& sets) {
  json a = json::array();
  for (const auto& s : sets) a.push_back(ids(s));
  return a;
}

json partition_json(const std::vector<VertexSet>& parts) {
  return {{"k", parts.size()}, {"parts", id_lists(parts)}};
}

// Uncoloured positions are null.
json coloring_json(const Coloring& c) {
  json a = json::array();
  for (Vertex v = 0; v < c.vertex_count(); ++v) {
    if (c.has(v))
      a.push_back(c[v]);
    else
      a.push_back(nullptr);
  }
  return a;
}

int emit(int code, json data) {
  const char* status = code == 0 ? "ok" : code == kExitNegative ? "negative" : "error";
  std::cout << json{{"status", status}, {"data", std::move(data)}}.dump() << '\n';
  return code;
}

int emit_ok(json data) { return emit(0, std::move(data)); }
int emit_negative(json data) { return emit(kExitNegative, std::move(data)); }

int emit_error(int code, const std::string& kind, const std::string& message,
               std::optional<std::size_t> line = std::nullopt) {
  std::cerr << kind << " error: " << message << '\n';
  json data{{"kind", kind}, {"message", message}};
  if (line) data["line"] = *line;
  return emit(code, std::move(data));
}

struct Settings {
  int cap = OracleCaps{}.chi;
};

// recognize ---------------------------------------------------------------

int cmd_recognize(const std::string& file) {
  Graph g = read_graph(file);
  std::optional<RingPartition> p = recognize_ring(g);
  if (!p) {
    return emit_negative({{"is_ring", false}});
  }
  return emit_ok({{"is_ring", true}, {"k", p->k()}, {"partition", partition_json(p->parts())}});
}

// color / chi -------------------------------------------------------------

std::optional<Coloring> solve_coloring(const Graph& g, const std::string& cls) {
  return cls == "ring" ? color_ring_or_simplicial(g) : color_gt(g);
}

std::optional<int> solve_chi(const Graph& g, const std::string& cls) {
  return cls == "ring" ? chi_ring_class(g) : chi_gt(g);
}

int cmd_color(const std::string& file, const std::string& cls, bool verify, const Settings& st) {
  Graph g = read_graph(file);
  std::optional<Coloring> c = solve_coloring(g, cls);
  if (!c) {
    return emit_negative({{"not_in_class", true}, {"class", cls}});
  }
  json out{{"class", cls}, {"colors_used", c->colors_used()}, {"coloring", coloring_json(*c)}};
  if (verify) {
    const bool proper = c->is_total() && is_proper(g, *c);
    out["proper"] = proper;
    if (g.vertex_count() <= st.cap) {
      const int oracle = brute_chi(g, st.cap).chi;
      out["oracle_chi"] = oracle;
      out["optimal"] = oracle == static_cast<int>(c->colors_used());
    }
    const bool ok = proper && out.value("optimal", true);
    return ok ? emit_ok(std::move(out)) : emit_negative(std::move(out));
  }
  return emit_ok(std::move(out));
}

int cmd_chi(const std::string& file, const std::string& cls) {
  Graph g = read_graph(file);
  std::optional<int> chi = solve_chi(g, cls);
  if (!chi) {
    return emit_negative({{"not_in_class", true}, {"class", cls}});
  }
  return emit_ok({{"class", cls}, {"chi", *chi}});
}

int cmd_omega(const std::string& file, const Settings& st) {
  Graph g = read_graph(file);
  if (std::optional<int> w = omega_ring_class(g)) {
    return emit_ok({{"omega", *w}, {"method", "ring"}});
  }
  return emit_ok(
      {{"omega", brute_omega(g, std::max(st.cap, OracleCaps{}.omega))}, {"method", "exhaustive"}});
}

// generate ----------------------------------------------------------------

struct Generated {
  Graph graph;
  std::vector<VertexSet> parts;
};

void need_params(const std::vector<int>& p, std::size_t count, const std::string& family) {
  if (p.size() != count)
    throw InputError(family + " expects " + std::to_string(count) + " parameter(s)");
}

Generated generate(const std::string& family, const std::vector<int>& p, std::uint64_t seed) {
  if (family == "hyperhole" || family == "hyperantihole") {
    if (p.empty()) throw InputError(family + " expects k followed by k part sizes");
    const int k = p[0];
    need_params(p, static_cast<std::size_t>(std::max(k, 0)) + 1, family);
    std::vector<int> sizes(p.begin() + 1, p.end());
    if (family == "hyperhole") {
      RingInstance r = gen_hyperhole(k, sizes);
      return {r.graph, r.partition.parts()};
    }
    HyperantiholeInstance a = gen_hyperantihole(k, sizes);
    return {a.graph, a.parts};
  }
  if (family == "extremal-hyperhole") {
    need_params(p, 2, family);
    RingInstance r = gen_extremal_hyperhole(p[0], p[1]);
    return {r.graph, r.partition.parts()};
  }
  if (family == "extremal-hyperantihole") {
    need_params(p, 2, family);
    HyperantiholeInstance a = gen_extremal_hyperantihole(p[0], p[1]);
    return {a.graph, a.parts};
  }
  if (family == "random-ring") {
    need_params(p, 2, family);
    Rng rng(seed);
    RingInstance r = gen_random_ring_total(p[0], p[1], rng);
    return {r.graph, r.partition.parts()};
  }
  if (family == "cycle") {
    need_params(p, 1, family);
    if (p[0] < 3) throw InputError("cycle needs at least 3 vertices");
    return {cycle_graph(p[0]), {}};
  }
  if (family == "complete") {
    need_params(p, 1, family);
    if (p[0] < 1) throw InputError("complete needs at least 1 vertex");
    return {complete_graph(p[0]), {}};
  }
  if (family == "petersen") {
    need_params(p, 0, family);
    return {petersen_graph(), {}};
  }
  throw InputError("unknown family " + family);
}

int cmd_generate(const std::string& family, const std::vector<int>& params, std::uint64_t seed,
                 const std::string& out) {
  Generated gen = generate(family, params, seed);
  const std::string dimacs = save_dimacs(gen.graph);
  json sidecar{{"family", family},
               {"params", params},
               {"seed", seed},
               {"n", gen.graph.vertex_count()},
               {"m", gen.graph.edge_count()}};
  if (!gen.parts.empty()) sidecar["partition"] = partition_json(gen.parts);
  if (out.empty()) {
    std::cout << dimacs;
    return 0;
  }
  std::ofstream f(out, std::ios::binary);
  std::ofstream s(out + ".json", std::ios::binary);
  if (!f || !s) throw InputError("cannot write " + out);
  f << dimacs;
  s << sidecar.dump(2) << '\n';
  return emit_ok({{"graph", out}, {"sidecar", out + ".json"}, {"n", gen.graph.vertex_count()}});
}

// minors ------------------------------------------------------------------

BranchSets read_branch_sets(const std::string& path, int n) {
  json j;
  try {
    j = json::parse(read_text(path));
  } catch (const json::parse_error& e) {
    throw InputError(std::string("branch sets: ") + e.what());
  }
  if (j.is_object() && j.contains("data")) j = j["data"];
  if (j.is_object()) {
    if (!j.contains("branch_sets")) throw InputError("branch sets: missing \"branch_sets\"");
    j = j["branch_sets"];
  }
  if (!j.is_array()) throw InputError("branch sets: expected an array of arrays");
  BranchSets out;
  for (const auto& s : j) {
    if (!s.is_array()) throw InputError("branch sets: expected an array of arrays");
    VertexSet set;
    for (const auto& v : s) {
      if (!v.is_number_integer()) throw InputError("branch sets: vertex ids must be integers");
      const long long id = v.get<long long>();
      if (id < 1 || id > n) throw InputError("branch sets: vertex " + std::to_string(id) + " out of range");
      set.push_back(static_cast<Vertex>(id - 1));
    }
    std::sort(set.begin(), set.end());
    out.push_back(std::move(set));
  }
  return out;
}

int cmd_verify_minor(const std::string& file, const std::string& sets, std::optional<int> target) {
  Graph g = read_graph(file);
  BranchSets b = read_branch_sets(sets, g.vertex_count());
  const int t = target.value_or(static_cast<int>(b.size()));
  const bool ok = verify_minor(g, b, t);
  json data{{"valid", ok}, {"target", t}, {"branch_sets", b.size()}};
  return ok ? emit_ok(std::move(data)) : emit_negative(std::move(data));
}

int cmd_hadwiger(const std::string& file) {
  Graph g = read_graph(file);
  if (std::optional<RingPartition> p = recognize_ring(g)) {
    BranchSets b = hadwiger_minor_ring(g, *p);
    std::optional<int> chi = chi_ring_class(g);
    return emit_ok({{"family", "ring"}, {"chi", *chi}, {"branch_sets", id_lists(b)}});
  }
  if (auto parts = recognize_hyperantihole(g)) {
    BranchSets b = hadwiger_minor_hyperantihole(g, *parts);
    return emit_ok(
        {{"family", "hyperantihole"}, {"chi", chi_alpha_le2(g)}, {"branch_sets", id_lists(b)}});
  }
  return emit_negative({{"family", nullptr}, {"supported", false}});
}

// oracle ------------------------------------------------------------------

int cmd_oracle(const std::string& file, const Settings& st) {
  Graph g = read_graph(file);
  ChiWitness w = brute_chi(g, st.cap);
  json out{{"n", g.vertex_count()},
           {"chi", w.chi},
           {"coloring", coloring_json(w.coloring)},
           {"omega", brute_omega(g, std::max(st.cap, OracleCaps{}.omega))},
           {"alpha", brute_alpha(g, std::max(st.cap, OracleCaps{}.omega))},
           {"holes", enumerate_holes(g, st.cap).size()}};
  return emit_ok(std::move(out));
}

// acceptance --------------------------------------------------------------

int cmd_acceptance(bool quick, std::uint64_t seed) {
  AcceptanceOptions o;
  o.quick = quick;
  o.seed = seed;
  json results = json::array();
  bool all = true;
  for (const CriterionResult& r : run_acceptance(o)) {
    results.push_back({{"id", r.id},
                       {"name", r.name},
                       {"pass", r.pass},
                       {"instances", r.instances},
                       {"seconds", r.seconds},
                       {"detail", r.detail}});
    all = all && r.pass;
  }
  json data{{"quick", quick}, {"seed", seed}, {"all_pass", all}, {"criteria", results}};
  return all ? emit_ok(std::move(data)) : emit_negative(std::move(data));
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Recognise, colour and certify rings and graphs of the class G_T"};
  app.require_subcommand(1);
  Settings st;
  app.add_option("--cap", st.cap, "Largest vertex count for exhaustive oracles")
      ->envname("RINGCHROMA_CAP")
      ->check(CLI::Range(1, 62));
  app.fallthrough();

  std::string file, cls = "gt", family, out, sets;
  bool verify = false, quick = false;
  std::uint64_t seed = 1;
  std::vector<int> params;
  std::optional<int> target;
  int rc = 0;

  auto* rec = app.add_subcommand("recognize", "Ring recognition");
  rec->add_option("file", file, "DIMACS file or -")->required();
  rec->callback([&] { rc = cmd_recognize(file); });

  auto* col = app.add_subcommand("color", "Optimal colouring");
  col->add_option("file", file, "DIMACS file or -")->required();
  col->add_option("--class", cls, "ring or gt")->check(CLI::IsMember({"ring", "gt"}));
  col->add_flag("--verify", verify, "Check properness and, on small inputs, optimality");
  col->callback([&] { rc = cmd_color(file, cls, verify, st); });

  auto* chi = app.add_subcommand("chi", "Chromatic number");
  chi->add_option("file", file, "DIMACS file or -")->required();
  chi->add_option("--class", cls, "ring or gt")->check(CLI::IsMember({"ring", "gt"}));
  chi->callback([&] { rc = cmd_chi(file, cls); });

  auto* om = app.add_subcommand("omega", "Clique number");
  om->add_option("file", file, "DIMACS file or -")->required();
  om->callback([&] { rc = cmd_omega(file, st); });

  auto* gen = app.add_subcommand("generate", "Write a generated instance as DIMACS");
  gen->add_option("family", family,
                  "hyperhole, hyperantihole, extremal-hyperhole, extremal-hyperantihole, "
                  "random-ring, cycle, complete, petersen")
      ->required();
  gen->add_option("params", params, "Family parameters");
  gen->add_option("--seed", seed, "Random seed");
  gen->add_option("--out", out, "Output file; a JSON sidecar goes next to it");
  gen->callback([&] { rc = cmd_generate(family, params, seed, out); });

  auto* vm = app.add_subcommand("verify-minor", "Check a clique-minor certificate");
  vm->add_option("file", file, "DIMACS file or -")->required();
  vm->add_option("branchsets", sets, "JSON file with 1-based branch sets")->required();
  vm->add_option("--target", target, "Required number of branch sets");
  vm->callback([&] { rc = cmd_verify_minor(file, sets, target); });

  auto* had = app.add_subcommand("hadwiger", "Clique minor with chi branch sets");
  had->add_option("file", file, "DIMACS file or -")->required();
  had->callback([&] { rc = cmd_hadwiger(file); });

  auto* orc = app.add_subcommand("oracle", "Exhaustive chi, omega, alpha and hole count");
  orc->add_option("file", file, "DIMACS file or -")->required();
  orc->callback([&] { rc = cmd_oracle(file, st); });

  auto* acc = app.add_subcommand("acceptance", "Run the acceptance suite");
  acc->add_flag("--quick", quick, "Reduced instance counts");
  std::uint64_t acc_seed = AcceptanceOptions{}.seed;
  acc->add_option("--seed", acc_seed, "Base seed");
  acc->callback([&] { rc = cmd_acceptance(quick, acc_seed); });

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : kExitInput;
  } catch (const ParseError& e) {
    // Line 0 marks a whole-file problem such as a wrong edge count.
    return emit_error(kExitInput, "parse", e.what(),
                      e.line() == 0 ? std::nullopt : std::optional<std::size_t>(e.line()));
  } catch (const InputError& e) {
    return emit_error(kExitInput, "input", e.what());
  } catch (const CapacityError& e) {
    return emit_error(kExitCapacity, "capacity", e.what());
  } catch (const std::exception& e) {
    return emit_error(kExitInternal, "internal", e.what());
  }
  return rc;
}
