// Copyright 2026 The lincol Authors
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

#include "cli.h"

#include <cstdlib>
#include <functional>
#include <optional>
#include <ostream>
#include <sstream>

#include "CLI11.hpp"
#include "json.hpp"
#include "lincol/colorer.h"
#include "lincol/configs.h"
#include "lincol/exact.h"
#include "lincol/generators.h"
#include "lincol/io.h"
#include "lincol/sparsity.h"
#include "lincol/verify.h"

namespace lincol::cli {
namespace {

using nlohmann::json;

class UsageError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

struct Options {
  bool json = false;
  std::string graph;
  std::string second;  // coloring file for verify
  std::string embedding;
  std::string lists;
  std::string lemma = "mad125";
  std::string theorem;
  std::string method = "auto";
  std::string out;
  std::optional<int> m;
  int k = 0;
  int universe = 0;
  int min_k = 0;
  bool unchecked = false;
  SearchBudget budget;

  // gen
  std::string family;
  GraphFamily params;
  std::string mad_below;
};

Graph load_graph(const std::string& path) { return parse_graph(read_file(path)); }

std::optional<RotationSystem> load_embedding(const Options& o, const Graph& g) {
  if (o.embedding.empty()) return std::nullopt;
  return parse_rotation(read_file(o.embedding), g);
}

std::string join(const std::vector<Vertex>& vs) {
  std::ostringstream os;
  for (std::size_t i = 0; i < vs.size(); ++i) os << (i ? " " : "") << vs[i];
  return os.str();
}

json match_json(const ConfigMatch& m) {
  json roles = json::object();
  for (const auto& [name, v] : m.roles) roles[name] = v;
  json j{{"lemma", to_string(m.lemma)}, {"config", m.tag()}, {"roles", roles}};
  if (m.face >= 0) j["face"] = m.face;
  return j;
}

json charges_json(const ChargeReport& r) {
  json vertices = json::array();
  for (std::size_t v = 0; v < r.vertex_initial.size(); ++v) {
    vertices.push_back({{"vertex", v}, {"initial", r.vertex_initial[v].str()}, {"final", r.vertex_final[v].str()}});
  }
  json faces = json::array();
  for (std::size_t f = 0; f < r.face_initial.size(); ++f) {
    faces.push_back({{"face", f},
                     {"degree", r.faces.faces[f].degree()},
                     {"initial", r.face_initial[f].str()},
                     {"final", r.face_final[f].str()}});
  }
  json transfers = json::array();
  for (const auto& t : r.transfers) {
    transfers.push_back({{"from", t.from.str()}, {"to", t.to.str()}, {"amount", t.amount.str()}, {"rule", t.rule}});
  }
  json negative = json::array();
  for (const auto& e : r.negative) negative.push_back(e.str());
  return {{"lemma", to_string(r.lemma)},
          {"sum_initial", r.sum_initial.str()},
          {"sum_final", r.sum_final.str()},
          {"vertices", vertices},
          {"faces", faces},
          {"transfers", transfers},
          {"negative", negative},
          {"ambiguous_forwarding", r.ambiguous_forwarding},
          {"cycle_component_vertices", r.cycle_component_vertices}};
}

void print_charges(const ChargeReport& r, std::ostream& out) {
  out << "sum_initial " << r.sum_initial.str() << "\nsum_final " << r.sum_final.str() << '\n';
  for (std::size_t v = 0; v < r.vertex_initial.size(); ++v) {
    if (r.vertex_initial[v].sign() == 0 && r.vertex_final[v].sign() == 0) continue;
    out << 'v' << v << ' ' << r.vertex_initial[v].str() << " -> " << r.vertex_final[v].str() << '\n';
  }
  for (std::size_t f = 0; f < r.face_initial.size(); ++f) {
    out << 'f' << f << ' ' << r.face_initial[f].str() << " -> " << r.face_final[f].str() << '\n';
  }
  out << "negative:";
  for (const auto& e : r.negative) out << ' ' << e.str();
  out << '\n';
}

json violation_json(const Violation& v) { return {{"kind", to_string(v.kind)}, {"witness", v.witness}}; }

int cmd_mad(const Options& o, std::ostream& out) {
  Graph g = load_graph(o.graph);
  MadMethod method = MadMethod::kAuto;
  if (o.method == "flow") method = MadMethod::kFlow;
  if (o.method == "enumeration") method = MadMethod::kEnumeration;
  auto w = max_average_degree(g, method);
  if (o.json) {
    out << json{{"mad", w.density.str()}, {"witness", w.vertices}}.dump(2) << '\n';
  } else {
    out << w.density.str() << "\nwitness: " << join(w.vertices) << '\n';
  }
  return kOk;
}

int cmd_girth(const Options& o, std::ostream& out) {
  Graph g = load_graph(o.graph);
  int gi = girth(g);
  if (o.json) {
    out << json{{"girth", gi == kInfiniteGirth ? json(nullptr) : json(gi)}}.dump(2) << '\n';
  } else {
    out << (gi == kInfiniteGirth ? std::string("infinity") : std::to_string(gi)) << '\n';
  }
  return kOk;
}

int cmd_threads(const Options& o, std::ostream& out) {
  Graph g = load_graph(o.graph);
  auto threads = find_threads(g, o.min_k);
  if (o.json) {
    json arr = json::array();
    for (const auto& t : threads) arr.push_back({{"first", t.first}, {"last", t.last}, {"interior", t.interior}});
    out << arr.dump(2) << '\n';
  } else {
    for (const auto& t : threads) out << t.length() << "-thread " << t.first << " [" << join(t.interior) << "] " << t.last << '\n';
  }
  return kOk;
}

int cmd_verify(const Options& o, std::ostream& out) {
  Graph g = load_graph(o.graph);
  LinearColoring col = parse_coloring(read_file(o.second), g.vertex_count());
  std::optional<Violation> v;
  if (!o.lists.empty()) {
    v = verify_list(g, parse_lists(read_file(o.lists), g.vertex_count()), col);
  } else {
    v = verify_linear(g, col);
  }
  if (o.json) {
    json j{{"valid", !v.has_value()}};
    if (v) j["violation"] = violation_json(*v);
    out << j.dump(2) << '\n';
  } else {
    out << (v ? "invalid: " + v->describe() : std::string("valid")) << '\n';
  }
  return v ? kNegative : kOk;
}

DetectOptions detect_options(const Options& o) {
  DetectOptions d;
  d.bound_m = o.m;
  return d;
}

int cmd_detect(const Options& o, std::ostream& out) {
  Graph g = load_graph(o.graph);
  auto emb = load_embedding(o, g);
  auto matches = detect(g, parse_lemma(o.lemma), emb ? &*emb : nullptr, detect_options(o));
  if (o.json) {
    json arr = json::array();
    for (const auto& m : matches) arr.push_back(match_json(m));
    out << arr.dump(2) << '\n';
  } else {
    for (const auto& m : matches) out << m.describe() << '\n';
    if (matches.empty()) out << "no configuration\n";
  }
  return kOk;
}

int cmd_discharge(const Options& o, std::ostream& out) {
  Graph g = load_graph(o.graph);
  auto emb = load_embedding(o, g);
  auto report = discharge(g, parse_lemma(o.lemma), emb ? &*emb : nullptr);
  if (o.json) {
    out << charges_json(report).dump(2) << '\n';
  } else {
    print_charges(report, out);
  }
  return kOk;
}

int cmd_audit(const Options& o, std::ostream& out) {
  Graph g = load_graph(o.graph);
  auto emb = load_embedding(o, g);
  auto v = audit(g, parse_lemma(o.lemma), emb ? &*emb : nullptr, detect_options(o));
  if (o.json) {
    json hyps = json::array();
    for (const auto& h : v.hypotheses) hyps.push_back({{"name", h.name}, {"holds", h.holds}, {"detail", h.detail}});
    json matches = json::array();
    for (const auto& m : v.matches) matches.push_back(match_json(m));
    out << json{{"lemma", to_string(v.lemma)},
                {"hypotheses", hyps},
                {"hypotheses_hold", v.hypotheses_hold},
                {"matches", matches},
                {"charges", charges_json(v.charges)},
                {"consistent", v.consistent}}
               .dump(2)
        << '\n';
  } else {
    for (const auto& h : v.hypotheses) out << (h.holds ? "holds  " : "FAILS  ") << h.name << " (" << h.detail << ")\n";
    out << "matches " << v.matches.size() << '\n';
    for (const auto& m : v.matches) out << "  " << m.describe() << '\n';
    out << "sum_initial " << v.charges.sum_initial.str() << ", negative elements " << v.charges.negative.size() << '\n';
    out << (v.consistent ? "consistent" : "INCONSISTENT") << '\n';
  }
  return v.hypotheses_hold && v.consistent ? kOk : kNegative;
}

void emit_coloring(const Options& o, const LinearColoring& col, std::ostream& out, json extra = json::object()) {
  if (!o.out.empty()) write_file(o.out, serialize_coloring(col));
  if (o.json) {
    extra["coloring"] = col.color;
    extra["colors_used"] = col.colors_used();
    out << extra.dump(2) << '\n';
  } else if (o.out.empty()) {
    out << serialize_coloring(col);
  }
}

int cmd_color(const Options& o, std::ostream& out, std::ostream& err) {
  Graph g = load_graph(o.graph);
  if (o.theorem == "tree") {
    if (o.k <= 0) throw UsageError("--theorem tree needs --k");
    emit_coloring(o, color_tree_greedy(g, o.k), out);
    return kOk;
  }
  if (!o.m) throw UsageError("--M is required");
  BoundParameter bound{parse_lemma(o.theorem), *o.m};
  auto emb = load_embedding(o, g);
  ListAssignment lists = o.lists.empty() ? ListAssignment::uniform(g.vertex_count(), required_list_size(bound))
                                         : parse_lists(read_file(o.lists), g.vertex_count());
  ColorOutcome outcome;
  try {
    outcome = color_traced(g, bound, lists, emb ? &*emb : nullptr, {.check_hypotheses = !o.unchecked});
  } catch (const HypothesisError& e) {
    err << e.what() << '\n';
    if (o.json) out << json{{"error", "hypothesis"}, {"detail", e.what()}}.dump(2) << '\n';
    return kNegative;
  }
  if (!outcome.coloring) {
    err << "extension failure: " << outcome.failure << '\n';
    for (std::size_t i = 0; i < outcome.steps.size(); ++i) {
      err << "  step " << i + 1 << ": " << outcome.steps[i].action << " deletes " << join(outcome.steps[i].deleted) << '\n';
    }
    if (o.json) out << json{{"error", "extension"}, {"detail", outcome.failure}}.dump(2) << '\n';
    return kNegative;
  }
  emit_coloring(o, *outcome.coloring, out,
                {{"steps", outcome.steps.size()}, {"rejected_choices", outcome.rejected_choices}});
  return kOk;
}

int cmd_exact(const Options& o, std::ostream& out, std::ostream& err) {
  Graph g = load_graph(o.graph);
  try {
    if (!o.lists.empty()) {
      auto col = list_feasible(g, parse_lists(read_file(o.lists), g.vertex_count()), o.budget);
      if (!col) {
        out << (o.json ? json{{"feasible", false}}.dump(2) : std::string("infeasible")) << '\n';
        return kNegative;
      }
      emit_coloring(o, *col, out, {{"feasible", true}});
      return kOk;
    }
    int lc = exact_lc(g, o.budget);
    out << (o.json ? json{{"lc", lc}}.dump(2) : std::to_string(lc)) << '\n';
    return kOk;
  } catch (const BudgetExhausted& e) {
    err << e.what() << " after " << e.nodes() << " nodes";
    if (e.upper() > 0) err << "; lc in [" << e.lower() << ", " << e.upper() << "]";
    err << '\n';
    return kNegative;
  }
}

int cmd_choosable(const Options& o, std::ostream& out, std::ostream& err) {
  Graph g = load_graph(o.graph);
  if (o.k <= 0) throw UsageError("--k must be positive");
  try {
    auto v = choosability_at_least(g, o.k, o.universe, o.budget);
    if (o.json) {
      json j{{"witness", v.bad_lists.has_value()}, {"assignments_checked", v.assignments_checked}};
      if (v.bad_lists) j["lists"] = v.bad_lists->lists();
      out << j.dump(2) << '\n';
    } else if (v.bad_lists) {
      out << "bad-list witness (no linear coloring from these " << o.k << "-lists)\n" << serialize_lists(*v.bad_lists);
    } else {
      out << "no witness\n";
    }
    return v.bad_lists ? kOk : kNegative;
  } catch (const BudgetExhausted& e) {
    err << e.what() << " after " << e.nodes() << " nodes\n";
    return kNegative;
  }
}

int cmd_gen(Options o, std::ostream& out) {
  o.params.tag = parse_family(o.family);
  if (const char* seed = std::getenv("LC_SEED")) {
    try {
      o.params.seed = std::stoull(seed);
    } catch (const std::exception&) {
      throw UsageError("LC_SEED must be a non-negative integer");
    }
  }
  if (!o.mad_below.empty()) o.params.mad_below = Rational::parse(o.mad_below);
  auto gen = generate(o.params);
  if (o.out.empty()) {
    out << serialize_graph(gen.graph);
    if (gen.rotation) out << serialize_rotation(gen.graph, *gen.rotation);
    return kOk;
  }
  write_file(o.out + ".edges", serialize_graph(gen.graph));
  if (gen.rotation) write_file(o.out + ".rot", serialize_rotation(gen.graph, *gen.rotation));
  if (o.json) {
    out << json{{"edges", o.out + ".edges"},
                {"rotation", gen.rotation ? json(o.out + ".rot") : json(nullptr)},
                {"vertices", gen.graph.vertex_count()},
                {"edge_count", gen.graph.edge_count()}}
               .dump(2)
        << '\n';
  }
  return kOk;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Linear (list) coloring toolkit for sparse graphs", "lc"};
  app.require_subcommand(1);
  Options o;
  app.add_flag("--json", o.json, "Structured output; rationals as \"p/q\" strings");

  auto graph_arg = [&](CLI::App* sub) { sub->add_option("graph", o.graph, "Edge-list file")->required(); };
  auto lemma_opts = [&](CLI::App* sub, bool with_m) {
    sub->add_option("--lemma", o.lemma, "g5 | mad3 | mad125")->required();
    sub->add_option("--embedding", o.embedding, "Rotation-system file");
    if (with_m) sub->add_option("--M", o.m, "Degree bound replacing max degree in MAD3 RC1");
  };
  auto budget_opts = [&](CLI::App* sub) {
    sub->add_option("--max-nodes", o.budget.max_nodes, "Search node limit")->check(CLI::PositiveNumber);
    sub->add_option("--max-seconds", o.budget.max_seconds, "Search time limit")->check(CLI::PositiveNumber);
  };
  auto json_flag = [&](CLI::App* sub) { sub->add_flag("--json", o.json, "Structured output"); };

  std::function<int()> action;
  auto bind = [&](CLI::App* sub, std::function<int()> f) {
    json_flag(sub);
    sub->callback([&action, f] { action = f; });
  };

  auto* mad = app.add_subcommand("mad", "Exact maximum average degree with a densest witness");
  graph_arg(mad);
  mad->add_option("--method", o.method, "auto | flow | enumeration")
      ->check(CLI::IsMember({"auto", "flow", "enumeration"}));
  bind(mad, [&] { return cmd_mad(o, out); });

  auto* gi = app.add_subcommand("girth", "Shortest cycle length");
  graph_arg(gi);
  bind(gi, [&] { return cmd_girth(o, out); });

  auto* th = app.add_subcommand("threads", "Maximal threads of degree-2 vertices");
  graph_arg(th);
  th->add_option("--min-k", o.min_k, "Minimum number of interior vertices")->check(CLI::NonNegativeNumber);
  bind(th, [&] { return cmd_threads(o, out); });

  auto* ve = app.add_subcommand("verify", "Check a coloring for linearity (and lists)");
  graph_arg(ve);
  ve->add_option("coloring", o.second, "Coloring file")->required();
  ve->add_option("--lists", o.lists, "Lists file");
  bind(ve, [&] { return cmd_verify(o, out); });

  auto* de = app.add_subcommand("detect", "Reducible configurations of a lemma");
  graph_arg(de);
  lemma_opts(de, true);
  bind(de, [&] { return cmd_detect(o, out); });

  auto* di = app.add_subcommand("discharge", "Run the lemma's discharging rules");
  graph_arg(di);
  lemma_opts(di, false);
  bind(di, [&] { return cmd_discharge(o, out); });

  auto* au = app.add_subcommand("audit", "Hypotheses, configurations and charges in one verdict");
  graph_arg(au);
  lemma_opts(au, true);
  bind(au, [&] { return cmd_audit(o, out); });

  auto* co = app.add_subcommand("color", "Constructive coloring from a theorem");
  graph_arg(co);
  co->add_option("--theorem", o.theorem, "g5 | mad3 | mad125 | tree")->required();
  co->add_option("--M", o.m, "Degree bound M >= max degree");
  co->add_option("--k", o.k, "Palette size for --theorem tree");
  co->add_option("--embedding", o.embedding, "Rotation-system file (g5)");
  co->add_option("--lists", o.lists, "Lists file (default: uniform lists of the required size)");
  co->add_option("--out", o.out, "Write the coloring here");
  co->add_flag("--unchecked", o.unchecked, "Skip hypothesis checks");
  bind(co, [&] { return cmd_color(o, out, err); });

  auto* ex = app.add_subcommand("exact-lc", "Exact linear chromatic number (or list feasibility with --lists)");
  graph_arg(ex);
  ex->add_option("--lists", o.lists, "Lists file: decide list feasibility instead");
  ex->add_option("--out", o.out, "Write a feasible coloring here");
  budget_opts(ex);
  bind(ex, [&] { return cmd_exact(o, out, err); });

  auto* ch = app.add_subcommand("choosable", "Search k-lists with no linear coloring");
  graph_arg(ch);
  ch->add_option("--k", o.k, "List size")->required();
  ch->add_option("--universe", o.universe, "Colors 1..universe (default 2k)")->check(CLI::NonNegativeNumber);
  budget_opts(ch);
  bind(ch, [&] { return cmd_choosable(o, out, err); });

  auto* ge = app.add_subcommand("gen", "Generate a graph family");
  ge->add_option("family", o.family, "Family name, e.g. subdivided-dodecahedron")->required();
  ge->add_option("--n", o.params.n);
  ge->add_option("--a", o.params.a);
  ge->add_option("--b", o.params.b);
  ge->add_option("--max-degree", o.params.max_degree);
  ge->add_option("--pendant-length", o.params.pendant_length);
  ge->add_option("--seed", o.params.seed, "Overridden by LC_SEED");
  ge->add_option("--hubs", o.params.hubs);
  ge->add_option("--low-degree", o.params.low_degree);
  ge->add_option("--min-subdivisions", o.params.min_subdivisions);
  ge->add_option("--max-subdivisions", o.params.max_subdivisions);
  ge->add_option("--min-girth", o.params.min_girth);
  ge->add_option("--require-max-degree", o.params.require_max_degree);
  ge->add_option("--mad-below", o.mad_below, "Reject samples with mad >= this rational");
  ge->add_option("--out", o.out, "Prefix: writes PREFIX.edges and PREFIX.rot");
  bind(ge, [&] { return cmd_gen(o, out); });

  std::vector<const char*> argv;
  for (const auto& a : args) argv.push_back(a.c_str());
  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kOk;
  } catch (const CLI::ParseError& e) {
    err << "lc: " << e.what() << '\n';
    return kUsage;
  }
  try {
    return action();
  } catch (const HypothesisError& e) {
    err << "lc: " << e.what() << '\n';
    return kNegative;
  } catch (const std::exception& e) {
    // Any other input problem maps to the usage code.
    err << "lc: " << e.what() << '\n';
    return kUsage;
  }
}

}  // namespace lincol::cli
