#pragma once

#include <chrono>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "json.hpp"

#include "geomcore/certificates.hpp"
#include "geomcore/cliques.hpp"
#include "geomcore/error.hpp"
#include "geomcore/geometry.hpp"
#include "geomcore/graph.hpp"
#include "geomcore/graph6.hpp"
#include "geomcore/homsearch.hpp"
#include "geomcore/parallel.hpp"
#include "geomcore/search_context.hpp"
#include "geomcore/vertex_map.hpp"

// JSON reports. Every report carries "schema": "geomcore/1". Anything that
// depends on scheduling (wall time, node counts, worker count) lives under a
// "timings" object so reports from different --jobs settings compare equal
// once those objects are removed.
namespace geomcore::report {

using Json = nlohmann::json;

inline constexpr const char* kSchema = "geomcore/1";

inline Json map_json(const std::optional<VertexMap>& f) {
  if (!f) return nullptr;
  return Json(f->image);
}

inline std::string verdict_label(const CoreReport& r) {
  switch (r.verdict) {
    case CoreVerdict::CompleteCore: return "CompleteCore(" + std::to_string(r.q) + ")";
    case CoreVerdict::Other: return "Other(" + std::to_string(r.core_order) + ")";
    default: return verdict_name(r.verdict);
  }
}

inline Json core_json(const CoreReport& r) {
  Json j;
  j["verdict"] = verdict_name(r.verdict);
  j["label"] = verdict_label(r);
  j["q"] = r.q;
  j["core_order"] = r.core_order;
  j["clique_number"] = r.clique_number;
  j["clique"] = r.clique;
  j["coloring"] = map_json(r.coloring);
  j["proper_endomorphism"] = map_json(r.proper_endomorphism);
  j["targets_refuted"] = r.targets_refuted;
  j["reason"] = r.reason;
  j["recursion_depth"] = r.recursion_depth;
  return j;
}

inline Json params_json(const PgParams& p) { return Json{{"s", p.s}, {"t", p.t}, {"alpha", p.alpha}}; }

inline Json srg_json(const SrgParams& p) { return Json{{"n", p.n}, {"k", p.k}, {"lambda", p.lambda}, {"mu", p.mu}}; }

inline Json graph_input(const std::string& name, const Graph& g) {
  return Json{{"name", name}, {"order", g.order()}, {"edges", g.edge_count()}, {"graph6", graph6::encode(g)}};
}

inline Json geometry_json(const Geometry& g) {
  return Json{{"family", family_name(g.family)},
              {"params", params_json(g.params)},
              {"points", g.structure.point_count()},
              {"lines", g.structure.lines()}};
}

inline Json clique_json(const CliqueReport& r) {
  return Json{{"max_size", r.max_size},
              {"line_cliques", r.line_cliques},
              {"non_line_cliques", r.non_line_cliques},
              {"non_line_count", r.non_line_cliques.size()},
              {"lines_forced", r.lines_forced},
              {"non_line_bound", r.non_line_bound}};
}

inline Json analysis_json(const NonLineCliqueAnalysis& a) {
  return Json{{"size", a.size},
              {"bound", a.bound},
              {"within_bound", a.within_bound},
              {"equality", a.equality},
              {"lines_meet_in_zero_or_alpha", a.lines_meet_in_zero_or_alpha},
              {"traces_form_design", a.traces_form_design}};
}

inline Json cross_json(const CrossCheck& c) {
  Json j;
  j["certificate_kind"] = c.certificate_kind;
  j["certificate"] = outcome_name(c.certificate);
  j["colorable"] = outcome_name(c.colorable);
  j["classes"] = c.certificate_classes;
  j["candidates"] = c.candidates;
  j["complete_point_graph"] = c.complete_point_graph;
  j["conversions_valid"] = c.conversions_valid;
  j["consistent"] = decision_name(c.consistent);
  j["note"] = c.note;
  if (c.resolution) j["resolution"] = c.resolution->classes;
  if (c.extension) j["extension_row"] = c.extension->row;
  if (c.ovoids) j["ovoid_partition"] = c.ovoids->ovoids;
  if (c.certificate_kind == "ovoid-partition") j["ovoids_exist"] = decision_name(c.ovoids_exist);
  return j;
}

struct Timer {
  std::chrono::steady_clock::time_point start = std::chrono::steady_clock::now();
  double seconds() const { return std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count(); }
};

// One CLI operation.
struct RunReport {
  std::string operation;
  Json input;
  std::string verdict;
  Json result;
  SearchBudget budget;
  double seconds = 0;
  std::uint64_t nodes = 0;

  Json to_json() const {
    return Json{{"schema", kSchema},
                {"operation", operation},
                {"input", input},
                {"verdict", verdict},
                {"result", result},
                {"budget", {{"nodes", budget.nodes}, {"seconds", budget.seconds}}},
                {"timings", {{"seconds", seconds}, {"nodes", nodes}, {"jobs", budget.jobs}}}};
  }
};

// Removes every "timings" member, recursively.
inline Json strip_timings(Json j) {
  if (j.is_object()) {
    j.erase("timings");
    for (auto& [key, value] : j.items()) value = strip_timings(value);
  } else if (j.is_array()) {
    for (auto& value : j) value = strip_timings(value);
  }
  return j;
}

// ---------------------------------------------------------------------------
// Classification of a single input.

inline RunReport classify_graph(const std::string& name, const Graph& g, const SearchBudget& budget) {
  Timer timer;
  RunReport r{"classify", graph_input(name, g), "", nullptr, budget};
  const CoreReport core = classify_core(g, budget);
  r.verdict = verdict_label(core);
  r.result = Json{{"core", core_json(core)}};
  r.nodes = core.nodes;
  r.seconds = timer.seconds();
  return r;
}

inline RunReport classify_geometry(const std::string& name, const Geometry& geo, const SearchBudget& budget) {
  Timer timer;
  const Graph x = point_graph(geo.structure).graph;
  RunReport r{"classify", graph_input(name, x), "", nullptr, budget};
  r.input["geometry"] = geometry_json(geo);
  const CrossCheck cc = cross_check(geo, budget);
  r.verdict = verdict_label(cc.core);
  r.result = Json{{"core", core_json(cc.core)}, {"cross_check", cross_json(cc)}};
  r.nodes = cc.core.nodes;
  r.seconds = timer.seconds();
  return r;
}

inline RunReport clique_report(const std::string& name, const Geometry& geo) {
  Timer timer;
  const Graph x = point_graph(geo.structure).graph;
  RunReport r{"cliques", graph_input(name, x), "", nullptr, {}};
  r.input["geometry"] = geometry_json(geo);
  const CliqueReport cr = classify_cliques(geo);
  Json analyses = Json::array();
  for (const auto& c : cr.non_line_cliques) analyses.push_back(analysis_json(nonline_clique_analysis(geo.structure, geo.params, c)));
  r.result = clique_json(cr);
  r.result["analyses"] = analyses;
  r.verdict = "omega=" + std::to_string(cr.max_size);
  r.seconds = timer.seconds();
  return r;
}

// ---------------------------------------------------------------------------
// Batch screening.

struct BatchEntry {
  std::size_t line = 0;
  std::string graph6;
  std::optional<CoreReport> report;
  std::string error;
  double seconds = 0;

  // Screening predicate: only colourings and automorphisms as endomorphisms.
  std::string screening() const {
    if (!report) return "ERROR";
    switch (report->verdict) {
      case CoreVerdict::Core:
      case CoreVerdict::CompleteCore: return "PASS";
      case CoreVerdict::Other: return "FLAG";
      case CoreVerdict::Unknown: return "UNKNOWN";
    }
    return "UNKNOWN";
  }
};

struct BatchResult {
  std::vector<BatchEntry> entries;
  std::size_t cores = 0;
  std::size_t complete_cores = 0;
  std::size_t other = 0;
  std::size_t unknown = 0;
  std::size_t errors = 0;

  std::size_t total() const { return cores + complete_cores + other + unknown + errors; }
};

// Graphs are classified in parallel, one per worker, each with its own
// budget; a lone graph gets all workers. Entries keep file order.
inline BatchResult run_batch(const std::vector<graph6::FileEntry>& input, const SearchBudget& budget) {
  BatchResult out;
  out.entries.resize(input.size());
  SearchBudget per_graph = budget;
  if (input.size() > 1) per_graph.jobs = 1;
  detail::for_each_branch(input.size(), input.size() > 1 ? budget.jobs : 1, [&](std::size_t i) {
    Timer timer;
    auto& e = out.entries[i];
    e.line = input[i].line;
    if (!input[i].ok()) {
      e.error = input[i].error();
      return;
    }
    e.graph6 = graph6::encode(input[i].graph());
    try {
      e.report = classify_core(input[i].graph(), per_graph);
    } catch (const Error& err) {
      e.error = "line " + std::to_string(e.line) + ": " + err.what();
    }
    e.seconds = timer.seconds();
  });
  for (const auto& e : out.entries) {
    if (!e.report) {
      ++out.errors;
      continue;
    }
    switch (e.report->verdict) {
      case CoreVerdict::Core: ++out.cores; break;
      case CoreVerdict::CompleteCore: ++out.complete_cores; break;
      case CoreVerdict::Other: ++out.other; break;
      case CoreVerdict::Unknown: ++out.unknown; break;
    }
  }
  return out;
}

inline Json batch_json(const BatchResult& b, const SearchBudget& budget, double seconds) {
  Json results = Json::array();
  std::uint64_t nodes = 0;
  for (const auto& e : b.entries) {
    Json j{{"line", e.line}, {"screening", e.screening()}};
    if (e.report) {
      j["graph6"] = e.graph6;
      j["verdict"] = verdict_label(*e.report);
      j["core"] = core_json(*e.report);
      j["timings"] = {{"seconds", e.seconds}, {"nodes", e.report->nodes}};
      nodes += e.report->nodes;
    } else {
      j["error"] = e.error;
    }
    results.push_back(std::move(j));
  }
  return Json{{"schema", kSchema},
              {"operation", "batch"},
              {"results", results},
              {"summary",
               {{"total", b.total()},
                {"cores", b.cores},
                {"complete_cores", b.complete_cores},
                {"other", b.other},
                {"unknown", b.unknown},
                {"errors", b.errors}}},
              {"budget", {{"nodes", budget.nodes}, {"seconds", budget.seconds}}},
              {"timings", {{"seconds", seconds}, {"nodes", nodes}, {"jobs", budget.jobs}}}};
}

// ---------------------------------------------------------------------------
// Re-validation of a serialized report, independent of the code that wrote it.

namespace detail {

inline std::optional<VertexMap> read_map(const Json& j, std::size_t target) {
  if (j.is_null()) return std::nullopt;
  return VertexMap{target, j.get<std::vector<int>>()};
}

inline void check_core(const Json& core, const Graph& g, const std::string& where, std::vector<std::string>& problems) {
  auto fail = [&](const std::string& what) { problems.push_back(where + ": " + what); };
  for (const char* key : {"verdict", "q", "core_order", "clique_number", "clique", "coloring", "proper_endomorphism"})
    if (!core.contains(key)) return fail(std::string("missing key \"") + key + "\"");
  const auto verdict = core["verdict"].get<std::string>();
  if (verdict != "Core" && verdict != "CompleteCore" && verdict != "Other" && verdict != "Unknown")
    return fail("unknown verdict \"" + verdict + "\"");
  const auto clique = core["clique"].get<std::vector<int>>();
  if (static_cast<int>(clique.size()) != core["clique_number"].get<int>()) fail("clique size differs from clique_number");
  for (std::size_t i = 0; i < clique.size(); ++i) {
    if (clique[i] < 0 || static_cast<std::size_t>(clique[i]) >= g.order()) return fail("clique vertex out of range");
    for (std::size_t j = 0; j < i; ++j)
      if (!g.adjacent(clique[i], clique[j])) return fail("clique witness is not a clique");
  }
  if (verdict == "CompleteCore") {
    const int q = core["q"].get<int>();
    const auto colors = read_map(core["coloring"], static_cast<std::size_t>(q));
    if (!colors) return fail("CompleteCore without a colouring");
    if (q != static_cast<int>(clique.size())) fail("q differs from the clique number");
    if (!is_proper_coloring(g, *colors, static_cast<std::size_t>(q))) fail("colouring witness is not proper");
  }
  if (verdict == "Core" && core["core_order"].get<std::size_t>() != g.order()) fail("Core with core_order != order");
  if (const auto f = read_map(core["proper_endomorphism"], g.order())) {
    if (!is_homomorphism(g, g, *f)) fail("proper endomorphism witness is not a homomorphism");
    if (f->is_injective()) fail("proper endomorphism witness is a bijection");
  } else if (verdict == "Other") {
    fail("Other without a proper endomorphism");
  }
}

}  // namespace detail

// Returns the list of problems found; empty means the report is valid.
inline std::vector<std::string> validate_report(const Json& j) {
  std::vector<std::string> problems;
  if (!j.is_object() || j.value("schema", "") != kSchema) return {"missing or wrong \"schema\""};
  if (!j.contains("operation") || !j["operation"].is_string()) return {"missing \"operation\""};
  if (!j.contains("timings") || !j["timings"].is_object()) problems.push_back("missing \"timings\"");
  const auto op = j["operation"].get<std::string>();
  try {
    if (op == "batch") {
      const auto& s = j.at("summary");
      const std::size_t counted = s.at("cores").get<std::size_t>() + s.at("complete_cores").get<std::size_t>() +
                                  s.at("other").get<std::size_t>() + s.at("unknown").get<std::size_t>() +
                                  s.at("errors").get<std::size_t>();
      if (counted != s.at("total").get<std::size_t>() || counted != j.at("results").size())
        problems.push_back("summary counts do not sum to the number of inputs");
      for (const auto& e : j.at("results")) {
        if (!e.contains("core")) continue;
        const Graph g = graph6::decode(e.at("graph6").get<std::string>());
        detail::check_core(e["core"], g, "line " + std::to_string(e.at("line").get<std::size_t>()), problems);
      }
      return problems;
    }
    const auto& input = j.at("input");
    const Graph g = graph6::decode(input.at("graph6").get<std::string>());
    if (g.order() != input.at("order").get<std::size_t>()) problems.push_back("input order differs from graph6");
    if (op == "classify") {
      detail::check_core(j.at("result").at("core"), g, "core", problems);
      if (j["result"].contains("cross_check")) {
        const auto& cc = j["result"]["cross_check"];
        const auto& geo = input.at("geometry");
        const IncidenceStructure s(geo.at("points").get<int>(), geo.at("lines").get<std::vector<std::vector<int>>>());
        if (point_graph(s).graph != g) problems.push_back("geometry does not match the input graph");
        const auto classes = cc.at("classes").get<std::vector<std::vector<int>>>();
        if (cc.at("certificate") == "found" && !is_transversal_partition(s, classes))
          problems.push_back("certificate classes do not meet every line exactly once");
      }
    } else if (op == "cliques") {
      const auto& r = j.at("result");
      for (const auto& c : r.at("non_line_cliques")) {
        const auto clique = c.get<std::vector<int>>();
        for (std::size_t a = 0; a < clique.size(); ++a)
          for (std::size_t b = 0; b < a; ++b)
            if (!g.adjacent(clique[a], clique[b])) problems.push_back("non-line clique witness is not a clique");
      }
    } else if (op != "construct" && op != "verify") {
      problems.push_back("unknown operation \"" + op + "\"");
    }
  } catch (const Json::exception& e) {
    problems.push_back(std::string("malformed report: ") + e.what());
  } catch (const Error& e) {
    problems.push_back(std::string("invalid embedded data: ") + e.what());
  }
  return problems;
}

}  // namespace geomcore::report
