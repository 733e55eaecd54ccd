#include <cstdlib>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>

#include "CLI11.hpp"

#include "geomcore/builders.hpp"
#include "geomcore/certificates.hpp"
#include "geomcore/fixtures.hpp"
#include "geomcore/geometry_io.hpp"
#include "geomcore/graph6.hpp"
#include "geomcore/report.hpp"
#include "geomcore/verify.hpp"

namespace {

using namespace geomcore;
using report::Json;

constexpr int kExitOk = 0;
constexpr int kExitInternal = 1;
constexpr int kExitInput = 2;
constexpr int kExitVerify = 3;

unsigned default_jobs() {
  if (const char* env = std::getenv("GEOMCORE_JOBS")) {
    try {
      const long v = std::stol(env);
      if (v >= 1) return static_cast<unsigned>(v);
    } catch (const std::exception&) {
    }
    std::cerr << "warning: ignoring invalid GEOMCORE_JOBS=\"" << env << "\"\n";
  }
  return 1;
}

struct Options {
  SearchBudget budget{.jobs = default_jobs()};
  std::string out;
  std::string input;
  std::string builtin;
};

void add_budget(CLI::App* cmd, Options& o) {
  cmd->add_option("--nodes", o.budget.nodes, "search node budget")->capture_default_str();
  cmd->add_option("--seconds", o.budget.seconds, "wall-clock budget in seconds")->capture_default_str();
  cmd->add_option("--jobs", o.budget.jobs, "worker threads (default: $GEOMCORE_JOBS or 1)")
      ->check(CLI::PositiveNumber)
      ->capture_default_str();
}

void emit(const std::string& text, const std::string& path) {
  if (path.empty() || path == "-") {
    std::cout << text;
    return;
  }
  std::ofstream f(path);
  if (!f) throw ParseError("cannot open \"" + path + "\" for writing", 0);
  f << text;
}

std::string slurp(const std::string& path) {
  std::ifstream f(path);
  if (!f) throw ParseError("cannot open \"" + path + "\"", 0);
  std::ostringstream ss;
  ss << f.rdbuf();
  return ss.str();
}

// Geometry files have a space on their first data line or a family tag;
// graph6 lines never contain spaces.
bool looks_like_geometry(const std::string& text) {
  std::istringstream in(text);
  std::string line;
  while (std::getline(in, line)) {
    if (line.starts_with("# family:") || line.starts_with("#family:")) return true;
    if (const auto hash = line.find('#'); hash != std::string::npos && !line.starts_with(">>graph6<<"))
      line.resize(hash);
    if (line.find_first_not_of(" \t\r") == std::string::npos) continue;
    return line.find_first_of(" \t") != std::string::npos;
  }
  return false;
}

struct Input {
  std::string name;
  Graph graph;
  std::optional<Geometry> geometry;
};

Input load_input(const Options& o) {
  if (!o.builtin.empty() && !o.input.empty()) throw PreconditionError("give either an input file or --builtin, not both");
  if (!o.builtin.empty()) {
    auto f = make_fixture(o.builtin);
    return Input{f.name, std::move(f.graph), std::move(f.geometry)};
  }
  if (o.input.empty()) throw PreconditionError("no input: give a file or --builtin NAME");
  const std::string text = slurp(o.input);
  if (looks_like_geometry(text)) {
    Geometry geo = io::read_geometry(text);
    Graph g = point_graph(geo.structure).graph;
    return Input{o.input, std::move(g), std::move(geo)};
  }
  std::istringstream in(text);
  auto entries = graph6::read_file(in);
  if (entries.empty()) throw ParseError("\"" + o.input + "\" contains no graph", 0);
  if (entries.size() > 1) throw PreconditionError("\"" + o.input + "\" holds several graphs; use the batch command");
  if (!entries.front().ok()) throw ParseError(entries.front().error(), 0);
  return Input{o.input, entries.front().graph(), std::nullopt};
}

// ---------------------------------------------------------------------------

struct ConstructArgs {
  std::string family;
  std::string name;
  int v = 0, k = 0, n = 0, s = 0, t = 0, p = 0, q = 0;
  std::string geometry_out;
};

Geometry construct_geometry(const ConstructArgs& a) {
  if (a.family == "design") {
    if (a.name == "fano") return design_to_geometry(fano());
    if (a.name == "sts9") return design_to_geometry(sts9());
    if (a.name == "sts15") return design_to_geometry(sts15_pg32());
    throw PreconditionError("construct design: --name must be fano, sts9 or sts15");
  }
  if (a.family == "oa") {
    if (a.name == "z4") return oa_to_geometry(latin4(Latin4::Z4));
    if (a.name == "klein") return oa_to_geometry(latin4(Latin4::KleinFour));
    if (!a.name.empty()) throw PreconditionError("construct oa: --name must be z4 or klein");
    return oa_to_geometry(mols_oa(a.k, a.n));
  }
  if (a.s == 2 && a.t == 2) return make_geometry(gq22());
  if (a.s == 2 && a.t == 4) return make_geometry(gq24());
  throw UnsupportedError("construct gq: only (s,t) = (2,2) and (2,4) are built in");
}

int cmd_construct(const ConstructArgs& a, const Options& o) {
  Graph g;
  if (a.family == "design" || a.family == "oa" || a.family == "gq") {
    const Geometry geo = construct_geometry(a);
    g = point_graph(geo.structure).graph;
    if (!a.geometry_out.empty()) {
      std::ostringstream ss;
      io::write_geometry(ss, geo);
      emit(ss.str(), a.geometry_out);
    }
  } else if (a.family == "johnson") {
    g = johnson(a.v, a.k);
  } else if (a.family == "kneser") {
    g = kneser(a.v, a.k);
  } else if (a.family == "halved-cube") {
    g = halved_cube(a.n);
  } else if (a.family == "grid") {
    g = grid(a.p, a.q);
  } else {
    throw PreconditionError("unknown family \"" + a.family + "\"");
  }
  emit(graph6::encode(g) + "\n", o.out);
  return kExitOk;
}

int cmd_classify(const Options& o) {
  const Input in = load_input(o);
  const auto r = in.geometry ? report::classify_geometry(in.name, *in.geometry, o.budget)
                             : report::classify_graph(in.name, in.graph, o.budget);
  const Json j = r.to_json();
  if (const auto problems = report::validate_report(j); !problems.empty())
    throw Error("report failed re-validation: " + problems.front());
  emit(j.dump(2) + "\n", o.out);
  return kExitOk;
}

int cmd_cliques(const Options& o) {
  const Input in = load_input(o);
  if (!in.geometry) throw PreconditionError("cliques needs a geometry input (design, OA or incidence file)");
  const Json j = report::clique_report(in.name, *in.geometry).to_json();
  emit(j.dump(2) + "\n", o.out);
  return kExitOk;
}

int cmd_batch(const Options& o) {
  if (o.input.empty()) throw PreconditionError("batch needs a graph6 file");
  report::Timer timer;
  std::ifstream f(o.input);
  if (!f) throw ParseError("cannot open \"" + o.input + "\"", 0);
  const auto entries = graph6::read_file(f);
  const auto result = report::run_batch(entries, o.budget);
  const Json j = report::batch_json(result, o.budget, timer.seconds());
  for (const auto& e : result.entries)
    if (e.screening() == "FLAG")
      std::cerr << "line " << e.line << ": proper endomorphism that is not a colouring (core order "
                << e.report->core_order << "), graph6 " << e.graph6 << "\n";
  emit(j.dump(2) + "\n", o.out);
  return kExitOk;
}

int cmd_verify(const std::string& suite, const Options& o) {
  report::Timer timer;
  const auto claims = verify::run_suite(suite, o.budget);
  const Json j = verify::claims_json(suite, claims, o.budget, timer.seconds());
  emit(j.dump(2) + "\n", o.out);
  bool ok = true;
  for (const auto& c : claims) {
    if (c.passed()) continue;
    ok = false;
    std::cerr << (c.status == Decision::No ? "FAIL " : "UNKNOWN ") << c.suite << ": " << c.name << " (" << c.detail
              << ")\n";
  }
  return ok ? kExitOk : kExitVerify;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Cores and complete cores of geometric graphs"};
  app.require_subcommand(1);
  Options o;

  ConstructArgs ca;
  auto* construct = app.add_subcommand("construct", "build a graph or geometry and print it as graph6");
  construct->add_option("family", ca.family, "design | oa | gq | johnson | kneser | halved-cube | grid")
      ->required()
      ->check(CLI::IsMember({"design", "oa", "gq", "johnson", "kneser", "halved-cube", "grid"}));
  construct->add_option("--name", ca.name, "design: fano | sts9 | sts15; oa: z4 | klein");
  construct->add_option("--v", ca.v, "ground set size (johnson, kneser)");
  construct->add_option("--k", ca.k, "subset size (johnson, kneser) or OA row count");
  construct->add_option("--n", ca.n, "OA order or halved-cube dimension");
  construct->add_option("--s", ca.s, "GQ order s");
  construct->add_option("--t", ca.t, "GQ order t");
  construct->add_option("--p", ca.p, "grid rows");
  construct->add_option("--q", ca.q, "grid columns");
  construct->add_option("--geometry", ca.geometry_out, "also write the geometry file here");
  construct->add_option("--out", o.out, "output path (default stdout)");

  auto* classify = app.add_subcommand("classify", "decide core / complete core for a graph or geometry");
  classify->add_option("input", o.input, "graph6 or geometry file");
  classify->add_option("--builtin", o.builtin, "built-in fixture name, e.g. gq22, halved-cube:4");
  classify->add_option("--out", o.out, "output path (default stdout)");
  add_budget(classify, o);

  auto* cliques = app.add_subcommand("cliques", "maximum cliques of a geometry's point graph");
  cliques->add_option("input", o.input, "geometry file");
  cliques->add_option("--builtin", o.builtin, "built-in geometry fixture name");
  cliques->add_option("--out", o.out, "output path (default stdout)");

  auto* batch = app.add_subcommand("batch", "classify every graph in a graph6 file");
  batch->add_option("input", o.input, "graph6 file")->required();
  batch->add_option("--out", o.out, "output path (default stdout)");
  add_budget(batch, o);

  std::string suite;
  auto* verify_cmd = app.add_subcommand("verify", "run a verification suite (or \"all\")");
  verify_cmd->add_option("suite", suite, "suite name")->required();
  verify_cmd->add_option("--out", o.out, "output path (default stdout)");
  add_budget(verify_cmd, o);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? kExitOk : kExitInput;
  }

  try {
    if (*construct) return cmd_construct(ca, o);
    if (*classify) return cmd_classify(o);
    if (*cliques) return cmd_cliques(o);
    if (*batch) return cmd_batch(o);
    if (*verify_cmd) return cmd_verify(suite, o);
  } catch (const ParseError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitInput;
  } catch (const ValidationError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitInput;
  } catch (const PreconditionError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitInput;
  } catch (const UnsupportedError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitInput;
  } catch (const InfeasibleError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitInput;
  } catch (const std::exception& e) {
    std::cerr << "internal error: " << e.what() << "\n";
    return kExitInternal;
  }
  return kExitOk;
}
