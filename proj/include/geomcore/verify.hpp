#pragma once

#include <cstdint>
#include <functional>
#include <random>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "geomcore/builders.hpp"
#include "geomcore/certificates.hpp"
#include "geomcore/cliques.hpp"
#include "geomcore/geometry.hpp"
#include "geomcore/graph.hpp"
#include "geomcore/homsearch.hpp"
#include "geomcore/report.hpp"

// Named verification suites. Each returns one claim per checked statement;
// a claim passes, fails, or is unknown when a search ran out of budget.
namespace geomcore::verify {

using report::Json;

struct Claim {
  std::string suite;
  std::string name;
  Decision status = Decision::Unknown;  // Yes = pass
  std::string detail;
  double seconds = 0;

  bool passed() const { return status == Decision::Yes; }
};

struct Suite {
  std::string name;
  std::string summary;
  std::function<std::vector<Claim>(const SearchBudget&)> run;
};

namespace detail {

class Recorder {
 public:
  explicit Recorder(std::string suite) : suite_(std::move(suite)) {}

  void check(std::string name, bool ok, std::string detail = {}) {
    add(std::move(name), ok ? Decision::Yes : Decision::No, std::move(detail));
  }
  void add(std::string name, Decision status, std::string detail = {}) {
    claims_.push_back(Claim{suite_, std::move(name), status, std::move(detail), timer_.seconds()});
    timer_ = {};
  }
  std::vector<Claim> take() { return std::move(claims_); }

 private:
  std::string suite_;
  std::vector<Claim> claims_;
  report::Timer timer_;
};

inline std::string srg_text(const SrgParams& p) {
  return "(" + std::to_string(p.n) + "," + std::to_string(p.k) + "," + std::to_string(p.lambda) + "," +
         std::to_string(p.mu) + ")";
}

}  // namespace detail

// Geometry fixtures with their display names.
inline std::vector<std::pair<std::string, Geometry>> parameter_fixtures() {
  return {
      {"fano", design_to_geometry(fano())},
      {"sts9", design_to_geometry(sts9())},
      {"sts15", design_to_geometry(sts15_pg32())},
      {"oa:3:3", oa_to_geometry(mols_oa(3, 3))},
      {"oa:4:3", oa_to_geometry(mols_oa(4, 3))},
      {"oa:3:5", oa_to_geometry(mols_oa(3, 5))},
      {"latin4:z4", oa_to_geometry(latin4(Latin4::Z4))},
      {"latin4:klein", oa_to_geometry(latin4(Latin4::KleinFour))},
      {"gq22", make_geometry(gq22())},
      {"gq24", make_geometry(gq24())},
  };
}

// Strongly regular graphs on at most 16 vertices that the builders produce,
// plus each complement that is again connected and strongly regular.
inline std::vector<std::pair<std::string, Graph>> screening_graphs() {
  std::vector<std::pair<std::string, Graph>> base{
      {"cycle:5", cycle_graph(5)},
      {"petersen", petersen()},
      {"multipartite:3:3", complete_multipartite(3, 3)},
      {"multipartite:4:3", complete_multipartite(4, 3)},
      {"grid:3:3", grid(3, 3)},
      {"gq22", point_graph(gq22()).graph},
      {"halved-cube:4", halved_cube(4)},
      {"latin4:z4", point_graph(oa_to_geometry(latin4(Latin4::Z4)).structure).graph},
      {"latin4:klein", point_graph(oa_to_geometry(latin4(Latin4::KleinFour)).structure).graph},
  };
  std::vector<std::pair<std::string, Graph>> out;
  for (auto& [name, g] : base) {
    Graph c = complement(g);
    const bool keep_complement = srg_check(c).has_value();
    out.emplace_back(name, std::move(g));
    if (keep_complement) out.emplace_back("complement:" + name, std::move(c));
  }
  return out;
}

// Everything the clique, endomorphism, certificate and halved-cube suites
// compute, as one JSON document. Node counts sit under "timings".
inline Json criteria_json(const SearchBudget& budget) {
  Json out;
  {
    Json cliques;
    for (const char* name : {"sts15", "latin4:z4", "latin4:klein", "oa:3:5"}) {
      Geometry geo = name == std::string_view("sts15")         ? design_to_geometry(sts15_pg32())
                     : name == std::string_view("latin4:z4")    ? oa_to_geometry(latin4(Latin4::Z4))
                     : name == std::string_view("latin4:klein") ? oa_to_geometry(latin4(Latin4::KleinFour))
                                                                : oa_to_geometry(mols_oa(3, 5));
      const auto cr = classify_cliques(geo);
      Json j = report::clique_json(cr);
      Json analyses = Json::array();
      for (const auto& c : cr.non_line_cliques)
        analyses.push_back(report::analysis_json(nonline_clique_analysis(geo.structure, geo.params, c)));
      j["analyses"] = analyses;
      cliques[name] = j;
    }
    out["cliques"] = cliques;
  }
  {
    const Graph x = point_graph(gq22()).graph;
    const auto core = classify_core(x, budget);
    const auto endos = enumerate_endomorphisms(x, budget);
    Json maps = Json::array();
    for (const auto& f : endos.maps) maps.push_back(f.image);
    out["gq_endomorphisms"] = {{"core", report::core_json(core)},
                               {"complete", endos.complete},
                               {"count", endos.maps.size()},
                               {"maps", maps},
                               {"timings", {{"nodes", core.nodes + endos.nodes}}}};
  }
  {
    Json certs;
    for (auto& [name, geo] : parameter_fixtures()) {
      if (name == "sts15" || name == "oa:4:3" || name == "oa:3:5") continue;
      const auto cc = cross_check(geo, budget);
      certs[name] = {{"core", report::core_json(cc.core)},
                     {"cross_check", report::cross_json(cc)},
                     {"timings", {{"nodes", cc.core.nodes}}}};
    }
    out["certificates"] = certs;
  }
  {
    const auto hc4 = classify_core(halved_cube(4), budget);
    const auto hc5 = is_core(halved_cube(5), budget);
    out["halved_cubes"] = {{"halved-cube:4", report::core_json(hc4)},
                           {"halved-cube:5-core", decision_name(hc5.core)},
                           {"timings", {{"nodes", hc4.nodes + hc5.nodes}}}};
  }
  return out;
}

// ---------------------------------------------------------------------------
// Suites.

inline std::vector<Claim> suite_params(const SearchBudget&) {
  detail::Recorder rec("params");
  for (const auto& [name, geo] : parameter_fixtures()) {
    const Graph x = point_graph(geo.structure).graph;
    const auto expected = pg_srg_params(geo.params).params;
    if (is_complete(x)) {
      const bool ok = static_cast<int>(x.order()) == expected.n && expected.k == expected.n - 1;
      rec.check(name + ": complete point graph matches n, k", ok, "expected " + detail::srg_text(expected));
      continue;
    }
    const auto got = srg_check(x);
    rec.check(name + ": srg parameters match the dictionary", got && *got == expected,
              "expected " + detail::srg_text(expected) + ", got " + (got ? detail::srg_text(*got) : "not an SRG"));
  }
  return rec.take();
}

inline std::vector<Claim> suite_spectrum(const SearchBudget&) {
  detail::Recorder rec("spectrum");
  const PgParams gq{2, 2, 1};
  const auto sp = pg_srg_params(gq);
  rec.check("GQ(2,2) multiplicities are 9 and 5", sp.m_theta == 9 && sp.m_tau == 5,
            "m_theta=" + std::to_string(sp.m_theta) + " m_tau=" + std::to_string(sp.m_tau));
  rec.check("1 + m_theta + m_tau = n", 1 + sp.m_theta + sp.m_tau == sp.params.n);
  rec.check("trace: k + m_theta*theta + m_tau*tau = 0",
            sp.params.k + sp.m_theta * sp.theta + sp.m_tau * sp.tau == 0,
            "theta=" + std::to_string(sp.theta) + " tau=" + std::to_string(sp.tau));
  const auto quoted = quoted_m_tau_expression(gq);
  rec.check("quoted tau-multiplicity closed form gives 5/2, not 5", quoted == Fraction{5, 2},
            std::to_string(quoted.num) + "/" + std::to_string(quoted.den));
  bool all = true;
  for (const auto& [name, geo] : parameter_fixtures()) {
    const auto s = pg_srg_params(geo.params);
    all = all && 1 + s.m_theta + s.m_tau == s.params.n && s.params.k + s.m_theta * s.theta + s.m_tau * s.tau == 0;
  }
  rec.check("multiplicities satisfy both trace identities on every fixture", all);
  return rec.take();
}

inline std::vector<Claim> suite_thm3(const SearchBudget&) {
  detail::Recorder rec("thm3");
  {
    const auto geo = design_to_geometry(sts15_pg32());
    const auto cr = classify_cliques(geo);
    rec.check("sts15: maximum clique size 7", cr.max_size == 7, std::to_string(cr.max_size));
    rec.check("sts15: 15 line cliques", cr.line_cliques == 15, std::to_string(cr.line_cliques));
    rec.check("sts15: 15 non-line cliques", cr.non_line_cliques.size() == 15,
              std::to_string(cr.non_line_cliques.size()));
    bool equality = true, design = true;
    for (const auto& c : cr.non_line_cliques) {
      const auto a = nonline_clique_analysis(geo.structure, geo.params, c);
      equality = equality && a.equality && a.size == 1 + (geo.params.t + 1) * (geo.params.alpha - 1);
      design = design && a.lines_meet_in_zero_or_alpha && a.traces_form_design &&
               static_cast<int>(a.traces.size()) == 7;
    }
    rec.check("sts15: every non-line clique attains 1+(t+1)(alpha-1)", equality);
    rec.check("sts15: every non-line clique carries a 2-(7,3,1) trace design", design);
  }
  for (auto [name, which] : {std::pair{"latin4:z4", Latin4::Z4}, std::pair{"latin4:klein", Latin4::KleinFour}}) {
    const auto geo = oa_to_geometry(latin4(which));
    const auto cr = classify_cliques(geo);
    rec.check(std::string(name) + ": non-line 4-cliques exist", cr.max_size == 4 && !cr.non_line_cliques.empty(),
              std::to_string(cr.non_line_cliques.size()) + " non-line maximum cliques");
  }
  {
    const auto cr = classify_cliques(oa_to_geometry(mols_oa(3, 5)));
    rec.check("oa:3:5: no non-line maximum cliques", cr.non_line_cliques.empty() && cr.line_cliques == 15,
              std::to_string(cr.non_line_cliques.size()) + " non-line cliques");
  }
  return rec.take();
}

inline std::vector<Claim> suite_gq_endo(const SearchBudget& budget) {
  detail::Recorder rec("gq-endo");
  const Geometry geo = make_geometry(gq22());
  const Graph x = point_graph(geo.structure).graph;
  const auto core = classify_core(x, budget);
  rec.add("gq22: point graph is a core",
          core.verdict == CoreVerdict::Core ? Decision::Yes
          : core.verdict == CoreVerdict::Unknown ? Decision::Unknown
                                                  : Decision::No,
          report::verdict_label(core));
  const auto endos = enumerate_endomorphisms(x, budget);
  if (!endos.complete) {
    rec.add("gq22: 720 endomorphisms, all automorphisms", Decision::Unknown, "enumeration ran out of budget");
  } else {
    const bool all_auto = std::all_of(endos.maps.begin(), endos.maps.end(),
                                      [&](const VertexMap& f) { return is_automorphism(x, f); });
    rec.check("gq22: 720 endomorphisms, all automorphisms", endos.maps.size() == 720 && all_auto,
              std::to_string(endos.maps.size()) + " maps");
  }
  for (const char* name : {"gq22", "gq24"}) {
    const Geometry g = make_geometry(name == std::string_view("gq22") ? gq22() : gq24());
    const auto r = verify_endomorphism_image_theorem(g, budget);
    rec.add(std::string(name) + ": no proper endomorphism with a non-clique image",
            r.kind == ImageTheoremResult::Kind::Consistent           ? Decision::Yes
            : r.kind == ImageTheoremResult::Kind::Unknown ? Decision::Unknown
                                                          : Decision::No,
            std::string(image_kind_name(r.kind)) + ": " + r.reason);
  }
  return rec.take();
}

inline std::vector<Claim> suite_complete_core(const SearchBudget& budget) {
  detail::Recorder rec("complete-core");
  struct Expect {
    const char* name;
    CoreVerdict verdict;
    int q;
    bool certificate;
  };
  const std::vector<Expect> expected{
      {"sts9", CoreVerdict::CompleteCore, 4, true},     {"fano", CoreVerdict::CompleteCore, 7, false},
      {"latin4:z4", CoreVerdict::Core, 0, false},       {"latin4:klein", CoreVerdict::CompleteCore, 4, true},
      {"oa:3:3", CoreVerdict::CompleteCore, 3, true},   {"gq22", CoreVerdict::Core, 0, false},
      {"gq24", CoreVerdict::Core, 0, false},
  };
  const auto fixtures = parameter_fixtures();
  for (const auto& e : expected) {
    const auto& geo = std::find_if(fixtures.begin(), fixtures.end(), [&](const auto& f) { return f.first == e.name; })->second;
    const auto cc = cross_check(geo, budget);
    const std::string label = report::verdict_label(cc.core) + ", certificate " + outcome_name(cc.certificate);
    const std::string name = std::string(e.name) + ": complete core iff certificate";
    if (cc.consistent == Decision::Unknown) {
      rec.add(name, Decision::Unknown, label);
      continue;
    }
    bool ok = cc.consistent == Decision::Yes && cc.conversions_valid &&
              (cc.certificate == Outcome::Found) == e.certificate;
    if (cc.core.verdict == CoreVerdict::Unknown && e.verdict == CoreVerdict::Core) {
      // Coreness out of budget: the colouring side still has to be refuted.
      ok = ok && cc.colorable == Outcome::None;
      rec.add(name, ok ? Decision::Yes : Decision::No, label + " (coreness unknown; not (s+1)-colourable)");
    } else {
      ok = ok && cc.core.verdict == e.verdict && (e.q == 0 || cc.core.q == e.q);
      rec.check(name, ok, label);
    }
    if (std::string_view(e.name) == "gq24")
      rec.check("gq24: no ovoids exist", cc.ovoids_exist == Decision::No && cc.candidates == 0,
                std::to_string(cc.candidates) + " ovoids");
    if (std::string_view(e.name) == "gq22")
      rec.check("gq22: ovoids exist but do not partition the points", cc.ovoids_exist == Decision::Yes,
                std::to_string(cc.candidates) + " ovoids");
  }
  {
    const Design d = sts15_pg32();
    const auto res = find_resolution(d, budget);
    const auto col = k_colorable(point_graph(design_to_geometry(d).structure).graph, (d.v - d.k) / (d.k - 1) + 1, budget);
    rec.add("sts15: resolution and colouring agree on existence",
            res.outcome == Outcome::Exhausted || col.outcome == Outcome::Exhausted ? Decision::Unknown
            : (res.outcome == Outcome::Found) == col.found() && res.outcome == Outcome::Found &&
                    validate_resolution(d, *res.certificate) && res.certificate->classes.size() == 7
                ? Decision::Yes
                : Decision::No,
            std::string("resolution ") + outcome_name(res.outcome) + ", colouring " + outcome_name(col.outcome));
  }
  return rec.take();
}

inline std::vector<Claim> suite_halved_cube(const SearchBudget& budget) {
  detail::Recorder rec("halved-cube");
  const Graph h4 = halved_cube(4);
  const auto r4 = classify_core(h4, budget);
  rec.check("halved-cube:4 has complete core K4", r4.verdict == CoreVerdict::CompleteCore && r4.q == 4,
            report::verdict_label(r4));
  rec.check("extended Hamming cosets properly 4-colour halved-cube:4",
            is_proper_coloring(h4, extended_hamming_coloring(4), 4));
  rec.check("extended Hamming cosets properly 8-colour halved-cube:8",
            is_proper_coloring(halved_cube(8), extended_hamming_coloring(8), 8));
  rec.check("halved-cube:8 has clique number 8", clique_number(halved_cube(8)) == 8);
  const auto c5 = is_core(halved_cube(5), budget);
  rec.add("halved-cube:5 is a core", c5.core, decision_name(c5.core));
  return rec.take();
}

inline std::vector<Claim> suite_divisor(const SearchBudget& budget) {
  detail::Recorder rec("divisor");
  for (auto [name, g, order] : {std::tuple{"petersen", petersen(), 10}, std::tuple{"halved-cube:4", halved_cube(4), 4}}) {
    const auto d = core_order_divides(g, budget);
    const std::string detail = std::to_string(d.core_order) + " | " + std::to_string(d.order);
    if (d.kind == DivisorResult::Kind::Unknown)
      rec.add(std::string(name) + ": core order divides order", Decision::Unknown, detail);
    else
      rec.check(std::string(name) + ": core order divides order",
                d.kind == DivisorResult::Kind::Holds && d.core_order == order, detail);
  }
  return rec.take();
}

inline std::vector<Claim> suite_drg(const SearchBudget& budget) {
  detail::Recorder rec("drg");
  const Graph p = petersen();
  rec.check("petersen is distance-regular", distance_regular_check(p).has_value());
  rec.check("petersen is triangle-free", !has_triangle(p));
  const auto og = odd_girth(p);
  rec.check("petersen has odd girth 5", og == 5, og ? std::to_string(*og) : "none");
  rec.check("petersen: every 2-arc lies on a shortest odd cycle", two_arc_odd_cycle_condition(p));
  const auto core = is_core(p, budget);
  rec.add("petersen is a core", core.core, decision_name(core.core));
  return rec.take();
}

namespace detail {

inline Graph random_graph(std::mt19937_64& rng, std::size_t n) {
  GraphBuilder b(n);
  std::bernoulli_distribution edge(0.5);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i + 1; j < n; ++j)
      if (edge(rng)) b.add_edge(i, j);
  return std::move(b).build();
}

// Tries every map, in lexicographic order of images.
inline bool naive_hom_exists(const Graph& x, const Graph& y) {
  std::vector<int> f(x.order(), 0);
  const int m = static_cast<int>(y.order());
  for (;;) {
    bool ok = true;
    for (auto [u, v] : x.edges())
      if (!y.adjacent(f[u], f[v])) {
        ok = false;
        break;
      }
    if (ok) return true;
    std::size_t i = 0;
    while (i < f.size() && ++f[i] == m) f[i++] = 0;
    if (i == f.size()) return false;
  }
}

inline std::vector<std::vector<int>> naive_max_cliques(const Graph& g) {
  std::vector<std::vector<int>> best;
  std::size_t best_size = 0;
  const std::size_t n = g.order();
  for (std::uint32_t mask = 1; mask < (1u << n); ++mask) {
    std::vector<int> set;
    for (std::size_t v = 0; v < n; ++v)
      if (mask >> v & 1u) set.push_back(static_cast<int>(v));
    bool clique = true;
    for (std::size_t a = 0; a < set.size() && clique; ++a)
      for (std::size_t b = a + 1; b < set.size() && clique; ++b) clique = g.adjacent(set[a], set[b]);
    if (!clique || set.size() < best_size) continue;
    if (set.size() > best_size) best.clear(), best_size = set.size();
    best.push_back(std::move(set));
  }
  std::sort(best.begin(), best.end());
  return best;
}

}  // namespace detail

inline constexpr std::uint64_t kOracleSeed = 0x9e3779b97f4a7c15ULL;

inline std::vector<Claim> suite_oracle(const SearchBudget& budget) {
  detail::Recorder rec("oracle");
  std::mt19937_64 rng(kOracleSeed);
  std::uniform_int_distribution<std::size_t> nx(1, 6), ny(1, 5), nc(1, 12);
  int mismatches = 0, invalid = 0, unknown = 0;
  for (int i = 0; i < 200; ++i) {
    const Graph x = detail::random_graph(rng, nx(rng));
    const Graph y = detail::random_graph(rng, ny(rng));
    const auto r = find_homomorphism(x, y, budget);
    if (r.outcome == Outcome::Exhausted) {
      ++unknown;
      continue;
    }
    if (r.found() != detail::naive_hom_exists(x, y)) ++mismatches;
    if (r.found() && !is_homomorphism(x, y, *r.witness)) ++invalid;
  }
  rec.add("find_homomorphism matches exhaustive enumeration on 200 pairs",
          unknown ? Decision::Unknown : (mismatches == 0 && invalid == 0 ? Decision::Yes : Decision::No),
          std::to_string(mismatches) + " mismatches, " + std::to_string(invalid) + " invalid witnesses");
  int clique_mismatches = 0;
  for (int i = 0; i < 100; ++i) {
    const Graph g = detail::random_graph(rng, nc(rng));
    if (max_cliques(g) != detail::naive_max_cliques(g)) ++clique_mismatches;
  }
  rec.check("max_cliques matches subset enumeration on 100 graphs", clique_mismatches == 0,
            std::to_string(clique_mismatches) + " mismatches");
  return rec.take();
}

inline std::vector<Claim> suite_screening(const SearchBudget& budget) {
  detail::Recorder rec("screening");
  for (auto& [name, g] : screening_graphs()) {
    const auto r = classify_core(g, budget);
    const Decision status = r.verdict == CoreVerdict::Unknown ? Decision::Unknown
                            : r.verdict == CoreVerdict::Other ? Decision::No
                                                              : Decision::Yes;
    rec.add(name + ": core or complete core", status, report::verdict_label(r));
  }
  return rec.take();
}

inline std::vector<Claim> suite_determinism(const SearchBudget& budget) {
  detail::Recorder rec("determinism");
  SearchBudget one = budget, many = budget;
  one.jobs = 1;
  many.jobs = 8;
  const auto a = report::strip_timings(criteria_json(one)).dump();
  const auto b = report::strip_timings(criteria_json(many)).dump();
  rec.check("reports agree between 1 and 8 workers", a == b, std::to_string(a.size()) + " bytes");
  return rec.take();
}

inline const std::vector<Suite>& suites() {
  static const std::vector<Suite> all{
      {"params", "point graphs match the strongly regular parameter dictionary", suite_params},
      {"spectrum", "eigenvalue multiplicities and the quoted closed form", suite_spectrum},
      {"thm3", "non-line cliques: size bound and trace designs", suite_thm3},
      {"gq-endo", "generalized quadrangle endomorphisms", suite_gq_endo},
      {"complete-core", "complete cores versus resolutions, extensions and ovoid partitions", suite_complete_core},
      {"halved-cube", "halved cubes and extended Hamming cosets", suite_halved_cube},
      {"divisor", "vertex-transitive core order divides order", suite_divisor},
      {"drg", "Petersen graph as a triangle-free distance-regular core", suite_drg},
      {"oracle", "search results against brute force", suite_oracle},
      {"screening", "small strongly regular graphs are cores or complete cores", suite_screening},
      {"determinism", "identical reports for 1 and 8 workers", suite_determinism},
  };
  return all;
}

inline std::string suite_list() {
  std::string out;
  for (const auto& s : suites()) out += (out.empty() ? "" : ", ") + s.name;
  return out;
}

// Throws PreconditionError naming the available suites for an unknown name.
// "all" runs every suite in order.
inline std::vector<Claim> run_suite(std::string_view name, const SearchBudget& budget) {
  std::vector<Claim> out;
  for (const auto& s : suites())
    if (name == "all" || s.name == name) {
      auto claims = s.run(budget);
      out.insert(out.end(), claims.begin(), claims.end());
    }
  if (out.empty()) throw PreconditionError("unknown suite \"" + std::string(name) + "\"; available: all, " + suite_list());
  return out;
}

inline Json claims_json(std::string_view suite, const std::vector<Claim>& claims, const SearchBudget& budget,
                        double seconds) {
  Json list = Json::array();
  bool all = true;
  for (const auto& c : claims) {
    list.push_back({{"suite", c.suite},
                    {"claim", c.name},
                    {"status", c.passed() ? "PASS" : c.status == Decision::No ? "FAIL" : "UNKNOWN"},
                    {"detail", c.detail},
                    {"timings", {{"seconds", c.seconds}}}});
    all = all && c.passed();
  }
  return Json{{"schema", report::kSchema},
              {"operation", "verify"},
              {"suite", suite},
              {"verdict", all ? "PASS" : "FAIL"},
              {"claims", list},
              {"budget", {{"nodes", budget.nodes}, {"seconds", budget.seconds}}},
              {"timings", {{"seconds", seconds}, {"jobs", budget.jobs}}}};
}

}  // namespace geomcore::verify
