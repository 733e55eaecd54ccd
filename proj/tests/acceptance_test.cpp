// One line per acceptance criterion; exit status is nonzero if any fails.
// Expected values come from the test-side oracles in oracles.hpp or from
// hand-derived constants, never from the library's own helpers alone.

#include <bit>
#include <chrono>
#include <cstdio>
#include <functional>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include "geomcore/builders.hpp"
#include "geomcore/certificates.hpp"
#include "geomcore/cliques.hpp"
#include "geomcore/homsearch.hpp"
#include "geomcore/report.hpp"
#include "geomcore/verify.hpp"
#include "oracles.hpp"

using namespace geomcore;

namespace {

// Collects failures for one criterion; the first few are printed.
struct Check {
  std::vector<std::string> failures;
  void expect(bool ok, const std::string& what) {
    if (!ok) failures.push_back(what);
  }
};

int g_failed = 0;

void criterion(int id, const char* title, double bound_seconds, const std::function<void(Check&)>& body) {
  const auto start = std::chrono::steady_clock::now();
  Check check;
  try {
    body(check);
  } catch (const std::exception& e) {
    check.failures.push_back(std::string("exception: ") + e.what());
  }
  const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  if (secs > bound_seconds)
    check.failures.push_back("took " + std::to_string(secs) + " s, bound " + std::to_string(bound_seconds) + " s");
  const bool ok = check.failures.empty();
  g_failed += !ok;
  std::printf("[%s] %2d %-44s %8.3f s (bound %.0f s)\n", ok ? "PASS" : "FAIL", id, title, secs, bound_seconds);
  for (std::size_t i = 0; i < check.failures.size() && i < 8; ++i) std::printf("       - %s\n", check.failures[i].c_str());
  std::fflush(stdout);
}

bool is_permutation_automorphism(const oracle::Matrix& m, const std::vector<int>& f) {
  std::vector<int> sorted = f;
  std::sort(sorted.begin(), sorted.end());
  for (std::size_t i = 0; i < sorted.size(); ++i)
    if (sorted[i] != static_cast<int>(i)) return false;
  return oracle::preserves_edges(m, m, f);
}

bool proper(const oracle::Matrix& m, const std::vector<int>& colors, int q) {
  for (std::size_t u = 0; u < m.size(); ++u) {
    if (colors[u] < 0 || colors[u] >= q) return false;
    for (std::size_t v = 0; v < u; ++v)
      if (m[u][v] && colors[u] == colors[v]) return false;
  }
  return true;
}

}  // namespace

int main() {
  const SearchBudget budget{};

  criterion(1, "point graph parameters", 1, [](Check& c) {
    for (const auto& [name, geo] : verify::parameter_fixtures()) {
      const Graph x = point_graph(geo.structure).graph;
      const auto want = pg_srg_params(geo.params).params;
      if (is_complete(x)) {
        // Fano and the affine plane OA(4,3): the dictionary must predict valency n-1.
        c.expect(want.n == static_cast<int>(x.order()) && want.k == want.n - 1, name + ": complete graph mismatch");
        continue;
      }
      const auto counted = oracle::srg(x);
      const auto got = srg_check(x);
      c.expect(counted && got, name + ": not strongly regular");
      if (!counted || !got) continue;
      c.expect(counted->n == want.n && counted->k == want.k && counted->lambda == want.lambda && counted->mu == want.mu,
               name + ": oracle parameters differ from the dictionary");
      c.expect(*got == want, name + ": srg_check differs from the dictionary");
    }
  });

  criterion(2, "spectrum of GQ(2,2)", 1, [](Check& c) {
    const PgParams p{2, 2, 1};
    const auto sp = pg_srg_params(p);
    c.expect(sp.m_theta == 9 && sp.m_tau == 5, "multiplicities are not 9 and 5");
    c.expect(1 + sp.m_theta + sp.m_tau == 15, "multiplicities do not sum to 15");
    c.expect(sp.params.k + sp.m_theta * sp.theta + sp.m_tau * sp.tau == 0, "trace is not zero");
    c.expect(quoted_m_tau_expression(p) == Fraction{5, 2}, "quoted expression no longer evaluates to 5/2");
  });

  criterion(3, "non-line maximum cliques", 30, [](Check& c) {
    const auto sts = design_to_geometry(sts15_pg32());
    const auto r = classify_cliques(sts);
    c.expect(r.max_size == 7 && r.line_cliques == 15 && r.non_line_cliques.size() == 15, "sts15 clique counts");
    const auto m = oracle::matrix(point_graph(sts.structure).graph);
    for (const auto& cl : r.non_line_cliques) {
      c.expect(oracle::is_clique(m, cl), "sts15 witness is not a clique");
      const auto a = nonline_clique_analysis(sts.structure, sts.params, cl);
      c.expect(a.size == 7 && a.bound == 1 + (sts.params.t + 1) * (sts.params.alpha - 1) && a.equality, "sts15 bound");
      c.expect(a.traces_form_design && a.traces.size() == 7, "sts15 traces are not a Fano plane");
      for (const auto& tr : a.traces) c.expect(tr.size() == 3, "trace of size other than 3");
    }
    for (Latin4 which : {Latin4::Z4, Latin4::KleinFour})
      c.expect(!classify_cliques(oa_to_geometry(latin4(which))).non_line_cliques.empty(), "latin4 without non-line cliques");
    const auto oa5 = classify_cliques(oa_to_geometry(mols_oa(3, 5)));
    c.expect(oa5.non_line_cliques.empty() && oa5.line_cliques == 15, "OA(3,5) has non-line cliques");
  });

  criterion(4, "GQ(2,2) endomorphisms", 300, [&](Check& c) {
    const Graph x = point_graph(gq22()).graph;
    c.expect(classify_core(x, budget).verdict == CoreVerdict::Core, "gq22 is not classified Core");
    const auto endos = enumerate_endomorphisms(x, budget);
    c.expect(endos.complete, "enumeration incomplete");
    c.expect(endos.maps.size() == 720, "expected 720 maps, got " + std::to_string(endos.maps.size()));
    const auto m = oracle::matrix(x);
    for (const auto& f : endos.maps) c.expect(is_permutation_automorphism(m, f.image), "map is not an automorphism");
  });

  criterion(5, "complete-core certificates", 600, [&](Check& c) {
    struct Case {
      const char* name;
      Geometry geo;
      CoreVerdict verdict;
      int q;
      bool certificate;
    };
    const std::vector<Case> cases{
        {"sts9", design_to_geometry(sts9()), CoreVerdict::CompleteCore, 4, true},
        {"fano", design_to_geometry(fano()), CoreVerdict::CompleteCore, 7, true},
        {"latin4:z4", oa_to_geometry(latin4(Latin4::Z4)), CoreVerdict::Core, 0, false},
        {"latin4:klein", oa_to_geometry(latin4(Latin4::KleinFour)), CoreVerdict::CompleteCore, 4, true},
        {"oa:3:3", oa_to_geometry(mols_oa(3, 3)), CoreVerdict::CompleteCore, 3, true},
        {"gq22", make_geometry(gq22()), CoreVerdict::Core, 0, false},
        {"gq24", make_geometry(gq24()), CoreVerdict::Core, 0, false},
    };
    for (const auto& k : cases) {
      const std::string name = k.name;
      const auto cc = cross_check(k.geo, budget);
      c.expect(cc.consistent == Decision::Yes, name + ": inconsistent");
      const Graph x = point_graph(k.geo.structure).graph;
      if (cc.complete_point_graph) {
        c.expect(cc.core.verdict == CoreVerdict::CompleteCore && cc.core.q == k.q, name + ": complete graph verdict");
        continue;
      }
      // Colourability with s+1 colours by the independent oracle.
      c.expect(oracle::colorable(x, k.geo.params.s + 1) == k.certificate, name + ": oracle colourability differs");
      c.expect((cc.certificate == Outcome::Found) == k.certificate, name + ": certificate outcome");
      if (k.certificate)
        c.expect(is_transversal_partition(k.geo.structure, cc.certificate_classes), name + ": certificate invalid");
      if (name == "gq24") {
        c.expect(cc.ovoids_exist == Decision::No, "gq24: ovoids found");
        if (cc.core.verdict == CoreVerdict::Unknown) {
          c.expect(!oracle::colorable(x, 3), "gq24: 3-colourable");
          continue;
        }
      }
      if (name == "gq22") c.expect(cc.ovoids_exist == Decision::Yes, "gq22: no ovoids");
      c.expect(cc.core.verdict == k.verdict, name + ": verdict " + verdict_name(cc.core.verdict));
      if (k.verdict == CoreVerdict::CompleteCore) {
        c.expect(cc.core.q == k.q, name + ": q");
        c.expect(cc.core.coloring && proper(oracle::matrix(x), cc.core.coloring->image, k.q), name + ": colouring");
      }
    }
  });

  criterion(6, "halved cubes", 300, [&](Check& c) {
    const Graph h4 = halved_cube(4);
    const auto r = classify_core(h4, budget);
    c.expect(r.verdict == CoreVerdict::CompleteCore && r.q == 4, "halved_cube(4) is not CompleteCore(4)");
    const auto m4 = oracle::matrix(h4);
    c.expect(proper(m4, extended_hamming_coloring(4).image, 4), "coset colouring of halved_cube(4)");
    c.expect(r.coloring && proper(m4, r.coloring->image, 4), "witness colouring of halved_cube(4)");
    // Vertices of the halved 8-cube are even-weight words; adjacency is distance 2.
    const Graph h8 = halved_cube(8);
    const auto col8 = extended_hamming_coloring(8);
    bool ok = col8.image.size() == h8.order();
    for (std::size_t u = 0; ok && u < h8.order(); ++u)
      for (std::size_t v = 0; v < u; ++v) {
        const bool adj = std::popcount(halved_cube_vector(8, u) ^ halved_cube_vector(8, v)) == 2;
        ok = ok && adj == h8.adjacent(u, v) && (!adj || col8(u) != col8(v)) && col8(u) >= 0 && col8(u) < 8;
      }
    c.expect(ok, "coset colouring of halved_cube(8)");
    c.expect(is_core(halved_cube(5), budget).core == Decision::Yes, "halved_cube(5) is not a core");
  });

  criterion(7, "vertex-transitive divisor lemma", 60, [&](Check& c) {
    const auto p = core_order_divides(petersen(), budget);
    c.expect(p.kind == DivisorResult::Kind::Holds && p.core_order == 10 && p.order == 10, "Petersen");
    const auto h = core_order_divides(halved_cube(4), budget);
    c.expect(h.kind == DivisorResult::Kind::Holds && h.core_order == 4 && h.order == 8, "halved_cube(4)");
  });

  criterion(8, "triangle-free distance-regular graph", 10, [&](Check& c) {
    const Graph p = petersen();
    const auto dr = distance_regular_check(p);
    c.expect(dr && *dr == IntersectionArray{2, {3, 2}, {1, 1}}, "intersection array");
    c.expect(!has_triangle(p), "triangle found");
    c.expect(odd_girth(p) == 5, "odd girth");
    c.expect(two_arc_odd_cycle_condition(p), "2-arc condition");
    c.expect(is_core(p, budget).core == Decision::Yes, "not a core");
    c.expect(!oracle::colorable(p, 2), "oracle: bipartite");
  });

  criterion(9, "search agrees with exhaustive oracles", 120, [](Check& c) {
    std::mt19937_64 rng(20260217);
    for (int i = 0; i < 200; ++i) {
      const Graph x = oracle::random_graph(rng, 1 + rng() % 6);
      const Graph y = oracle::random_graph(rng, 1 + rng() % 5);
      const auto r = find_homomorphism(x, y);
      c.expect(r.outcome != Outcome::Exhausted && r.found() == oracle::hom_exists(x, y), "hom pair " + std::to_string(i));
      if (r.found()) c.expect(oracle::preserves_edges(oracle::matrix(x), oracle::matrix(y), r.witness->image), "witness");
    }
    for (int i = 0; i < 100; ++i) {
      const Graph g = oracle::random_graph(rng, 1 + rng() % 12, i % 2 ? 0.7 : 0.4);
      c.expect(max_cliques(g) == oracle::max_cliques(g), "clique graph " + std::to_string(i));
    }
  });

  criterion(10, "SRG screening finds no other endomorphisms", 600, [&](Check& c) {
    std::string text;
    std::vector<std::string> names;
    for (const auto& [name, g] : verify::screening_graphs()) {
      c.expect(oracle::srg(g).has_value(), name + ": not an SRG");
      text += graph6::encode(g) + "\n";
      names.push_back(name);
    }
    std::istringstream in(text);
    const auto b = report::run_batch(graph6::read_file(in), budget);
    c.expect(b.entries.size() == names.size() && b.errors == 0, "batch errors");
    for (std::size_t i = 0; i < b.entries.size(); ++i)
      c.expect(b.entries[i].screening() == "PASS", names[i] + ": " + b.entries[i].screening());
    c.expect(report::validate_report(report::batch_json(b, budget, 0)).empty(), "batch report does not revalidate");
  });

  criterion(11, "determinism across worker counts", 1200, [&](Check& c) {
    SearchBudget one = budget, many = budget;
    one.jobs = 1;
    many.jobs = 8;
    const auto a = report::strip_timings(verify::criteria_json(one)).dump();
    const auto b = report::strip_timings(verify::criteria_json(many)).dump();
    c.expect(a == b, "JSON differs between 1 and 8 workers");
  });

  std::printf("%s: %d criteria failed\n", g_failed ? "FAIL" : "PASS", g_failed);
  return g_failed ? 1 : 0;
}
