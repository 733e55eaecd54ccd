#include <gtest/gtest.h>

#include <sstream>

#include "geomcore/builders.hpp"
#include "geomcore/fixtures.hpp"
#include "geomcore/geometry_io.hpp"
#include "geomcore/report.hpp"
#include "geomcore/verify.hpp"

using namespace geomcore;
using report::Json;

namespace {

report::BatchResult batch_of(const std::string& text, SearchBudget budget = {}) {
  std::istringstream in(text);
  return report::run_batch(graph6::read_file(in), budget);
}

}  // namespace

TEST(Report, ClassifyGraphIsSelfConsistent) {
  const auto r = report::classify_graph("k333", complete_multipartite(3, 3), {}).to_json();
  EXPECT_EQ(r["schema"], report::kSchema);
  EXPECT_EQ(r["verdict"], "CompleteCore(3)");
  EXPECT_TRUE(r.contains("timings"));
  EXPECT_TRUE(report::validate_report(r).empty());
}

TEST(Report, TamperedWitnessesAreCaught) {
  const auto good = report::classify_graph("k333", complete_multipartite(3, 3), {}).to_json();
  auto bad = good;
  bad["result"]["core"]["coloring"][0] = bad["result"]["core"]["coloring"][1];
  bad["result"]["core"]["coloring"][1] = bad["result"]["core"]["coloring"][3];
  EXPECT_FALSE(report::validate_report(bad).empty());

  bad = good;
  bad["result"]["core"]["clique"] = {0, 1, 2};  // a coclique of K_{3,3,3}
  EXPECT_FALSE(report::validate_report(bad).empty());

  bad = good;
  bad["schema"] = "other/9";
  EXPECT_FALSE(report::validate_report(bad).empty());

  GraphBuilder b(6);
  for (int i = 0; i < 5; ++i) b.add_edge(i, (i + 1) % 5);
  b.add_edge(0, 5);
  const auto other = report::classify_graph("pendant", std::move(b).build(), {}).to_json();
  EXPECT_EQ(other["verdict"], "Other(5)");
  EXPECT_TRUE(report::validate_report(other).empty());
  auto forged = other;
  forged["result"]["core"]["proper_endomorphism"] = {0, 1, 2, 3, 4, 5};
  EXPECT_FALSE(report::validate_report(forged).empty());
}

TEST(Report, GeometryCrossCheckRevalidates) {
  const auto r = report::classify_geometry("sts9", design_to_geometry(sts9()), {}).to_json();
  EXPECT_TRUE(report::validate_report(r).empty());
  EXPECT_EQ(r["result"]["cross_check"]["certificate_kind"], "resolution");
  auto bad = r;
  std::swap(bad["result"]["cross_check"]["classes"][0][0], bad["result"]["cross_check"]["classes"][1][0]);
  EXPECT_FALSE(report::validate_report(bad).empty());
}

TEST(Report, StripTimingsRemovesOnlyTimings) {
  const auto r = report::classify_graph("petersen", petersen(), {}).to_json();
  const auto s = report::strip_timings(r);
  EXPECT_FALSE(s.contains("timings"));
  EXPECT_EQ(s["verdict"], r["verdict"]);
  EXPECT_EQ(s["result"], report::strip_timings(r["result"]));
}

TEST(Batch, Counts) {
  const auto empty = batch_of("");
  EXPECT_EQ(empty.total(), 0u);
  EXPECT_TRUE(report::validate_report(report::batch_json(empty, {}, 0)).empty());

  const std::string text = graph6::encode(cycle_graph(6)) + "\n" + graph6::encode(petersen()) + "\n" +
                           graph6::encode(cycle_graph(5)) + "\n" + "not-graph6\n" +
                           graph6::encode(edgeless_graph(3)) + "\n";
  const auto b = batch_of(text, SearchBudget{.jobs = 3});
  ASSERT_EQ(b.entries.size(), 5u);
  EXPECT_EQ(b.complete_cores, 1u);
  EXPECT_EQ(b.cores, 2u);
  EXPECT_EQ(b.errors, 2u);
  EXPECT_EQ(b.total(), 5u);
  EXPECT_EQ(b.entries[0].screening(), "PASS");
  EXPECT_EQ(b.entries[3].screening(), "ERROR");
  EXPECT_EQ(report::verdict_label(*b.entries[0].report), "CompleteCore(2)");
  const auto j = report::batch_json(b, {}, 0);
  EXPECT_TRUE(report::validate_report(j).empty());
  auto bad = j;
  bad["summary"]["cores"] = 7;
  EXPECT_FALSE(report::validate_report(bad).empty());
}

TEST(Batch, ParallelMatchesSerial) {
  std::string text;
  for (const auto& [name, g] : verify::screening_graphs()) text += graph6::encode(g) + "\n";
  const auto a = report::batch_json(batch_of(text, SearchBudget{.jobs = 1}), {}, 0);
  const auto b = report::batch_json(batch_of(text, SearchBudget{.jobs = 8}), {}, 0);
  EXPECT_EQ(report::strip_timings(a), report::strip_timings(b));
}

TEST(Fixtures, NamesResolve) {
  for (const auto& name : {"fano", "sts9", "gq22", "oa:3:5", "latin4:klein", "petersen", "halved-cube:5",
                           "johnson:6:2", "kneser:7:3", "grid:3:4", "cycle:7", "complete:4", "multipartite:3:2",
                           "complement:petersen"}) {
    EXPECT_NO_THROW(make_fixture(name)) << name;
  }
  EXPECT_TRUE(make_fixture("gq22").geometry.has_value());
  EXPECT_THROW(make_fixture("no-such"), PreconditionError);
  EXPECT_THROW(make_fixture("oa:3:6"), UnsupportedError);
}

TEST(Verify, SuitesAllPass) {
  for (const auto& suite : verify::suites()) {
    if (suite.name == "determinism") continue;  // covered by the acceptance run
    for (const auto& c : verify::run_suite(suite.name, {})) EXPECT_TRUE(c.passed()) << c.suite << "/" << c.name << ": " << c.detail;
  }
  EXPECT_THROW(verify::run_suite("nope", {}), PreconditionError);
}
