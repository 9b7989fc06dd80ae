#include <doctest.h>

#include <filesystem>
#include <fstream>
#include <sstream>

#include "minorforge/canon.hpp"
#include "minorforge/verify.hpp"

using namespace minorforge;

namespace {

std::string slurp(const std::filesystem::path& p) {
  std::ifstream in(p, std::ios::binary);
  std::stringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

const VerificationReport& heawood_report() {
  static const VerificationReport r = verify_excluded_minors(heawood_family(), {4, true});
  return r;
}

}  // namespace

TEST_CASE("heawood family has no counterexample") {
  const auto& r = heawood_report();
  CHECK(r.members.size() == 78);
  CHECK(r.counterexamples == 0);
  CHECK(r.invalid_certificates == 0);
  CHECK(r.exit_code() == 0);
  CHECK(r.warnings.empty());
  std::size_t total = 0;
  for (const auto& m : r.members) {
    CHECK(m.nonplanar);
    CHECK(m.petersen_minor);
    CHECK(!m.minors.empty());
    for (const auto& cm : m.minors) {
      REQUIRE(cm.apex.has_value());
      CHECK(cm.validated);
      CHECK(validate_apex_certificate(cm.step.graph, *cm.apex));
    }
    total += m.minors.size();
  }
  CHECK(total == r.minors_checked);
  CHECK(report_markdown(r).find("No counterexample found!\n") != std::string::npos);
}

TEST_CASE("verification of K7 alone") {
  MultiGraph k7[] = {complete_graph(7)};
  auto r = verify_excluded_minors(family_closure(k7, {false, false}));
  REQUIRE(r.members.size() == 1);
  REQUIRE(r.members[0].minors.size() == 2);
  CHECK(are_isomorphic(r.members[0].minors[1].step.graph, complete_graph(6)));
  CHECK(r.counterexamples == 0);
}

TEST_CASE("empty family and counterexamples") {
  auto empty = verify_excluded_minors(FamilyClosure{});
  CHECK(empty.members.empty());
  CHECK_FALSE(empty.counterexample_found());
  CHECK(empty.exit_code() == 0);

  // Both one-step minors of K9 keep a K6 after removing any two vertices.
  MultiGraph k9[] = {complete_graph(9)};
  auto r = verify_excluded_minors(family_closure(k9, {false, false}), {2, false});
  CHECK(r.counterexamples == 2);
  CHECK(r.exit_code() == 2);
  auto md = report_markdown(r);
  CHECK(md.find("Counterexample found!") != std::string::npos);
  CHECK(md.find("No counterexample found!") == std::string::npos);
  CHECK(report_json(r)["summary"]["counterexample_found"] == true);
}

TEST_CASE("reports are deterministic and independent of worker count") {
  const auto& a = heawood_report();
  auto b = verify_excluded_minors(heawood_family(), {1, false});
  auto ja = report_json(a), jb = report_json(b);
  // auxiliary flags differ by configuration; compare the certification part
  for (auto* j : {&ja, &jb}) {
    for (auto& m : (*j)["members"]) {
      m.erase("nonplanar");
      m.erase("petersen_minor");
    }
  }
  CHECK(ja.dump() == jb.dump());

  auto dir = std::filesystem::temp_directory_path() / "minorforge_verify_test";
  std::filesystem::create_directories(dir);
  emit_report(a, ReportFormat::Json, dir / "a.json");
  emit_report(a, ReportFormat::Json, dir / "b.json");
  emit_report(a, ReportFormat::Markdown, dir / "a.md");
  CHECK(slurp(dir / "a.json") == slurp(dir / "b.json"));
  auto parsed = nlohmann::json::parse(slurp(dir / "a.json"));
  CHECK(parsed["summary"]["members"] == 78);
  CHECK(parsed["members"][0]["minors"][0].contains("apex_pair"));
  CHECK(slurp(dir / "a.md").find("No counterexample found!") != std::string::npos);
  CHECK_THROWS_AS(emit_report(a, ReportFormat::Json, dir / "missing" / "x.json"), std::runtime_error);
  std::filesystem::remove_all(dir);
}

TEST_CASE("hand proof cross-checks") {
  auto rep = crosscheck_hand_proofs(remaining_heawood());
  for (const auto& c : rep.checks) CHECK_MESSAGE(c.passed, c.name << ": expected " << c.expected << ", got " << c.actual);
  CHECK(rep.all_passed());
  CHECK(rep.checks.size() >= 10);

  auto broken = remaining_heawood();
  broken.pop_back();
  CHECK_FALSE(crosscheck_hand_proofs(broken).all_passed());
}

TEST_CASE("locally linkless sweep") {
  MultiGraph gens[] = {complete_graph(7), complete_multipartite({3, 3, 1, 1}), complete_graph(6)};
  auto f = family_closure(gens, {false, false});
  auto sweep = locally_linkless_sweep(f);
  REQUIRE(sweep.size() == 2);
  for (const auto& e : sweep) {
    const auto* m = f.find(e.cert);
    REQUIRE(m != nullptr);
    if (are_isomorphic(m->graph, complete_graph(7))) {
      CHECK(e.failing_vertices.size() == 7);
    } else {
      CHECK(are_isomorphic(m->graph, complete_multipartite({3, 3, 1, 1})));
      CHECK(e.failing_vertices.size() == 2);
      for (auto v : e.failing_vertices) CHECK(m->graph.degree(v) == 7);
    }
  }
}
