#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <algorithm>
#include <set>

#include "homquot/corpus.hpp"
#include "homquot/errors.hpp"
#include "homquot/harness.hpp"

using namespace homquot;

namespace {

const std::vector<CorpusInstance>& curated_cache() {
  static const std::vector<CorpusInstance> c = curated();
  return c;
}

const CorpusInstance& named(const std::string& name) {
  for (const CorpusInstance& c : curated_cache())
    if (c.name == name) return c;
  FAIL("no curated instance called ", name);
  throw Error("unreachable");
}

Ctx desk() { return Ctx{}; }

}  // namespace

TEST_CASE("registry lists every numbered statement once, in order") {
  const std::vector<std::string> want = {
      "R2.9", "P2.10", "P2.11", "P3.1",  "P3.3",  "P3.6",  "P3.8",
      "L3.9", "T3.10", "P3.11", "P3.13", "T4.4",  "L4.5",  "P4.6",
      "P4.8", "L5.1",  "L5.2",  "L5.3",  "L5.4",  "L5.5",  "L5.6",
      "C5.7", "L5.8",  "P5.9",  "T5.11", "R5.12", "L6.1",  "L6.2",
      "C6.3", "C6.4",  "L6.5",  "P6.7",  "C6.8"};
  const auto& reg = check_registry();
  REQUIRE(reg.size() == want.size());
  for (std::size_t i = 0; i < want.size(); ++i) {
    CHECK(reg[i].id == want[i]);
    CHECK(!reg[i].anchor.empty());
  }
  CHECK(find_check("T3.10").shape == Shape::Extension);
  CHECK(find_check("R2.9").shape == Shape::Algebra);
  CHECK(find_check("L5.3").shape == Shape::ExtensionIdeal);
  CHECK_THROWS_AS((void)find_check("T9.99"), Error);
}

TEST_CASE("R2.9 passes on the semiprime classic") {
  CheckResult r = run_check("R2.9", named("sl2_gf5"), desk());
  CHECK(r.outcome == Outcome::Pass);
}

TEST_CASE("R2.9 passes vacuously on a degenerate table") {
  // neither nondegenerate nor semiprime: both implications hold emptily
  CheckResult r = run_check("R2.9", named("ex2_5"), desk());
  CHECK(r.outcome == Outcome::Pass);
}

TEST_CASE("rational instances fall out as not applicable") {
  CheckResult r = run_check("R2.9", named("sl2_Q"), desk());
  CHECK(r.outcome == Outcome::NotApplicable);
  CHECK(r.detail.find("rational") != std::string::npos);
}

TEST_CASE("the identity checks hold over the rationals too") {
  CHECK(run_check("L5.2", named("sl2_Q"), desk()).outcome == Outcome::Pass);
  CHECK(run_check("L5.5", named("sl2_Q"), desk()).outcome == Outcome::Pass);
  CHECK(run_check("L5.2", named("ex2_5"), desk()).outcome == Outcome::Pass);
  CHECK(run_check("L5.5", named("ex2_5"), desk()).outcome == Outcome::Pass);
}

TEST_CASE("equivalence checks pass when both sides are false") {
  // the Borel pair is weak but not a quotient and not ideally absorbed;
  // T3.10 must certify that the two failures agree
  CheckResult r = run_check("T3.10", named("borel_in_sl2"), desk());
  CHECK(r.outcome == Outcome::Pass);
  CheckResult s = run_check("T3.10", named("sl2_gf5_self"), desk());
  CHECK(s.outcome == Outcome::Pass);
}

TEST_CASE("annihilator micro-facts across sections") {
  const CorpusInstance& self = named("sl2_gf5_self");
  for (const char* id : {"P2.10", "P2.11", "P3.1", "P3.3", "P3.6", "P3.8",
                         "L3.9", "P3.11", "L5.1", "L5.3", "L5.4", "L5.8"})
    CHECK_MESSAGE(run_check(id, self, desk()).outcome == Outcome::Pass, id);
}

TEST_CASE("quotient-gated checks report the blocking hypothesis") {
  // the Borel pair is not a quotient algebra, so P3.13 cannot run
  CheckResult r = run_check("P3.13", named("borel_in_sl2"), desk());
  CHECK(r.outcome == Outcome::NotApplicable);
  CHECK(r.detail.find("quotient") != std::string::npos);
  // on the self extension every hypothesis holds and I = L is the only
  // essential ideal, so the quantifier is exercised rather than vacuous
  CheckResult s = run_check("P3.13", named("sl2_gf5_self"), desk());
  CHECK(s.outcome == Outcome::Pass);
}

TEST_CASE("section five operator checks pass on the self extension") {
  const CorpusInstance& self = named("sl2_gf5_self");
  for (const char* id : {"L5.6", "C5.7", "P5.9", "T5.11", "R5.12"})
    CHECK_MESSAGE(run_check(id, self, desk()).outcome == Outcome::Pass, id);
}

TEST_CASE("section six checks pass on the dense degenerate pair") {
  const CorpusInstance& heis = named("heisenberg_alpha0");
  for (const char* id : {"L6.1", "L6.2", "C6.3"})
    CHECK_MESSAGE(run_check(id, heis, desk()).outcome == Outcome::Pass, id);
  // Q is the Heisenberg algebra with zero twist: not semiprime, so the
  // downstream corollaries must step aside rather than guess
  CheckResult r = run_check("C6.4", heis, desk());
  CHECK(r.outcome == Outcome::NotApplicable);
  const CorpusInstance& self = named("sl2_gf5_self");
  for (const char* id : {"L6.1", "L6.2", "C6.3", "C6.4", "L6.5", "P6.7",
                         "C6.8"})
    CHECK_MESSAGE(run_check(id, self, desk()).outcome == Outcome::Pass, id);
}

TEST_CASE("maximal-quotient checks run on both base fields") {
  for (const char* name : {"sl2_gf5", "sl2_Q", "sl2sl2_gf5"})
    for (const char* id : {"T4.4", "L4.5", "P4.8"}) {
      CheckResult r = run_check(id, named(name), desk());
      CHECK_MESSAGE(r.outcome == Outcome::Pass, name, "/", id);
    }
  CHECK(run_check("P4.6", named("sl2_gf5"), desk()).outcome == Outcome::Pass);
  // over the rationals semiprimeness of the carrier is not decidable by
  // scanning, so P4.6 lands on Unknown rather than a false claim
  CheckResult q = run_check("P4.6", named("sl2_Q"), desk());
  CHECK(q.outcome == Outcome::Unknown);
  // degenerate tables are filtered by the hypothesis gate
  CheckResult d = run_check("T4.4", named("ex2_5"), desk());
  CHECK(d.outcome == Outcome::NotApplicable);
}

TEST_CASE("extension checks refuse bare algebras by shape") {
  CHECK_THROWS_AS(run_check("T3.10", named("sl2_gf5"), desk()),
                  PreconditionFailed);
}

TEST_CASE("run_suite over the curated corpus has zero failures") {
  HarnessReport rep = run_suite(curated_cache(), {}, desk());
  CHECK(rep.total_fail() == 0);
  CHECK(rep.rows.size() == check_registry().size());
  CHECK(rep.instances == curated_cache().size());
  // NA transparency: every skipped instance is accounted for with a reason
  for (const CheckRow& row : rep.rows) {
    std::size_t reasons = 0;
    for (const auto& [k, v] : row.na_reasons) reasons += v;
    CHECK(row.not_applicable + row.unknown == reasons);
    if (row.shape == Shape::Algebra)
      CHECK(row.evaluated() == rep.instances);
  }
}

TEST_CASE("an empty corpus yields empty rows, not failures") {
  HarnessReport rep = run_suite({}, {}, desk());
  CHECK(rep.total_fail() == 0);
  CHECK(rep.instances == 0);
  for (const CheckRow& row : rep.rows) CHECK(row.evaluated() == 0);
}

TEST_CASE("a filter narrows the report to the named rows") {
  HarnessReport rep = run_suite(curated_cache(), {"T3.10"}, desk());
  REQUIRE(rep.rows.size() == 1);
  CHECK(rep.rows[0].id == "T3.10");
  CHECK(rep.rows[0].pass >= 2);
  CHECK_THROWS_AS(run_suite(curated_cache(), {"T0.0"}, desk()), Error);
}

TEST_CASE("reports are byte-identical across job counts") {
  Ctx one = desk();
  one.jobs = 1;
  Ctx eight = desk();
  eight.jobs = 8;
  HarnessReport a = run_suite(curated_cache(), {}, one);
  HarnessReport b = run_suite(curated_cache(), {}, eight);
  CHECK(dump_json(a.to_json()) == dump_json(b.to_json()));
}

TEST_CASE("the fingerprint tracks corpus identity") {
  Json a = corpus_fingerprint(curated_cache());
  CHECK(a.at("instances").get<std::size_t>() == curated_cache().size());
  std::vector<CorpusInstance> perturbed = curated_cache();
  std::swap(perturbed[0], perturbed[1]);
  Json b = corpus_fingerprint(perturbed);
  CHECK(a.at("digest") != b.at("digest"));
  CHECK(a.at("instances") == b.at("instances"));
}

TEST_CASE("failure documents replay on their own") {
  // a deliberately false property produces the failure document; the
  // reporting machinery must make it self-contained
  PropertyCheck bogus = find_check("R2.9");
  bogus.property = [](EvalCache& ev, const Ctx&) -> CheckResult {
    Json cert;
    cert["dim"] = ev.algebra().dim();
    return CheckResult{Outcome::Fail, "forced for the replay test", cert};
  };
  const CorpusInstance& inst = named("sl2_gf5");
  EvalCache ev(inst);
  CheckResult r = evaluate_check(bogus, ev, desk());
  REQUIRE(r.outcome == Outcome::Fail);
  REQUIRE(r.witness.has_value());
  const Json& doc = *r.witness;
  CHECK(doc.at("check") == "R2.9");
  CHECK(doc.at("instance").at("name") == "sl2_gf5");
  CHECK(doc.at("certificate").at("dim") == 3);
  // replaying the real R2.9 against the embedded instance succeeds,
  // which proves the document carries a complete instance
  CheckResult replay = reproduce_failure(doc, desk());
  CHECK(replay.outcome == Outcome::Pass);
}

TEST_CASE("failure replay reconstructs extensions too") {
  PropertyCheck bogus = find_check("T3.10");
  bogus.property = [](EvalCache&, const Ctx&) -> CheckResult {
    return CheckResult{Outcome::Fail, "forced", Json::object()};
  };
  const CorpusInstance& inst = named("borel_in_sl2");
  EvalCache ev(inst);
  CheckResult r = evaluate_check(bogus, ev, desk());
  REQUIRE(r.witness.has_value());
  CheckResult replay = reproduce_failure(*r.witness, desk());
  CHECK(replay.outcome == Outcome::Pass);
  CHECK_THROWS_AS(reproduce_failure(Json::object(), desk()), ParseError);
}

TEST_CASE("report json carries anchors, counts and totals") {
  HarnessReport rep = run_suite(curated_cache(), {"R2.9", "T3.10"}, desk());
  Json j = rep.to_json();
  REQUIRE(j.at("checks").size() == 2);
  CHECK(j.at("checks")[0].at("id") == "R2.9");
  CHECK(j.at("checks")[0].at("anchor").get<std::string>().find(
            "nondegenerate") != std::string::npos);
  CHECK(j.at("totals").at("fail") == 0);
  CHECK(j.at("fingerprint").at("instances") ==
        curated_cache().size());
}
