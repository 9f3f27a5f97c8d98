#include <doctest.h>

#include "cyberquote/cli.hpp"
#include "cyberquote/error.hpp"
#include "cyberquote/maturity.hpp"
#include "test_support.hpp"

using namespace cyberquote;
using namespace cyberquote::maturity;

namespace {

const MaturityModelSpec& cmmc() {
  static const MaturityModelSpec spec = load_maturity_model(cli::builtin_model_text());
  return spec;
}

const char* kSmallModel =
    "# levels: 2\n"
    "id,domain,level,description\n"
    "A1,A,1,first\n"
    "A2,A,1,second\n"
    "B1,B,1,third\n"
    "B2,B,2,fourth\n";

LayerAssessment with_status(std::initializer_list<std::pair<const char*, int>> rows) {
  LayerAssessment a;
  for (const auto& [id, v] : rows) a.practice_status[id] = practice_status_from_int(v);
  return a;
}

}  // namespace

TEST_SUITE("maturity") {
  TEST_CASE("CMMC practice counts per level and domain") {
    const auto& spec = cmmc();
    CHECK(spec.num_levels == 3);
    CHECK(spec.domains.size() == 14);
    CHECK(spec.practices.size() == 110);
    CHECK(spec.count_practices(1) == 17);
    CHECK(spec.count_practices(1, "AC") == 4);
    CHECK(spec.count_practices(2) == 93);
    CHECK(spec.count_practices(2, "AC") == 18);
    CHECK(spec.count_practices(1, "SI") == 4);
    CHECK(spec.count_practices(3) == 0);
    const auto* p = spec.find_practice("AC.L1-3.1.22");
    REQUIRE(p != nullptr);
    CHECK(p->domain_code == "AC");
    CHECK(p->level == 1);
    CHECK(spec.find_domain("SC")->name == "System and Communications Protection");
  }

  TEST_CASE("per-domain totals") {
    const auto& spec = cmmc();
    const std::pair<const char*, std::size_t> totals[] = {
        {"AC", 22}, {"AT", 3}, {"AU", 9}, {"CM", 9}, {"IA", 11}, {"IR", 3}, {"MA", 6},
        {"MP", 9},  {"PS", 2}, {"PE", 6}, {"RA", 3}, {"CA", 4},  {"SC", 16}, {"SI", 7}};
    for (const auto& [code, n] : totals) {
      CAPTURE(code);
      CHECK(spec.count_practices(1, code) + spec.count_practices(2, code) == n);
    }
  }

  TEST_CASE("model loader errors") {
    CHECK_THROWS_AS(load_maturity_model("id,domain\nA,B\n"), FormatError);
    CHECK_THROWS_AS(load_maturity_model("id,domain,level,description\nA,X,1,d\nA,X,1,d\n"),
                    FormatError);
    CHECK_THROWS_AS(load_maturity_model("# levels: 1\nid,domain,level,description\nA,X,2,d\n"),
                    FormatError);
    CHECK_THROWS_AS(
        load_maturity_model("# domain: X,Ex\nid,domain,level,description\nA,Y,1,d\n"),
        FormatError);
    const auto derived = load_maturity_model(kSmallModel);
    CHECK(derived.domains.size() == 2);
    CHECK(derived.domains[0].code == "A");
  }

  TEST_CASE("assessment parsing") {
    const auto a = parse_assessment(test_support::data_file("retail-l1.csv"));
    CHECK(a.layer == Layer::operations);
    CHECK(a.role == AssessmentRole::underwriter);
    CHECK(a.maturity_override == 0.5);
    CHECK(a.practice_status.size() == 10);
    CHECK(a.status_of("IR.L2-3.6.3") == PracticeStatus::not_met);
    CHECK(a.status_of("AU.L2-3.3.1") == PracticeStatus::not_relevant);
    CHECK(a.weight_of("AC") == 1.0);
    CHECK(a.weight_of("ZZ") == 1.0);
    CHECK(a.objectives.size() == 2);
    CHECK(parse_assessment(test_support::data_file("retail-l1-adjuster.csv")).role ==
          AssessmentRole::adjuster);
  }

  TEST_CASE("assessment parse errors") {
    CHECK_THROWS_AS(parse_assessment("[practice_status]\nA,1\n"), FormatError);
    CHECK_THROWS_AS(parse_assessment("[assessment]\nlayer,1\n[practice_status]\nA,2\n"),
                    FormatError);
    CHECK_THROWS_AS(parse_assessment("[assessment]\nlayer,1\n[bogus]\n"), FormatError);
    CHECK_THROWS_AS(parse_assessment("layer,1\n"), FormatError);
    CHECK_THROWS(parse_assessment("[assessment]\nlayer,7\n"));
  }

  TEST_CASE("validation against the model") {
    const auto spec = load_maturity_model(kSmallModel);
    auto a = with_status({{"A1", 1}, {"Q9", 1}});
    CHECK_THROWS_AS(validate_assessment(a, spec), UnknownPracticeError);
    a = with_status({{"A1", 1}});
    a.domain_weights["A"] = 1.5;
    CHECK_THROWS_AS(validate_assessment(a, spec), ValidationError);
    a.domain_weights = {{"Z", 0.5}};
    CHECK_THROWS_AS(validate_assessment(a, spec), ValidationError);
    a.domain_weights.clear();
    a.objectives = {{"C1", -0.1}};
    CHECK_THROWS_AS(validate_assessment(a, spec), ValidationError);
  }

  TEST_CASE("practice score") {
    const auto spec = load_maturity_model(kSmallModel);
    auto a = with_status({{"A1", 1}, {"A2", -1}, {"B1", 1}, {"B2", -1}});
    CHECK(practice_score(a, spec, 2) == doctest::Approx(0.5));
    CHECK(practice_score(a, spec, 1) == doctest::Approx(2.0 / 3.0));
    a.domain_weights["B"] = 0.0;
    CHECK(practice_score(a, spec, 2) == doctest::Approx(0.5));
    a.domain_weights["A"] = 0.0;
    Warnings w;
    CHECK(practice_score(a, spec, 2, &w) == 0.0);
    CHECK(w.at(0).rfind("zero-weight", 0) == 0);
    Warnings none;
    CHECK(practice_score(LayerAssessment{}, spec, 2, &none) == 0.0);
    CHECK(none.at(0).rfind("no-relevant-practices", 0) == 0);
  }

  TEST_CASE("retail assessments give the worked-example inputs") {
    const double expected[] = {0.5, 0.6, 0.7};
    const char* files[] = {"retail-l1.csv", "retail-l2.csv", "retail-l3.csv"};
    for (int i = 0; i < 3; ++i) {
      const auto a = parse_assessment(test_support::data_file(files[i]));
      const auto r = mu(a, cmmc(), 3);
      CHECK(r.p_bar == doctest::Approx(expected[i]).epsilon(1e-15));
      CHECK(r.o == doctest::Approx(expected[i]).epsilon(1e-15));
      CHECK(r.m == expected[i]);
    }
  }

  TEST_CASE("objective score") {
    LayerAssessment a;
    Warnings w;
    CHECK(objective_score(a, &w) == 0.0);
    CHECK(w.size() == 1);
    a.objectives = {{"C1", 0.2}, {"S1", 0.6}, {"S2", 1.0}};
    CHECK(objective_score(a) == doctest::Approx(0.6));
  }

  TEST_CASE("maturity level") {
    const auto spec = load_maturity_model(kSmallModel);
    CHECK(level_achieved(with_status({{"A1", 1}, {"A2", 1}, {"B1", 1}, {"B2", 1}}), spec) == 2);
    CHECK(level_achieved(with_status({{"A1", 1}, {"B2", -1}}), spec) == 1);
    CHECK(level_achieved(with_status({{"A1", -1}, {"B2", 1}}), spec) == 0);
    Warnings w;
    CHECK(level_achieved(with_status({{"A1", 1}}), spec, &w) == 2);
    CHECK(w.size() == 1);
    CHECK(normalize_maturity(1, 3) == doctest::Approx(1.0 / 3.0));
    CHECK(normalize_maturity(0, 3) == 0.0);
    CHECK_THROWS_AS(normalize_maturity(4, 3), DomainError);
    CHECK_THROWS_AS(normalize_maturity(1, 0), DomainError);
  }

  TEST_CASE("mu uses the level structure unless overridden") {
    const auto spec = load_maturity_model(kSmallModel);
    auto a = with_status({{"A1", 1}, {"A2", 1}, {"B1", 1}, {"B2", -1}});
    auto r = mu(a, spec, 2);
    CHECK(r.m == doctest::Approx(0.5));
    CHECK(r.domain_coverage.at("A") == 1.0);
    CHECK(r.domain_coverage.at("B") == 0.5);
    a.maturity_override = 0.9;
    CHECK(mu(a, spec, 2).m == 0.9);
    CHECK_THROWS_AS(mu(a, spec, 3), DomainError);
    CHECK_THROWS_AS(mu(a, spec, 0), DomainError);
  }

  TEST_CASE("payroll assessments") {
    const auto a = parse_assessment(test_support::data_file("payroll-l2.csv"));
    const auto r = mu(a, cmmc(), 3);
    CHECK(r.m == doctest::Approx(1.0 / 3.0));
    CHECK(r.p_bar == doctest::Approx(8.0 / 9.0));
  }

  TEST_CASE("failing a practice") {
    const auto a = with_status({{"A1", 1}});
    CHECK(with_practice_failed(a, "A1").status_of("A1") == PracticeStatus::not_met);
    CHECK(with_practice_failed(a, "B1").practice_status.size() == 1);
  }

  TEST_CASE("objective breakdown") {
    const auto matrix =
        load_domain_objective_matrix(test_support::data_file("retail-domain-objective-matrix.csv"));
    CHECK(matrix.objectives == std::vector<std::string>{"C1", "C2", "C3", "S1", "S2"});
    const auto a = parse_assessment(test_support::data_file("retail-l1.csv"));
    const auto r = mu(a, cmmc(), 3);
    const auto b = objective_breakdown(r, matrix, a);
    REQUIRE(b.size() == 5);
    CHECK(b[0].objective == "C1");
    CHECK(*b[0].coverage == doctest::Approx(2.0 / 3.0));
    CHECK(*b[3].coverage == doctest::Approx((2.0 / 3.0 + 0.0) / 2.0));
    CHECK_THROWS_AS(load_domain_objective_matrix("X,C1\nA,1\n"), FormatError);
    CHECK_THROWS_AS(load_domain_objective_matrix("Domain,C1\nA,2\n"), FormatError);
  }
}
