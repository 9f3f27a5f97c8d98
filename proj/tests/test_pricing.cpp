#include <doctest.h>

#include <cmath>
#include <random>
#include <vector>

#include "cyberquote/erd.hpp"
#include "cyberquote/error.hpp"
#include "cyberquote/cli.hpp"
#include "cyberquote/pricing.hpp"
#include "test_support.hpp"

using namespace cyberquote;
using namespace cyberquote::pricing;

namespace {

LayerEconomics retail_econ(int layer) {
  const double v[] = {0.05, 0.02, 0.01};
  const std::int64_t limit[] = {100000, 200000, 300000};
  LayerEconomics e;
  e.layer = layer_from_index(layer);
  e.v = v[layer - 1];
  e.alpha = e.beta = e.gamma = 1.0;
  e.lambda_c = Money::from_cents(limit[layer - 1] * 100);
  e.lambda_s = Money{};
  e.kappa = e.lambda_c;
  return e;
}

MuRecord retail_mu(int layer) {
  const double x[] = {0.5, 0.6, 0.7};
  MuRecord m;
  m.layer = layer_from_index(layer);
  m.p_bar = m.o = m.m = x[layer - 1];
  return m;
}

const std::vector<Scenario> kPoint = {{1.0, 0.0, 1.0}};

}  // namespace

TEST_SUITE("pricing") {
  TEST_CASE("Gordon-Loeb breach function") {
    CHECK(gordon_loeb_sbf(0.0, 0.05, 1, 1) == 0.05);
    CHECK(gordon_loeb_sbf(0.5, 0.05, 1, 1) == doctest::Approx(0.0333333333333).epsilon(1e-12));
    CHECK(gordon_loeb_sbf(1.0, 0.2, 2, 2) == doctest::Approx(0.2 / 9.0));
    CHECK_THROWS_AS(gordon_loeb_sbf(-0.1, 0.05, 1, 1), DomainError);
  }

  TEST_CASE("retail layer oracle values") {
    const double pi[] = {0.0333333333, 0.0125, 0.00588235294};
    const std::int64_t loss[] = {6666667, 12500000, 17647059};
    const std::int64_t premium[] = {222222, 156250, 103806};
    const double rate[] = {0.0444444, 0.0130208, 0.00494315};
    for (int l = 1; l <= 3; ++l) {
      CAPTURE(l);
      const auto p = price_layer(retail_econ(l), retail_mu(l), kPoint, UtilitySpec::linear());
      CHECK(p.pi == doctest::Approx(pi[l - 1]).epsilon(1e-9));
      CHECK(p.expected_loss.cents() == loss[l - 1]);
      CHECK(p.premium.cents() == premium[l - 1]);
      REQUIRE(p.rate.has_value());
      CHECK(*p.rate == doctest::Approx(rate[l - 1]).epsilon(1e-5));
    }
  }

  TEST_CASE("CARA premium and utility") {
    const auto cara = UtilitySpec::cara(1e-5);
    const auto p = price_layer(retail_econ(1), retail_mu(1), kPoint, cara);
    CHECK(p.premium_exact == doctest::Approx(3110.240335).epsilon(1e-8));
    CHECK(p.premium.cents() == 311024);
    CHECK(utility_value(cara, 66666.67) == doctest::Approx(48658.2898).epsilon(1e-9));
    CHECK(utility_value(cara, 0.0) == 0.0);
    CHECK(utility_value(UtilitySpec::linear(), 12.5) == 12.5);
    CHECK_THROWS_AS(UtilitySpec::cara(0.0), ValidationError);
    CHECK_THROWS_AS(UtilitySpec::cara(-1.0), ValidationError);
  }

  TEST_CASE("risk aversion of CARA utility") {
    for (double a : {1e-6, 1e-5, 1e-3}) {
      CHECK(risk_aversion_check(UtilitySpec::cara(a)) < 1e-3);
    }
    CHECK_THROWS_AS(risk_aversion_check(UtilitySpec::linear()), DomainError);
  }

  TEST_CASE("utility spec parsing") {
    CHECK(parse_utility("linear").kind == UtilitySpec::Kind::linear);
    CHECK(parse_utility("kind=linear").kind == UtilitySpec::Kind::linear);
    const auto c = parse_utility("cara,a=1e-5");
    CHECK(c.kind == UtilitySpec::Kind::cara);
    CHECK(c.a == 1e-5);
    CHECK(parse_utility("kind=cara,a=0.001").a == 0.001);
    CHECK(to_string(c) == "kind=cara,a=1e-05");
    CHECK(parse_utility(to_string(c)).a == c.a);
    CHECK_THROWS_AS(parse_utility("cara"), FormatError);
    CHECK_THROWS_AS(parse_utility("exotic"), FormatError);
    CHECK_THROWS(parse_utility("cara,a=-1"));
  }

  TEST_CASE("scenario normalization") {
    std::vector<Scenario> s = {{1, 0, 2}, {0.5, 0.5, 6}};
    CHECK(normalize_scenarios(s, false).empty());
    CHECK(s[0].weight == doctest::Approx(0.25));
    std::vector<Scenario> neg = {{-0.5, 0, 1}};
    CHECK(normalize_scenarios(neg, false).size() == 1);
    CHECK_THROWS_AS(normalize_scenarios(neg, true), ValidationError);
    std::vector<Scenario> bad = {{1.5, 0, 1}};
    CHECK_THROWS_AS(normalize_scenarios(bad, false), ValidationError);
    std::vector<Scenario> zero = {{1, 0, 0}};
    CHECK_THROWS_AS(normalize_scenarios(zero, false), ValidationError);
    std::vector<Scenario> empty;
    CHECK_THROWS_AS(normalize_scenarios(empty, false), ValidationError);
  }

  TEST_CASE("expected loss weights scenarios") {
    const std::vector<Scenario> s = {{1, 0, 1}, {0, 0, 1}};
    CHECK(expected_loss(retail_econ(1), retail_mu(1), s).cents() == 3333334);
    auto e = retail_econ(1);
    e.lambda_s = Money::from_cents(5000000);
    CHECK(layer_loss(e, retail_mu(1), {0.5, 1.0, 1}).cents() == 6666667);
  }

  TEST_CASE("bisection agrees with the closed form") {
    std::mt19937_64 rng(3);
    std::uniform_real_distribution<double> u(0, 1);
    for (int i = 0; i < 200; ++i) {
      std::vector<double> losses, weights;
      const int n = 1 + static_cast<int>(u(rng) * 5);
      for (int k = 0; k < n; ++k) {
        losses.push_back(std::round(u(rng) * 1e7) / 100.0);
        weights.push_back(1.0 / n);
      }
      const double pi = u(rng) * 0.5;
      for (const auto& spec : {UtilitySpec::linear(), UtilitySpec::cara(1e-5)}) {
        const double cf = indifference_premium(pi, losses, weights, spec);
        const double bi = indifference_premium(pi, losses, weights, spec, SolveMethod::bisection);
        CHECK(bi == doctest::Approx(cf).epsilon(1e-9));
      }
    }
  }

  TEST_CASE("solver guards") {
    const std::vector<double> l = {1e8};
    const std::vector<double> w = {1.0};
    CHECK_THROWS_AS(indifference_premium(0.1, l, w, UtilitySpec::cara(1e-5)), NumericalError);
    CHECK_THROWS_AS(indifference_premium(1.5, l, w, UtilitySpec::linear()), DomainError);
    CHECK_THROWS_AS((indifference_premium(0.1, {}, {}, UtilitySpec::linear())), ValidationError);
    CHECK(indifference_premium(0.0, l, w, UtilitySpec::cara(1e-9)) == 0.0);
  }

  TEST_CASE("zero effective limit") {
    auto mu = retail_mu(1);
    mu.m = 0.0;
    CHECK_THROWS_AS(price_layer(retail_econ(1), mu, kPoint, UtilitySpec::linear()),
                    UninsurableLayerError);
    const std::vector<Scenario> none = {{0, 0, 1}};
    const auto p = price_layer(retail_econ(1), mu, none, UtilitySpec::linear());
    CHECK(p.premium.cents() == 0);
    CHECK(p.rate == 0.0);
  }

  TEST_CASE("coverage constraint") {
    auto mu = retail_mu(1);
    CHECK(check_coverage_constraint(retail_econ(1), mu).at(0).severity == Issue::Severity::warning);
    CHECK(check_coverage_constraint(retail_econ(1), mu, true).at(0).severity ==
          Issue::Severity::error);
    mu.m = 1.0;
    CHECK(check_coverage_constraint(retail_econ(1), mu).empty());
  }

  TEST_CASE("economics validation") {
    auto e = retail_econ(1);
    e.v = 1.5;
    CHECK_THROWS_AS(e.validate(), ValidationError);
    e = retail_econ(1);
    e.alpha = -1;
    CHECK_THROWS_AS(e.validate(), ValidationError);
    e = retail_econ(1);
    e.kappa = Money::from_cents(-1);
    CHECK_THROWS_AS(e.validate(), ValidationError);
  }

  TEST_CASE("full quote of the retail example") {
    const auto org = erd::parse_org(test_support::data_file("retail.org"));
    const auto spec = maturity::load_maturity_model(cli::builtin_model_text());
    std::vector<LayerInputs> in;
    for (int l = 3; l >= 1; --l) {
      in.push_back({maturity::parse_assessment(test_support::data_file(
                        "retail-l" + std::to_string(l) + ".csv")),
                    retail_econ(l), kPoint});
    }
    const auto q = quote(org, spec, in, UtilitySpec::linear());
    REQUIRE(q.layers.size() == 3);
    CHECK(q.layers[0].layer == Layer::operations);
    CHECK(q.total_premium.cents() == 482278);
    CHECK_FALSE(q.has_errors());
    CHECK(q.issues.size() == 3);
    const auto strict = quote(org, spec, in, UtilitySpec::linear(), {0, true});
    CHECK(strict.has_errors());

    in.pop_back();
    CHECK_THROWS_AS(quote(org, spec, in, UtilitySpec::linear()), ValidationError);
  }

  TEST_CASE("degradation beyond the intended state") {
    const auto org = erd::parse_org(test_support::data_file("retail.org"));
    const auto spec = maturity::load_maturity_model(cli::builtin_model_text());
    std::vector<LayerInputs> in;
    for (int l = 1; l <= 3; ++l) {
      auto e = retail_econ(l);
      e.c_bar = 0.5;
      in.push_back({maturity::parse_assessment(test_support::data_file(
                        "retail-l" + std::to_string(l) + ".csv")),
                    e, kPoint});
    }
    const auto q = quote(org, spec, in, UtilitySpec::linear());
    int flagged = 0;
    for (const auto& i : q.issues) flagged += i.code == "delta-exceeds-intended-state";
    CHECK(flagged == 3);
    CHECK_THROWS_AS((quote(org, spec, in, UtilitySpec::linear(), {0, true})), ValidationError);
  }
}
