#include <doctest.h>

#include <cmath>

#include "cyberquote/distributions.hpp"
#include "cyberquote/error.hpp"

using namespace cyberquote;
using namespace cyberquote::sim;

namespace {

double sample_mean(const DistributionSpec& d, int n, double* var = nullptr) {
  double sum = 0.0, sq = 0.0;
  for (int k = 0; k < n; ++k) {
    rng::Substream s(99, 0, static_cast<std::uint64_t>(k));
    const double x = sample(d, s);
    sum += x;
    sq += x * x;
  }
  const double mean = sum / n;
  if (var) *var = sq / n - mean * mean;
  return mean;
}

}  // namespace

TEST_SUITE("distributions") {
  TEST_CASE("parse and print") {
    CHECK(parse_distribution("point(1)") == DistributionSpec::point(1));
    CHECK(parse_distribution(" uniform( 0.2 , 0.4 ) ") == DistributionSpec::uniform(0.2, 0.4));
    CHECK(parse_distribution("beta(2,2)") == DistributionSpec::beta(2, 2));
    CHECK(to_string(DistributionSpec::uniform(0, 1)) == "uniform(0,1)");
    CHECK(parse_distribution(to_string(DistributionSpec::beta(0.5, 3))) ==
          DistributionSpec::beta(0.5, 3));
    CHECK_THROWS_AS(parse_distribution("normal(0,1)"), FormatError);
    CHECK_THROWS_AS(parse_distribution("point(1"), FormatError);
    CHECK_THROWS_AS(parse_distribution("uniform(1)"), FormatError);
  }

  TEST_CASE("parameter bounds") {
    CHECK_THROWS_AS(DistributionSpec::point(1.5).validate(), ValidationError);
    CHECK_THROWS_AS(DistributionSpec::uniform(0.6, 0.4).validate(), ValidationError);
    CHECK_THROWS_AS(DistributionSpec::uniform(-0.1, 0.4).validate(), ValidationError);
    CHECK_THROWS_AS(DistributionSpec::beta(0, 1).validate(), ValidationError);
    CHECK_NOTHROW(DistributionSpec::uniform(0.3, 0.3).validate());
    try {
      DistributionSpec::beta(-1, 1).validate();
    } catch (const ValidationError& e) {
      CHECK(std::string(e.what()).find("invalid-distribution") != std::string::npos);
    }
  }

  TEST_CASE("means") {
    CHECK(DistributionSpec::beta(2, 6).mean() == doctest::Approx(0.25));
    CHECK(DistributionSpec::uniform(0.2, 0.4).mean() == doctest::Approx(0.3));
  }

  TEST_CASE("point is exact") {
    rng::Substream s(1, 0, 0);
    CHECK(sample(DistributionSpec::point(0.7), s) == 0.7);
  }

  TEST_CASE("sample moments") {
    double var = 0.0;
    CHECK(std::fabs(sample_mean(DistributionSpec::uniform(0, 1), 200000, &var) - 0.5) < 0.005);
    CHECK(var == doctest::Approx(1.0 / 12.0).epsilon(0.02));
    CHECK(std::fabs(sample_mean(DistributionSpec::beta(2, 2), 200000, &var) - 0.5) < 0.005);
    CHECK(var == doctest::Approx(0.05).epsilon(0.02));
    CHECK(std::fabs(sample_mean(DistributionSpec::beta(0.5, 0.5), 200000) - 0.5) < 0.005);
    CHECK(std::fabs(sample_mean(DistributionSpec::beta(2, 6), 200000) - 0.25) < 0.005);
  }

  TEST_CASE("beta draws stay in the unit interval") {
    for (std::uint64_t k = 0; k < 20000; ++k) {
      rng::Substream s(3, 1, k);
      const double x = sample(DistributionSpec::beta(0.3, 0.2), s);
      CHECK(x >= 0.0);
      CHECK(x <= 1.0);
    }
  }

  TEST_CASE("standard normal moments") {
    double sum = 0.0, sq = 0.0;
    const int n = 100000;
    for (int k = 0; k < n; ++k) {
      rng::Substream s(5, 2, static_cast<std::uint64_t>(k));
      const double z = sample_standard_normal(s);
      sum += z;
      sq += z * z;
    }
    CHECK(std::fabs(sum / n) < 0.02);
    CHECK(sq / n == doctest::Approx(1.0).epsilon(0.02));
  }
}
