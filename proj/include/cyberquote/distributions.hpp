#pragma once

#include <string>
#include <string_view>

#include "cyberquote/philox.hpp"

namespace cyberquote::sim {

// Degradation distribution on [0, 1].
struct DistributionSpec {
  enum class Kind { point, uniform, beta };
  Kind kind = Kind::point;
  double p1 = 0.0;  // point: value; uniform: lo; beta: a
  double p2 = 0.0;  // uniform: hi; beta: b

  static DistributionSpec point(double value);
  static DistributionSpec uniform(double lo, double hi);
  static DistributionSpec beta(double a, double b);

  // Throws ValidationError ("invalid-distribution") on bad parameters.
  void validate() const;
  double mean() const noexcept;
  bool operator==(const DistributionSpec&) const = default;
};

// "point(1)", "uniform(0,1)", "beta(2,2)". Throws FormatError.
DistributionSpec parse_distribution(std::string_view text);
std::string to_string(const DistributionSpec& spec);

double sample(const DistributionSpec& spec, rng::Substream& stream);

// Marsaglia-Tsang gamma variate with unit scale.
double sample_gamma(double shape, rng::Substream& stream);
double sample_standard_normal(rng::Substream& stream);

}  // namespace cyberquote::sim
