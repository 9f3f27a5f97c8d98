#include "cyberquote/distributions.hpp"

#include <cmath>
#include <numbers>
#include <sstream>
#include <vector>

#include "cyberquote/csv.hpp"
#include "cyberquote/error.hpp"

namespace cyberquote::sim {

DistributionSpec DistributionSpec::point(double value) {
  DistributionSpec d{Kind::point, value, 0.0};
  d.validate();
  return d;
}

DistributionSpec DistributionSpec::uniform(double lo, double hi) {
  DistributionSpec d{Kind::uniform, lo, hi};
  d.validate();
  return d;
}

DistributionSpec DistributionSpec::beta(double a, double b) {
  DistributionSpec d{Kind::beta, a, b};
  d.validate();
  return d;
}

void DistributionSpec::validate() const {
  switch (kind) {
    case Kind::point:
      if (!(p1 >= 0.0 && p1 <= 1.0)) {
        throw ValidationError("invalid-distribution: point value must lie in [0,1]");
      }
      break;
    case Kind::uniform:
      if (!(0.0 <= p1 && p1 <= p2 && p2 <= 1.0)) {
        throw ValidationError("invalid-distribution: uniform needs 0 <= lo <= hi <= 1");
      }
      break;
    case Kind::beta:
      if (!(p1 > 0.0 && p2 > 0.0) || !std::isfinite(p1) || !std::isfinite(p2)) {
        throw ValidationError("invalid-distribution: beta needs a > 0 and b > 0");
      }
      break;
  }
}

double DistributionSpec::mean() const noexcept {
  switch (kind) {
    case Kind::point:
      return p1;
    case Kind::uniform:
      return (p1 + p2) / 2.0;
    case Kind::beta:
      return p1 / (p1 + p2);
  }
  return 0.0;
}

DistributionSpec parse_distribution(std::string_view text) {
  const std::string t = csv::trim(text);
  const auto open = t.find('(');
  if (open == std::string::npos || t.back() != ')') {
    throw FormatError("distribution must look like kind(params...): '" + t + "'");
  }
  const std::string kind = csv::trim(std::string_view(t).substr(0, open));
  std::vector<double> params;
  std::string_view args = std::string_view(t).substr(open + 1, t.size() - open - 2);
  while (!args.empty()) {
    const auto comma = args.find(',');
    params.push_back(csv::to_double(args.substr(0, comma), "distribution parameter"));
    if (comma == std::string_view::npos) break;
    args.remove_prefix(comma + 1);
  }
  auto need = [&](std::size_t n) {
    if (params.size() != n) {
      throw FormatError(kind + " takes " + std::to_string(n) + " parameter(s)");
    }
  };
  try {
    if (kind == "point") {
      need(1);
      return DistributionSpec::point(params[0]);
    }
    if (kind == "uniform") {
      need(2);
      return DistributionSpec::uniform(params[0], params[1]);
    }
    if (kind == "beta") {
      need(2);
      return DistributionSpec::beta(params[0], params[1]);
    }
  } catch (const ValidationError& e) {
    throw FormatError(e.what());
  }
  throw FormatError("unknown distribution kind '" + kind + "'");
}

std::string to_string(const DistributionSpec& d) {
  std::ostringstream out;
  out.precision(17);
  switch (d.kind) {
    case DistributionSpec::Kind::point:
      out << "point(" << d.p1 << ")";
      break;
    case DistributionSpec::Kind::uniform:
      out << "uniform(" << d.p1 << "," << d.p2 << ")";
      break;
    case DistributionSpec::Kind::beta:
      out << "beta(" << d.p1 << "," << d.p2 << ")";
      break;
  }
  return out.str();
}

double sample_standard_normal(rng::Substream& stream) {
  const double u1 = stream.next_uniform();
  const double u2 = stream.next_uniform();
  return std::sqrt(-2.0 * std::log(u1)) * std::cos(2.0 * std::numbers::pi * u2);
}

double sample_gamma(double shape, rng::Substream& stream) {
  if (shape < 1.0) {
    const double g = sample_gamma(shape + 1.0, stream);
    return g * std::pow(stream.next_uniform(), 1.0 / shape);
  }
  const double d = shape - 1.0 / 3.0;
  const double c = 1.0 / std::sqrt(9.0 * d);
  while (true) {
    double x, v;
    do {
      x = sample_standard_normal(stream);
      v = 1.0 + c * x;
    } while (v <= 0.0);
    v = v * v * v;
    const double u = stream.next_uniform();
    if (u < 1.0 - 0.0331 * x * x * x * x) return d * v;
    if (std::log(u) < 0.5 * x * x + d * (1.0 - v + std::log(v))) return d * v;
  }
}

double sample(const DistributionSpec& spec, rng::Substream& stream) {
  switch (spec.kind) {
    case DistributionSpec::Kind::point:
      return spec.p1;
    case DistributionSpec::Kind::uniform:
      return spec.p1 + (spec.p2 - spec.p1) * stream.next_uniform();
    case DistributionSpec::Kind::beta: {
      const double x = sample_gamma(spec.p1, stream);
      const double y = sample_gamma(spec.p2, stream);
      return x / (x + y);
    }
  }
  return 0.0;
}

}  // namespace cyberquote::sim
