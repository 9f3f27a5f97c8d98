#include "cyberquote/pricing.hpp"

#include <algorithm>
#include <charconv>
#include <cmath>
#include <limits>
#include <sstream>

#include "cyberquote/csv.hpp"
#include "cyberquote/error.hpp"

namespace cyberquote::pricing {

namespace {

constexpr double kCaraExponentLimit = 700.0;  // e^700 is close to DBL_MAX
constexpr int kMaxBisectionIterations = 200;
constexpr double kBisectionRelTol = 1e-12;

bool in_unit(double x) { return x >= 0.0 && x <= 1.0; }

std::string layer_prefix(Layer l) {
  return "layer " + std::to_string(layer_index(l)) + " (" + std::string(layer_name(l)) + "): ";
}

}  // namespace

void LayerEconomics::validate() const {
  const std::string where = layer_prefix(layer);
  if (!in_unit(v)) throw ValidationError(where + "v must lie in [0,1]");
  if (!(alpha > 0.0)) throw ValidationError(where + "alpha must be positive");
  if (!(beta > 0.0)) throw ValidationError(where + "beta must be positive");
  if (!(gamma >= 0.0)) throw ValidationError(where + "gamma must be non-negative");
  if (lambda_c < Money{}) throw ValidationError(where + "lambda_c must be non-negative");
  if (lambda_s < Money{}) throw ValidationError(where + "lambda_s must be non-negative");
  if (kappa < Money{}) throw ValidationError(where + "kappa must be non-negative");
  if (!in_unit(c_bar) || !in_unit(s_bar)) {
    throw ValidationError(where + "c_bar and s_bar must lie in [0,1]");
  }
}

UtilitySpec UtilitySpec::cara(double a) {
  if (!(a > 0.0) || !std::isfinite(a)) {
    throw ValidationError("CARA coefficient must be positive and finite");
  }
  return {Kind::cara, a};
}

UtilitySpec parse_utility(std::string_view text) {
  std::string kind;
  std::optional<double> a;
  std::string_view rest = text;
  bool first = true;
  while (!rest.empty() || first) {
    const auto comma = rest.find(',');
    const std::string item = csv::trim(rest.substr(0, comma));
    rest = comma == std::string_view::npos ? std::string_view{} : rest.substr(comma + 1);
    const auto eq = item.find('=');
    const std::string key = csv::trim(std::string_view(item).substr(0, eq));
    const std::string value =
        eq == std::string::npos ? std::string{} : csv::trim(std::string_view(item).substr(eq + 1));
    if (first && eq == std::string::npos) {
      kind = key;
    } else if (key == "kind") {
      kind = value;
    } else if (key == "a") {
      a = csv::to_double(value, "CARA coefficient a");
    } else {
      throw FormatError("unknown utility setting '" + item + "'");
    }
    first = false;
  }
  if (kind == "linear") {
    if (a) throw FormatError("linear utility takes no coefficient");
    return UtilitySpec::linear();
  }
  if (kind == "cara") {
    if (!a) throw FormatError("cara utility requires a=<coefficient>");
    try {
      return UtilitySpec::cara(*a);
    } catch (const ValidationError& e) {
      throw FormatError(e.what());
    }
  }
  throw FormatError("utility kind must be linear or cara, got '" + kind + "'");
}

std::string to_string(const UtilitySpec& spec) {
  if (spec.kind == UtilitySpec::Kind::linear) return "kind=linear";
  char buf[32];
  const auto res = std::to_chars(buf, buf + sizeof buf, spec.a);
  return "kind=cara,a=" + std::string(buf, res.ptr);
}

std::vector<Issue> normalize_scenarios(std::vector<Scenario>& scenarios, bool strict) {
  if (scenarios.empty()) throw ValidationError("scenario set is empty");
  std::vector<Issue> issues;
  double total = 0.0;
  for (std::size_t i = 0; i < scenarios.size(); ++i) {
    const Scenario& s = scenarios[i];
    const std::string where = "scenario " + std::to_string(i + 1) + ": ";
    if (!(s.weight > 0.0) || !std::isfinite(s.weight)) {
      throw ValidationError(where + "weight must be positive");
    }
    for (double d : {s.delta_c, s.delta_s}) {
      if (in_unit(d)) continue;
      if (strict || d < -1.0 || d > 1.0 || !std::isfinite(d)) {
        throw ValidationError(where + "delta outside [0,1]");
      }
      issues.push_back({Issue::Severity::warning, "negative-delta",
                        where + "negative delta treated as a discount"});
    }
    total += s.weight;
  }
  for (auto& s : scenarios) s.weight /= total;
  return issues;
}

double gordon_loeb_sbf(double z, double v, double alpha, double beta) {
  if (z < 0.0 || std::isnan(z)) throw DomainError("security investment z must be non-negative");
  return v / std::pow(alpha * z + 1.0, beta);
}

double breach_probability(const LayerEconomics& econ, const MuRecord& mu) {
  return gordon_loeb_sbf(mu.o, econ.v, econ.alpha, econ.beta);
}

double loss_discount(const LayerEconomics& econ, double p_bar) {
  return std::pow(1.0 + p_bar, econ.gamma);
}

Money layer_loss(const LayerEconomics& econ, const MuRecord& mu, const Scenario& scenario) {
  const double loss = (econ.lambda_c.to_double() * scenario.delta_c +
                       econ.lambda_s.to_double() * scenario.delta_s) /
                      loss_discount(econ, mu.p_bar);
  return Money::from_units(loss);
}

namespace {

struct LossSample {
  std::vector<double> losses;   // currency units, on the cent grid
  std::vector<double> weights;  // sum to 1
};

LossSample sample_losses(const LayerEconomics& econ, const MuRecord& mu,
                         std::span<const Scenario> scenarios) {
  if (scenarios.empty()) throw ValidationError("scenario set is empty");
  LossSample s;
  s.losses.reserve(scenarios.size());
  s.weights.reserve(scenarios.size());
  double total = 0.0;
  for (const auto& sc : scenarios) total += sc.weight;
  for (const auto& sc : scenarios) {
    s.losses.push_back(layer_loss(econ, mu, sc).to_double());
    s.weights.push_back(sc.weight / total);
  }
  return s;
}

double weighted_mean(std::span<const double> x, std::span<const double> w) {
  double total = 0.0;
  for (std::size_t i = 0; i < x.size(); ++i) total += w[i] * x[i];
  return total;
}

}  // namespace

Money expected_loss(const LayerEconomics& econ, const MuRecord& mu,
                    std::span<const Scenario> scenarios) {
  const LossSample s = sample_losses(econ, mu, scenarios);
  // Accumulate in cents so a single rounding step happens at the end.
  double cents = 0.0;
  for (std::size_t i = 0; i < s.losses.size(); ++i) {
    cents += s.weights[i] * std::nearbyint(s.losses[i] * 100.0);
  }
  return Money::from_cents(static_cast<std::int64_t>(std::nearbyint(cents)));
}

double utility_value(const UtilitySpec& spec, double x) {
  if (spec.kind == UtilitySpec::Kind::linear) return x;
  const double ax = spec.a * x;
  if (std::fabs(ax) < 1e-8) return x - spec.a * x * x / 2.0;
  return -std::expm1(-ax) / spec.a;
}

double risk_aversion_check(const UtilitySpec& spec) {
  if (spec.kind != UtilitySpec::Kind::cara) {
    throw DomainError("risk aversion check applies to CARA utility only");
  }
  const double h = 1e-3 / spec.a;
  double worst = 0.0;
  for (double x : {-1000.0, 0.0, 1000.0}) {
    const double up = utility_value(spec, x + h);
    const double mid = utility_value(spec, x);
    const double down = utility_value(spec, x - h);
    const double first = (up - down) / (2.0 * h);
    const double second = (up - 2.0 * mid + down) / (h * h);
    const double estimate = -second / first;
    worst = std::max(worst, std::fabs(estimate - spec.a) / spec.a);
  }
  return worst;
}

double insurer_utility(const UtilitySpec& spec, double pi, double premium,
                       std::span<const Scenario> scenarios, const LayerEconomics& econ,
                       const MuRecord& mu) {
  const LossSample s = sample_losses(econ, mu, scenarios);
  double loss_state = 0.0;
  for (std::size_t i = 0; i < s.losses.size(); ++i) {
    loss_state += s.weights[i] * utility_value(spec, premium - s.losses[i]);
  }
  return pi * loss_state + (1.0 - pi) * utility_value(spec, premium);
}

namespace {

double closed_form_premium(double pi, std::span<const double> losses,
                           std::span<const double> weights, const UtilitySpec& spec) {
  if (spec.kind == UtilitySpec::Kind::linear) return pi * weighted_mean(losses, weights);
  // (1/a) ln(pi E[e^{aL}] + 1 - pi), written with expm1/log1p for small a L.
  double excess = 0.0;
  for (std::size_t i = 0; i < losses.size(); ++i) {
    const double al = spec.a * losses[i];
    if (al > kCaraExponentLimit) {
      throw NumericalError("CARA exponent a*L = " + std::to_string(al) +
                           " overflows; rescale loss units or lower a");
    }
    excess += weights[i] * std::expm1(al);
  }
  return std::log1p(pi * excess) / spec.a;
}

double bisection_premium(double pi, std::span<const double> losses,
                         std::span<const double> weights, const UtilitySpec& spec) {
  auto f = [&](double premium) {
    double loss_state = 0.0;
    for (std::size_t i = 0; i < losses.size(); ++i) {
      loss_state += weights[i] * utility_value(spec, premium - losses[i]);
    }
    return pi * loss_state + (1.0 - pi) * utility_value(spec, premium) - utility_value(spec, 0.0);
  };
  const auto [min_it, max_it] = std::minmax_element(losses.begin(), losses.end());
  double lo = std::min(0.0, pi * *min_it);
  double hi = std::max(0.0, pi * *max_it);
  if (f(lo) == 0.0) return lo;
  if (f(hi) == 0.0) return hi;
  for (int i = 0; f(hi) < 0.0; ++i) {
    if (i == 64) throw NumericalError("could not bracket the indifference premium from above");
    hi += std::max(std::fabs(hi), 1.0);
  }
  for (int i = 0; f(lo) > 0.0; ++i) {
    if (i == 64) throw NumericalError("could not bracket the indifference premium from below");
    lo -= std::max(std::fabs(lo), 1.0);
  }
  for (int i = 0; i < kMaxBisectionIterations; ++i) {
    const double mid = lo + (hi - lo) / 2.0;
    const double scale = std::max(std::fabs(lo), std::fabs(hi));
    if (hi - lo <= kBisectionRelTol * scale || mid == lo || mid == hi) return mid;
    const double fm = f(mid);
    if (fm == 0.0) return mid;
    (fm < 0.0 ? lo : hi) = mid;
  }
  throw NumericalError("indifference premium bisection did not converge in " +
                       std::to_string(kMaxBisectionIterations) + " iterations");
}

}  // namespace

double indifference_premium(double pi, std::span<const double> losses,
                            std::span<const double> weights, const UtilitySpec& spec,
                            SolveMethod method) {
  if (losses.empty() || losses.size() != weights.size()) {
    throw ValidationError("loss sample and weights must be non-empty and of equal length");
  }
  if (!(pi >= 0.0 && pi <= 1.0)) throw DomainError("breach probability must lie in [0,1]");
  return method == SolveMethod::closed_form ? closed_form_premium(pi, losses, weights, spec)
                                            : bisection_premium(pi, losses, weights, spec);
}

std::vector<Issue> check_coverage_constraint(const LayerEconomics& econ, const MuRecord& mu,
                                             bool strict) {
  std::vector<Issue> issues;
  const Money limit = Money::from_units(mu.m * econ.kappa.to_double());
  const Money exposure = econ.lambda_c + econ.lambda_s;
  if (exposure > limit) {
    issues.push_back({strict ? Issue::Severity::error : Issue::Severity::warning,
                      "constraint-violation",
                      layer_prefix(econ.layer) + "lambda_c + lambda_s = " + exposure.to_string() +
                          " exceeds m*kappa = " + limit.to_string()});
  }
  return issues;
}

LayerPrice price_layer(const LayerEconomics& econ, const MuRecord& mu,
                       std::span<const Scenario> scenarios, const UtilitySpec& spec,
                       SolveMethod method) {
  LayerPrice out;
  out.layer = econ.layer;
  out.pi = breach_probability(econ, mu);
  out.expected_loss = expected_loss(econ, mu, scenarios);
  out.limit_used = Money::from_units(mu.m * econ.kappa.to_double());

  const LossSample sample = sample_losses(econ, mu, scenarios);
  out.premium_exact = indifference_premium(out.pi, sample.losses, sample.weights, spec, method);
  out.premium = Money::from_units(out.premium_exact);

  const double limit = mu.m * econ.kappa.to_double();
  if (limit > 0.0) {
    out.rate = out.premium_exact / limit;
  } else if (out.expected_loss > Money{}) {
    throw UninsurableLayerError(layer_prefix(econ.layer) +
                                "positive expected loss with zero effective limit (m*kappa = 0)");
  } else if (out.expected_loss == Money{}) {
    out.premium_exact = 0.0;
    out.premium = Money{};
    out.rate = 0.0;
  } else {
    out.issues.push_back({Issue::Severity::warning, "rate-undefined",
                          layer_prefix(econ.layer) + "rate undefined with zero effective limit"});
  }
  return out;
}

bool Quote::has_errors() const noexcept {
  return std::any_of(issues.begin(), issues.end(),
                     [](const Issue& i) { return i.severity == Issue::Severity::error; });
}

Quote quote(const org::OrgModel& org_model, const maturity::MaturityModelSpec& spec,
            std::vector<LayerInputs> inputs, const UtilitySpec& utility,
            const QuoteOptions& options) {
  const auto report = org::validate_model(org_model);
  if (!report.ok()) {
    throw ValidationError("organization model has " + std::to_string(report.error_count()) +
                          " error(s); first: " + report.diagnostics.front().message);
  }
  Quote q;
  for (const auto& d : report.diagnostics) {
    q.issues.push_back({Issue::Severity::warning, d.code, d.message});
  }

  std::sort(inputs.begin(), inputs.end(), [](const LayerInputs& a, const LayerInputs& b) {
    return layer_index(a.econ.layer) < layer_index(b.econ.layer);
  });
  if (inputs.size() != kAllLayers.size()) {
    throw ValidationError("a quote needs inputs for exactly three layers, got " +
                          std::to_string(inputs.size()));
  }
  for (std::size_t i = 0; i < inputs.size(); ++i) {
    const Layer expected = kAllLayers[i];
    if (inputs[i].econ.layer != expected || inputs[i].assessment.layer != expected) {
      throw ValidationError("layer inputs must cover layers 1, 2 and 3 exactly once with matching "
                            "assessment and economics");
    }
  }

  const int max_level = options.max_level == 0 ? spec.num_levels : options.max_level;
  for (auto& in : inputs) {
    in.econ.validate();
    maturity::validate_assessment(in.assessment, spec);
    const std::string prefix = layer_prefix(in.econ.layer);
    for (auto& issue : normalize_scenarios(in.scenarios, options.strict)) {
      issue.message = prefix + issue.message;
      q.issues.push_back(std::move(issue));
    }
    for (const auto& sc : in.scenarios) {
      if (sc.delta_c > in.econ.c_bar || sc.delta_s > in.econ.s_bar) {
        if (options.strict) {
          throw ValidationError(prefix + "scenario degradation exceeds the intended state");
        }
        q.issues.push_back({Issue::Severity::warning, "delta-exceeds-intended-state",
                            prefix + "scenario degradation exceeds the intended state"});
      }
    }

    MuRecord m = maturity::mu(in.assessment, spec, max_level);
    for (const auto& w : m.warnings) {
      q.issues.push_back({Issue::Severity::warning, w.substr(0, w.find(':')), prefix + w});
    }
    LayerPrice price = price_layer(in.econ, m, in.scenarios, utility);
    for (auto& issue : check_coverage_constraint(in.econ, m, options.strict)) {
      q.issues.push_back(std::move(issue));
    }
    for (auto& issue : price.issues) q.issues.push_back(issue);
    q.total_premium += price.premium;
    q.layers.push_back(std::move(price));
    q.mu.push_back(std::move(m));
  }
  return q;
}

}  // namespace cyberquote::pricing
