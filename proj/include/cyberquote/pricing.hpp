#pragma once

#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "cyberquote/maturity.hpp"
#include "cyberquote/money.hpp"
#include "cyberquote/org_model.hpp"

namespace cyberquote::pricing {

using maturity::MuRecord;

// Insurer-side parameters for one layer.
struct LayerEconomics {
  Layer layer = Layer::operations;
  double v = 0.0;      // baseline breach probability
  double alpha = 1.0;  // security productivity
  double beta = 1.0;
  double gamma = 0.0;  // practice effectiveness
  Money lambda_c;      // maximum loss from criticality degradation
  Money lambda_s;      // maximum loss from sensitivity degradation
  Money kappa;         // policy limit before maturity scaling
  double c_bar = 1.0;  // intended criticality state
  double s_bar = 1.0;  // intended sensitivity state

  // Throws ValidationError on out-of-range fields.
  void validate() const;
};

struct UtilitySpec {
  enum class Kind { linear, cara };
  Kind kind = Kind::linear;
  double a = 0.0;  // CARA coefficient, > 0 when kind == cara

  static UtilitySpec linear() { return {}; }
  static UtilitySpec cara(double a);
};

// "linear", "kind=linear", "cara,a=1e-5" or "kind=cara,a=1e-5". Throws FormatError.
UtilitySpec parse_utility(std::string_view text);
std::string to_string(const UtilitySpec& spec);

// Degradation magnitudes (intended state minus observed state) with a scenario weight.
struct Scenario {
  double delta_c = 0.0;
  double delta_s = 0.0;
  double weight = 1.0;
};

struct Issue {
  enum class Severity { warning, error };
  Severity severity = Severity::warning;
  std::string code;
  std::string message;
};

// Rescales weights to sum to 1. Deltas outside [0, 1] are errors in strict mode; in
// lenient mode deltas in [-1, 0) are accepted as discounts and reported as warnings.
// Throws ValidationError on an empty set, non-positive weights, or rejected deltas.
std::vector<Issue> normalize_scenarios(std::vector<Scenario>& scenarios, bool strict);

// Gordon-Loeb type 1 security breach function v / (alpha z + 1)^beta.
double gordon_loeb_sbf(double z, double v, double alpha, double beta);

// Breach probability with the met-objectives score standing in for investment.
double breach_probability(const LayerEconomics& econ, const MuRecord& mu);

// (1 + p_bar)^gamma
double loss_discount(const LayerEconomics& econ, double p_bar);

// (lambda_c dC + lambda_s dS) / (1 + p_bar)^gamma, rounded half-even to cents.
Money layer_loss(const LayerEconomics& econ, const MuRecord& mu, const Scenario& scenario);

// Weighted sum of per-scenario layer losses, rounded once at the end.
Money expected_loss(const LayerEconomics& econ, const MuRecord& mu,
                    std::span<const Scenario> scenarios);

// Linear: x. CARA: (1 - e^{-a x}) / a, with x - a x^2 / 2 when |a x| < 1e-8.
double utility_value(const UtilitySpec& spec, double x);

// Max relative deviation of the finite-difference estimate of -u''/u' from a,
// sampled at x = -1000, 0, 1000. Throws DomainError for linear utility.
double risk_aversion_check(const UtilitySpec& spec);

// pi E[u(P - L)] + (1 - pi) u(P) for one layer.
double insurer_utility(const UtilitySpec& spec, double pi, double premium,
                       std::span<const Scenario> scenarios, const LayerEconomics& econ,
                       const MuRecord& mu);

enum class SolveMethod { closed_form, bisection };

// Premium P solving pi E_w[u(P - L)] + (1 - pi) u(P) = u(0) for a weighted loss
// sample (losses in currency units, weights summing to 1).
double indifference_premium(double pi, std::span<const double> losses,
                            std::span<const double> weights, const UtilitySpec& spec,
                            SolveMethod method = SolveMethod::closed_form);

struct LayerPrice {
  Layer layer = Layer::operations;
  double pi = 0.0;
  Money expected_loss;
  double premium_exact = 0.0;  // solver output before rounding
  Money premium;
  std::optional<double> rate;  // premium / (m kappa); empty when undefined
  Money limit_used;            // m kappa
  std::vector<Issue> issues;
};

LayerPrice price_layer(const LayerEconomics& econ, const MuRecord& mu,
                       std::span<const Scenario> scenarios, const UtilitySpec& spec,
                       SolveMethod method = SolveMethod::closed_form);

// lambda_c + lambda_s <= m kappa, boundary inclusive.
std::vector<Issue> check_coverage_constraint(const LayerEconomics& econ, const MuRecord& mu,
                                             bool strict = false);

struct LayerInputs {
  maturity::LayerAssessment assessment;
  LayerEconomics econ;
  std::vector<Scenario> scenarios;
};

struct QuoteOptions {
  int max_level = 0;  // 0 selects the model's num_levels
  bool strict = false;
};

struct Quote {
  std::vector<LayerPrice> layers;  // ordered 1 -> 3
  std::vector<MuRecord> mu;        // parallel to layers
  Money total_premium;
  std::vector<Issue> issues;       // all warnings and (strict) errors, layer-prefixed

  bool has_errors() const noexcept;
};

// Prices every layer. Requires exactly one input set per layer.
Quote quote(const org::OrgModel& org, const maturity::MaturityModelSpec& spec,
            std::vector<LayerInputs> inputs, const UtilitySpec& utility,
            const QuoteOptions& options = {});

}  // namespace cyberquote::pricing
