#pragma once

#include <cstdint>
#include <map>
#include <set>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "cyberquote/distributions.hpp"
#include "cyberquote/maturity.hpp"
#include "cyberquote/money.hpp"
#include "cyberquote/pricing.hpp"

namespace cyberquote::sim {

struct SimConfig {
  std::size_t n = 1;
  std::uint64_t seed = 0;
  unsigned workers = 1;  // threads used to generate draws; results do not depend on it

  void validate() const;
};

inline constexpr std::array<double, 4> kQuantileLevels = {0.5, 0.9, 0.95, 0.99};

struct SimResult {
  Money mean;
  Money sd;  // sample standard deviation (n - 1 denominator), 0 when n == 1
  std::vector<std::pair<double, Money>> quantiles;  // nearest-rank, levels ascending
  std::size_t n = 0;
  std::uint64_t seed = 0;
  std::string generator;
  double mean_exact = 0.0;  // currency units, before rounding
};

// Nearest-rank summary of draws given in cents. Sorts a copy.
SimResult summarize_cents(std::vector<double> cents, const SimConfig& config);

// Draw k of every stream is a pure function of (seed, stream, k); weights are 1/n.
// stream_base selects the substream pair (stream_base for dC, stream_base + 1 for dS).
std::vector<pricing::Scenario> sample_deltas(const DistributionSpec& dist_c,
                                             const DistributionSpec& dist_s,
                                             const SimConfig& config,
                                             std::uint32_t stream_base = 0);

// Layer loss of every draw, in cents.
std::vector<double> simulate_loss_cents(const pricing::LayerEconomics& econ,
                                        const maturity::MuRecord& mu,
                                        const DistributionSpec& dist_c,
                                        const DistributionSpec& dist_s, const SimConfig& config,
                                        std::uint32_t stream_base = 0);

SimResult simulate_losses(const pricing::LayerEconomics& econ, const maturity::MuRecord& mu,
                          const DistributionSpec& dist_c, const DistributionSpec& dist_s,
                          const SimConfig& config);

struct McPremium {
  double pi = 0.0;
  double premium_exact = 0.0;
  Money premium;
  Money mean_loss;
};

// Indifference premium against the empirical loss sample. Throws NumericalError when
// a CARA exponent a*L exceeds 700.
McPremium mc_price_layer(const pricing::LayerEconomics& econ, const maturity::MuRecord& mu,
                         const DistributionSpec& dist_c, const DistributionSpec& dist_s,
                         const SimConfig& config, const pricing::UtilitySpec& utility);

struct MemberLayer {
  maturity::LayerAssessment assessment;
  pricing::LayerEconomics econ;
  DistributionSpec dist_c;
  DistributionSpec dist_s;
};

struct PortfolioMember {
  std::string name;
  std::vector<MemberLayer> layers;
};

struct PortfolioSpec {
  maturity::MaturityModelSpec model;
  int max_level = 0;  // 0 selects model.num_levels
  std::vector<PortfolioMember> members;
  // practice id -> indices of members relying on it
  std::map<std::string, std::set<std::size_t>> shared_practices;
};

// Aggregate loss per draw for one member: sum over layers of 1[u < pi] * L, in cents.
// Member i uses substreams 12 i + 4 (layer - 1) + {0: dC, 1: dS, 2: breach}.
std::vector<double> simulate_member_cents(const PortfolioSpec& portfolio, std::size_t member,
                                          const SimConfig& config);

SimResult simulate_portfolio(const PortfolioSpec& portfolio, const SimConfig& config);

struct AccumulationResult {
  SimResult baseline;
  SimResult shocked;
  std::vector<std::string> affected_members;
};

// Re-runs the portfolio with the shared practice failed at every member relying on
// it; both runs share the seed so draws are coupled. Throws UnknownPracticeError.
AccumulationResult portfolio_accumulation(const PortfolioSpec& portfolio,
                                          std::string_view shocked_practice,
                                          const SimConfig& config);

}  // namespace cyberquote::sim
