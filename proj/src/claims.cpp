#include "cyberquote/claims.hpp"

#include <algorithm>

#include "cyberquote/error.hpp"

namespace cyberquote::claims {

void Claim::validate() const {
  if (claimed_amount < Money{}) throw ValidationError("claimed amount must be non-negative");
  for (double d : {observed_delta_c, observed_delta_s}) {
    if (!(d >= 0.0 && d <= 1.0)) throw ValidationError("observed deltas must lie in [0,1]");
  }
}

Money adjust_losses(const maturity::MuRecord& mu_prime, const pricing::LayerEconomics& econ,
                    const Claim& claim) {
  return pricing::layer_loss(econ, mu_prime,
                             {claim.observed_delta_c, claim.observed_delta_s, 1.0});
}

double settlement_ratio(Money adjusted, Money priced) {
  if (priced == Money{}) throw NumericalError("settlement ratio undefined: priced loss is zero");
  return static_cast<double>(adjusted.cents()) / static_cast<double>(priced.cents());
}

Settlement settle(const Claim& claim, Money adjusted, const maturity::MuRecord& mu,
                  const pricing::LayerEconomics& econ) {
  Settlement s;
  s.layer = claim.layer;
  s.claimed = claim.claimed_amount;
  s.adjusted_loss = adjusted;
  s.priced_loss =
      pricing::layer_loss(econ, mu, {claim.observed_delta_c, claim.observed_delta_s, 1.0});
  s.limit = Money::from_units(mu.m * econ.kappa.to_double());
  s.payout = std::max(Money{}, std::min({claim.claimed_amount, adjusted, s.limit}));
  if (s.priced_loss == Money{}) {
    s.ratio = 1.0;
    s.warnings.push_back("zero-priced-loss: settlement ratio set to 1 by convention");
  } else {
    s.ratio = settlement_ratio(adjusted, s.priced_loss);
  }
  return s;
}

}  // namespace cyberquote::claims
