#pragma once

#include <string>
#include <vector>

#include "cyberquote/maturity.hpp"
#include "cyberquote/money.hpp"
#include "cyberquote/pricing.hpp"

namespace cyberquote::claims {

struct Claim {
  Layer layer = Layer::operations;
  Money claimed_amount;
  double observed_delta_c = 0.0;
  double observed_delta_s = 0.0;

  // Throws ValidationError for negative amounts or deltas outside [0, 1].
  void validate() const;
};

struct Settlement {
  Layer layer = Layer::operations;
  Money claimed;
  Money priced_loss;    // loss at the underwriting maturity for the observed deltas
  Money adjusted_loss;  // same deltas at the adjuster's maturity
  Money limit;          // m kappa
  Money payout;
  double ratio = 1.0;   // adjusted / priced, unclamped
  std::vector<std::string> warnings;
};

// Loss recomputed with the adjuster's maturity record in place of the underwriting one.
Money adjust_losses(const maturity::MuRecord& mu_prime, const pricing::LayerEconomics& econ,
                    const Claim& claim);

// payout = clamp(min(claimed, adjusted, m kappa), 0). The ratio falls back to 1 with
// a warning when the priced loss is zero.
Settlement settle(const Claim& claim, Money adjusted, const maturity::MuRecord& mu,
                  const pricing::LayerEconomics& econ);

// adjusted / priced. Throws NumericalError when priced is zero.
double settlement_ratio(Money adjusted, Money priced);

}  // namespace cyberquote::claims
