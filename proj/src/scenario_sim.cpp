#include "cyberquote/scenario_sim.hpp"

#include <algorithm>
#include <cmath>
#include <thread>

#include "cyberquote/error.hpp"
#include "cyberquote/kernels.hpp"

namespace cyberquote::sim {

void SimConfig::validate() const {
  if (n < 1) throw ValidationError("simulation needs at least one draw");
  if (workers < 1) throw ValidationError("simulation needs at least one worker");
}

namespace {

// Splits [0, n) into contiguous chunks, one per worker.
template <typename Fn>
void parallel_for(std::size_t n, unsigned workers, Fn&& fn) {
  const std::size_t w = std::min<std::size_t>(std::max(1u, workers), n);
  if (w <= 1) {
    fn(std::size_t{0}, n);
    return;
  }
  std::vector<std::jthread> threads;
  threads.reserve(w);
  const std::size_t chunk = (n + w - 1) / w;
  for (std::size_t t = 0; t < w; ++t) {
    const std::size_t begin = t * chunk;
    const std::size_t end = std::min(n, begin + chunk);
    if (begin >= end) break;
    threads.emplace_back([&fn, begin, end] { fn(begin, end); });
  }
}

struct DeltaArrays {
  std::vector<double> dc;
  std::vector<double> ds;
};

DeltaArrays draw_deltas(const DistributionSpec& dist_c, const DistributionSpec& dist_s,
                        const SimConfig& config, std::uint32_t stream_base) {
  dist_c.validate();
  dist_s.validate();
  config.validate();
  DeltaArrays d{std::vector<double>(config.n), std::vector<double>(config.n)};
  parallel_for(config.n, config.workers, [&](std::size_t begin, std::size_t end) {
    for (std::size_t k = begin; k < end; ++k) {
      rng::Substream sc(config.seed, stream_base, k);
      rng::Substream ss(config.seed, stream_base + 1, k);
      d.dc[k] = sample(dist_c, sc);
      d.ds[k] = sample(dist_s, ss);
    }
  });
  return d;
}

std::vector<double> breach_uniforms(const SimConfig& config, std::uint32_t stream) {
  std::vector<double> u(config.n);
  parallel_for(config.n, config.workers, [&](std::size_t begin, std::size_t end) {
    for (std::size_t k = begin; k < end; ++k) {
      rng::Substream s(config.seed, stream, k);
      u[k] = s.next_uniform();
    }
  });
  return u;
}

kernels::LossParams loss_params(const pricing::LayerEconomics& econ,
                                const maturity::MuRecord& mu) {
  return {econ.lambda_c.to_double(), econ.lambda_s.to_double(),
          pricing::loss_discount(econ, mu.p_bar)};
}

Money cents_to_money(double cents) {
  return Money::from_cents(static_cast<std::int64_t>(std::nearbyint(cents)));
}

std::uint32_t member_stream(std::size_t member, Layer layer) {
  return static_cast<std::uint32_t>(12 * member + 4 * (layer_index(layer) - 1));
}

}  // namespace

SimResult summarize_cents(std::vector<double> cents, const SimConfig& config) {
  if (cents.empty()) throw ValidationError("cannot summarize an empty sample");
  const auto& k = kernels::active_kernels();
  SimResult r;
  r.n = cents.size();
  r.seed = config.seed;
  r.generator = std::string(rng::kGeneratorName);
  const double n = static_cast<double>(cents.size());
  const double mean_cents = k.sum(cents.data(), cents.size()) / n;
  r.mean_exact = mean_cents / 100.0;
  r.mean = cents_to_money(mean_cents);
  if (cents.size() > 1) {
    r.sd = cents_to_money(std::sqrt(k.sum_sq_dev(cents.data(), cents.size(), mean_cents) /
                                    (n - 1.0)));
  }
  std::sort(cents.begin(), cents.end());
  for (double level : kQuantileLevels) {
    // Nearest rank: the ceil(p n)-th smallest draw.
    const auto rank = static_cast<std::size_t>(std::ceil(level * n));
    const std::size_t idx = std::clamp<std::size_t>(rank, 1, cents.size()) - 1;
    r.quantiles.emplace_back(level, cents_to_money(cents[idx]));
  }
  return r;
}

std::vector<pricing::Scenario> sample_deltas(const DistributionSpec& dist_c,
                                             const DistributionSpec& dist_s,
                                             const SimConfig& config, std::uint32_t stream_base) {
  const DeltaArrays d = draw_deltas(dist_c, dist_s, config, stream_base);
  const double w = 1.0 / static_cast<double>(config.n);
  std::vector<pricing::Scenario> out;
  out.reserve(config.n);
  for (std::size_t k = 0; k < config.n; ++k) out.push_back({d.dc[k], d.ds[k], w});
  return out;
}

std::vector<double> simulate_loss_cents(const pricing::LayerEconomics& econ,
                                        const maturity::MuRecord& mu,
                                        const DistributionSpec& dist_c,
                                        const DistributionSpec& dist_s, const SimConfig& config,
                                        std::uint32_t stream_base) {
  const DeltaArrays d = draw_deltas(dist_c, dist_s, config, stream_base);
  std::vector<double> cents(config.n);
  kernels::layer_losses_cents(d.dc, d.ds, loss_params(econ, mu), cents);
  return cents;
}

SimResult simulate_losses(const pricing::LayerEconomics& econ, const maturity::MuRecord& mu,
                          const DistributionSpec& dist_c, const DistributionSpec& dist_s,
                          const SimConfig& config) {
  return summarize_cents(simulate_loss_cents(econ, mu, dist_c, dist_s, config), config);
}

McPremium mc_price_layer(const pricing::LayerEconomics& econ, const maturity::MuRecord& mu,
                         const DistributionSpec& dist_c, const DistributionSpec& dist_s,
                         const SimConfig& config, const pricing::UtilitySpec& utility) {
  const std::vector<double> cents = simulate_loss_cents(econ, mu, dist_c, dist_s, config);
  const auto& k = kernels::active_kernels();
  const double n = static_cast<double>(cents.size());
  McPremium out;
  out.pi = pricing::breach_probability(econ, mu);
  const double mean_cents = k.sum(cents.data(), cents.size()) / n;
  out.mean_loss = cents_to_money(mean_cents);
  if (utility.kind == pricing::UtilitySpec::Kind::linear) {
    out.premium_exact = out.pi * (mean_cents / 100.0);
  } else {
    std::vector<double> excess(cents.size());
    for (std::size_t i = 0; i < cents.size(); ++i) {
      const double al = utility.a * (cents[i] / 100.0);
      if (al > 700.0) {
        throw NumericalError("CARA exponent a*L = " + std::to_string(al) +
                             " overflows; rescale loss units or lower a");
      }
      excess[i] = std::expm1(al);
    }
    const double mean_excess = k.sum(excess.data(), excess.size()) / n;
    out.premium_exact = std::log1p(out.pi * mean_excess) / utility.a;
  }
  out.premium = Money::from_units(out.premium_exact);
  return out;
}

std::vector<double> simulate_member_cents(const PortfolioSpec& portfolio, std::size_t member,
                                          const SimConfig& config) {
  if (member >= portfolio.members.size()) {
    throw ValidationError("portfolio member index out of range");
  }
  const int max_level = portfolio.max_level == 0 ? portfolio.model.num_levels : portfolio.max_level;
  const auto& k = kernels::active_kernels();
  std::vector<double> total(config.n, 0.0);
  for (const auto& layer : portfolio.members[member].layers) {
    const maturity::MuRecord mu = maturity::mu(layer.assessment, portfolio.model, max_level);
    const std::uint32_t base = member_stream(member, layer.econ.layer);
    const std::vector<double> cents =
        simulate_loss_cents(layer.econ, mu, layer.dist_c, layer.dist_s, config, base);
    const std::vector<double> u = breach_uniforms(config, base + 2);
    k.accumulate_breach_losses(cents.data(), u.data(), pricing::breach_probability(layer.econ, mu),
                               config.n, total.data());
  }
  return total;
}

namespace {

std::vector<double> portfolio_cents(const PortfolioSpec& portfolio, const SimConfig& config) {
  std::vector<double> total(config.n, 0.0);
  for (std::size_t m = 0; m < portfolio.members.size(); ++m) {
    const std::vector<double> member = simulate_member_cents(portfolio, m, config);
    for (std::size_t i = 0; i < total.size(); ++i) total[i] += member[i];
  }
  return total;
}

}  // namespace

SimResult simulate_portfolio(const PortfolioSpec& portfolio, const SimConfig& config) {
  config.validate();
  if (portfolio.members.empty()) throw ValidationError("portfolio has no members");
  return summarize_cents(portfolio_cents(portfolio, config), config);
}

AccumulationResult portfolio_accumulation(const PortfolioSpec& portfolio,
                                          std::string_view shocked_practice,
                                          const SimConfig& config) {
  const auto it = portfolio.shared_practices.find(std::string(shocked_practice));
  if (it == portfolio.shared_practices.end()) {
    throw UnknownPracticeError(std::string(shocked_practice));
  }
  for (const auto& [practice, members] : portfolio.shared_practices) {
    for (std::size_t m : members) {
      if (m >= portfolio.members.size()) {
        throw ValidationError("shared practice " + practice + " names member index " +
                              std::to_string(m) + " outside the portfolio");
      }
    }
  }

  AccumulationResult out;
  out.baseline = simulate_portfolio(portfolio, config);

  PortfolioSpec shocked = portfolio;
  for (std::size_t m : it->second) {
    out.affected_members.push_back(portfolio.members[m].name);
    for (auto& layer : shocked.members[m].layers) {
      layer.assessment = maturity::with_practice_failed(layer.assessment, shocked_practice);
    }
  }
  out.shocked = simulate_portfolio(shocked, config);
  return out;
}

}  // namespace cyberquote::sim
