#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "cyberquote/claims.hpp"
#include "cyberquote/distributions.hpp"
#include "cyberquote/pricing.hpp"

// Readers for the CSV-style input files. All throw FormatError with a line number.
namespace cyberquote::inputs {

std::string read_file(const std::string& path);

// Header `layer,v,alpha,beta,gamma,lambda_c,lambda_s,kappa[,c_bar,s_bar]`, one row
// per layer.
std::vector<pricing::LayerEconomics> parse_economics(std::string_view text);

// Distribution block: `dist_c=<spec>;dist_s=<spec>;n=<int>[;seed=<int>]`.
struct DistributionBlock {
  sim::DistributionSpec dist_c;
  sim::DistributionSpec dist_s;
  std::size_t n = 1;
  std::optional<std::uint64_t> seed;
};

DistributionBlock parse_distribution_block(std::string_view text);

// A scenario file holds either explicit `delta_c,delta_s,weight` rows or a single
// distribution block line.
struct ScenarioSource {
  std::vector<pricing::Scenario> explicit_rows;
  std::optional<DistributionBlock> block;
};

ScenarioSource parse_scenario_file(std::string_view text);

// Header `layer,claimed_amount,delta_c,delta_s`.
std::vector<claims::Claim> parse_claims(std::string_view text);

}  // namespace cyberquote::inputs
