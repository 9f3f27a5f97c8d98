#include "cyberquote/inputs.hpp"

#include <fstream>
#include <map>
#include <sstream>

#include "cyberquote/csv.hpp"
#include "cyberquote/error.hpp"

namespace cyberquote::inputs {

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw FormatError("cannot open '" + path + "'");
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

namespace {

std::string at_line(std::size_t line) { return "line " + std::to_string(line) + ": "; }

// Maps header names to column indices and checks the required ones are present.
std::map<std::string, std::size_t> header_index(const csv::Row& header,
                                                std::initializer_list<const char*> required,
                                                std::initializer_list<const char*> optional) {
  std::map<std::string, std::size_t> idx;
  for (std::size_t i = 0; i < header.fields.size(); ++i) {
    const std::string name = csv::trim(header.fields[i]);
    bool known = false;
    for (const char* r : required) known = known || name == r;
    for (const char* o : optional) known = known || name == o;
    if (!known) throw FormatError(at_line(header.line) + "unexpected column '" + name + "'");
    if (!idx.emplace(name, i).second) {
      throw FormatError(at_line(header.line) + "duplicate column '" + name + "'");
    }
  }
  for (const char* r : required) {
    if (!idx.contains(r)) {
      throw FormatError(at_line(header.line) + "missing column '" + std::string(r) + "'");
    }
  }
  return idx;
}

int parse_layer(std::string_view field) {
  const auto v = csv::to_int(field, "layer");
  if (v < 1 || v > 3) throw FormatError("layer must be 1, 2 or 3");
  return static_cast<int>(v);
}

}  // namespace

std::vector<pricing::LayerEconomics> parse_economics(std::string_view text) {
  const auto rows = csv::parse(text);
  if (rows.empty()) throw FormatError("economics file is empty");
  const auto idx = header_index(
      rows.front(), {"layer", "v", "alpha", "beta", "gamma", "lambda_c", "lambda_s", "kappa"},
      {"c_bar", "s_bar"});
  std::vector<pricing::LayerEconomics> out;
  std::vector<bool> seen(4, false);
  for (std::size_t r = 1; r < rows.size(); ++r) {
    const auto& row = rows[r];
    if (row.fields.size() != rows.front().fields.size()) {
      throw FormatError(at_line(row.line) + "expected " +
                        std::to_string(rows.front().fields.size()) + " columns, got " +
                        std::to_string(row.fields.size()));
    }
    auto field = [&](const char* name) -> const std::string& {
      return row.fields[idx.at(name)];
    };
    try {
      pricing::LayerEconomics e;
      const int layer = parse_layer(field("layer"));
      if (seen[static_cast<std::size_t>(layer)]) {
        throw FormatError("layer " + std::to_string(layer) + " listed twice");
      }
      seen[static_cast<std::size_t>(layer)] = true;
      e.layer = static_cast<Layer>(layer);
      e.v = csv::to_double(field("v"), "v");
      e.alpha = csv::to_double(field("alpha"), "alpha");
      e.beta = csv::to_double(field("beta"), "beta");
      e.gamma = csv::to_double(field("gamma"), "gamma");
      e.lambda_c = Money::parse(csv::trim(field("lambda_c")));
      e.lambda_s = Money::parse(csv::trim(field("lambda_s")));
      e.kappa = Money::parse(csv::trim(field("kappa")));
      if (idx.contains("c_bar")) e.c_bar = csv::to_double(field("c_bar"), "c_bar");
      if (idx.contains("s_bar")) e.s_bar = csv::to_double(field("s_bar"), "s_bar");
      out.push_back(e);
    } catch (const FormatError& err) {
      throw FormatError(at_line(row.line) + err.what());
    }
  }
  return out;
}

DistributionBlock parse_distribution_block(std::string_view text) {
  DistributionBlock b;
  bool have_c = false, have_s = false, have_n = false;
  std::string_view rest = text;
  while (!rest.empty()) {
    const auto semi = rest.find(';');
    const std::string item = csv::trim(rest.substr(0, semi));
    rest = semi == std::string_view::npos ? std::string_view{} : rest.substr(semi + 1);
    if (item.empty()) continue;
    const auto eq = item.find('=');
    if (eq == std::string::npos) throw FormatError("expected key=value in '" + item + "'");
    const std::string key = csv::trim(std::string_view(item).substr(0, eq));
    const std::string value = csv::trim(std::string_view(item).substr(eq + 1));
    if (key == "dist_c") {
      b.dist_c = sim::parse_distribution(value);
      have_c = true;
    } else if (key == "dist_s") {
      b.dist_s = sim::parse_distribution(value);
      have_s = true;
    } else if (key == "n") {
      const auto n = csv::to_int(value, "n");
      if (n < 1) throw FormatError("n must be positive");
      b.n = static_cast<std::size_t>(n);
      have_n = true;
    } else if (key == "seed") {
      b.seed = csv::to_uint64(value, "seed");
    } else {
      throw FormatError("unknown distribution block key '" + key + "'");
    }
  }
  if (!have_c || !have_s || !have_n) {
    throw FormatError("distribution block needs dist_c, dist_s and n");
  }
  return b;
}

ScenarioSource parse_scenario_file(std::string_view text) {
  ScenarioSource src;
  if (text.find("dist_c") != std::string_view::npos) {
    std::istringstream lines{std::string(text)};
    std::string line;
    while (std::getline(lines, line)) {
      if (!line.empty() && line.back() == '\r') line.pop_back();
      const std::string t = csv::trim(line);
      if (t.empty() || t.front() == '#') continue;
      if (src.block) throw FormatError("scenario file holds more than one distribution block");
      src.block = parse_distribution_block(t);
    }
    return src;
  }
  const auto rows = csv::parse(text);
  if (rows.empty()) throw FormatError("scenario file is empty");
  const auto idx = header_index(rows.front(), {"delta_c", "delta_s"}, {"weight"});
  for (std::size_t r = 1; r < rows.size(); ++r) {
    const auto& row = rows[r];
    if (row.fields.size() != rows.front().fields.size()) {
      throw FormatError(at_line(row.line) + "column count differs from header");
    }
    try {
      pricing::Scenario s;
      s.delta_c = csv::to_double(row.fields[idx.at("delta_c")], "delta_c");
      s.delta_s = csv::to_double(row.fields[idx.at("delta_s")], "delta_s");
      if (idx.contains("weight")) s.weight = csv::to_double(row.fields[idx.at("weight")], "weight");
      src.explicit_rows.push_back(s);
    } catch (const FormatError& err) {
      throw FormatError(at_line(row.line) + err.what());
    }
  }
  if (src.explicit_rows.empty()) throw FormatError("scenario file has no rows");
  return src;
}

std::vector<claims::Claim> parse_claims(std::string_view text) {
  const auto rows = csv::parse(text);
  if (rows.empty()) throw FormatError("claim file is empty");
  const auto idx = header_index(rows.front(), {"layer", "claimed_amount", "delta_c", "delta_s"}, {});
  std::vector<claims::Claim> out;
  for (std::size_t r = 1; r < rows.size(); ++r) {
    const auto& row = rows[r];
    if (row.fields.size() != rows.front().fields.size()) {
      throw FormatError(at_line(row.line) + "column count differs from header");
    }
    try {
      claims::Claim c;
      c.layer = static_cast<Layer>(parse_layer(row.fields[idx.at("layer")]));
      c.claimed_amount = Money::parse(csv::trim(row.fields[idx.at("claimed_amount")]));
      c.observed_delta_c = csv::to_double(row.fields[idx.at("delta_c")], "delta_c");
      c.observed_delta_s = csv::to_double(row.fields[idx.at("delta_s")], "delta_s");
      out.push_back(c);
    } catch (const FormatError& err) {
      throw FormatError(at_line(row.line) + err.what());
    }
  }
  return out;
}

}  // namespace cyberquote::inputs
