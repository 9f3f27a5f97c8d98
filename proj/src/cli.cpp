#include "cyberquote/cli.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <map>
#include <optional>
#include <sstream>

#include "cyberquote/claims.hpp"
#include "cyberquote/csv.hpp"
#include "cyberquote/erd.hpp"
#include "cyberquote/error.hpp"
#include "cyberquote/inputs.hpp"
#include "cyberquote/maturity.hpp"
#include "cyberquote/pricing.hpp"
#include "cyberquote/scenario_sim.hpp"

namespace cyberquote::cli {
namespace {

using json = nlohmann::ordered_json;

class UsageError : public Error {
 public:
  using Error::Error;
};

// Ratios and probabilities are reported with 10 significant digits in both formats.
std::string sig10(double x) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.10g", x);
  return buf;
}

double sig10_value(double x) { return std::strtod(sig10(x).c_str(), nullptr); }

json money_json(Money m) { return json(m.to_double()); }

struct Output {
  std::ostream& out;
  std::optional<std::string> path;

  void emit(const std::string& text) const {
    if (!path) {
      out << text;
      return;
    }
    std::ofstream f(*path, std::ios::binary);
    if (!f) throw FormatError("cannot write " + *path);
    f << text;
  }
};

std::string dump(const json& doc) { return doc.dump(2) + "\n"; }

maturity::MaturityModelSpec load_model(const std::optional<std::string>& path) {
  if (!path) return maturity::load_maturity_model(builtin_model_text());
  return maturity::load_maturity_model(inputs::read_file(*path));
}

maturity::LayerAssessment load_assessment(const std::string& path) {
  return maturity::parse_assessment(inputs::read_file(path));
}

std::uint64_t resolve_seed(const std::optional<std::uint64_t>& flag,
                           const std::optional<std::uint64_t>& file) {
  if (flag) return *flag;
  if (file) return *file;
  if (const char* env = std::getenv("CYBERQUOTE_SEED"); env && *env) {
    try {
      return csv::to_uint64(env, "CYBERQUOTE_SEED");
    } catch (const FormatError&) {
      throw UsageError(std::string("CYBERQUOTE_SEED is not an unsigned integer: ") + env);
    }
  }
  return 0;
}

std::string severity_name(pricing::Issue::Severity s) {
  return s == pricing::Issue::Severity::error ? "error" : "warning";
}

void print_issues(const std::vector<pricing::Issue>& issues, std::ostream& err) {
  for (const auto& i : issues) {
    err << severity_name(i.severity) << ": [" << i.code << "] " << i.message << "\n";
  }
}

json issues_json(const std::vector<pricing::Issue>& issues) {
  json arr = json::array();
  for (const auto& i : issues) {
    arr.push_back({{"severity", severity_name(i.severity)}, {"code", i.code},
                   {"message", i.message}});
  }
  return arr;
}

// --- shared option groups ---------------------------------------------------------

struct QuoteArgs {
  std::string org;
  std::string econ;
  std::vector<std::string> assess;
  std::vector<std::string> scenarios;
  std::string utility = "linear";
  std::optional<std::string> model;
  bool strict = false;
  std::string format = "text";
  std::optional<std::uint64_t> seed;
  unsigned workers = 1;
  std::optional<std::string> out;
  int max_level = 0;
};

void add_format(CLI::App* sub, std::string& format) {
  sub->add_option("--format", format, "Report format")
      ->check(CLI::IsMember({"text", "json"}))
      ->capture_default_str();
}

void add_quote_inputs(CLI::App* sub, QuoteArgs& a) {
  sub->add_option("--org", a.org, "Organization model file")->required();
  sub->add_option("--econ", a.econ, "Economics CSV, one row per layer")->required();
  sub->add_option("--assess", a.assess, "Underwriter assessments for layers 1,2,3")
      ->required()
      ->delimiter(',')
      ->expected(1, 3);
  sub->add_option("--model", a.model, "Maturity model CSV (default: built-in CMMC 2.0)");
  sub->add_option("--max-level", a.max_level, "Highest maturity level considered (0: all)")
      ->check(CLI::NonNegativeNumber);
  sub->add_flag("--strict", a.strict, "Treat constraint violations as errors");
  add_format(sub, a.format);
  sub->add_option("--out", a.out, "Write the report to a file");
}

void add_sim_options(CLI::App* sub, QuoteArgs& a) {
  sub->add_option("--seed", a.seed,
                  "Random seed (precedence: flag, scenario file, CYBERQUOTE_SEED, 0)");
  sub->add_option("--workers", a.workers, "Worker threads for sampling")
      ->check(CLI::PositiveNumber)
      ->capture_default_str();
}

struct LoadedQuote {
  org::OrgModel org;
  maturity::MaturityModelSpec model;
  std::vector<pricing::LayerEconomics> econ;
  std::vector<maturity::LayerAssessment> assessments;
};

LoadedQuote load_quote_inputs(const QuoteArgs& a) {
  LoadedQuote q;
  q.org = erd::parse_org(inputs::read_file(a.org));
  q.model = load_model(a.model);
  q.econ = inputs::parse_economics(inputs::read_file(a.econ));
  for (const auto& path : a.assess) q.assessments.push_back(load_assessment(path));
  for (const auto& as : q.assessments) {
    if (as.role != maturity::AssessmentRole::underwriter) {
      throw ValidationError("layer " + std::to_string(layer_index(as.layer)) +
                            " assessment is not an underwriter assessment");
    }
  }
  return q;
}

const pricing::LayerEconomics& econ_for(const std::vector<pricing::LayerEconomics>& econ,
                                        Layer layer) {
  for (const auto& e : econ) {
    if (e.layer == layer) return e;
  }
  throw ValidationError("economics has no row for layer " + std::to_string(layer_index(layer)));
}

const maturity::LayerAssessment& assessment_for(
    const std::vector<maturity::LayerAssessment>& list, Layer layer, std::string_view what) {
  for (const auto& a : list) {
    if (a.layer == layer) return a;
  }
  throw ValidationError("no " + std::string(what) + " assessment for layer " +
                        std::to_string(layer_index(layer)));
}

std::vector<pricing::Scenario> scenarios_from(const inputs::ScenarioSource& src,
                                              const QuoteArgs& a, Layer layer) {
  if (!src.block) return src.explicit_rows;
  sim::SimConfig cfg;
  cfg.n = src.block->n;
  cfg.seed = resolve_seed(a.seed, src.block->seed);
  cfg.workers = a.workers;
  const auto base = static_cast<std::uint32_t>(4 * (layer_index(layer) - 1));
  return sim::sample_deltas(src.block->dist_c, src.block->dist_s, cfg, base);
}

// --- subcommands -----------------------------------------------------------------

int cmd_validate(const std::string& path, const std::string& format, std::ostream& out,
                 std::ostream& err) {
  const org::OrgModel model = erd::parse_org(inputs::read_file(path));
  const org::ValidationReport report = org::validate_model(model);
  if (format == "json") {
    json diags = json::array();
    for (const auto& d : report.diagnostics) {
      diags.push_back({{"severity", d.severity == org::Severity::error ? "error" : "warning"},
                       {"code", d.code},
                       {"location", d.location},
                       {"message", d.message}});
    }
    json doc = {{"org", model.name},
                {"entities", model.entities.size()},
                {"relationships", model.relationships.size()},
                {"errors", report.error_count()},
                {"warnings", report.warning_count()},
                {"diagnostics", diags}};
    out << dump(doc);
  } else {
    for (const auto& d : report.diagnostics) {
      err << (d.severity == org::Severity::error ? "error" : "warning") << ": [" << d.code
          << "] " << d.location << ": " << d.message << "\n";
    }
    out << model.name << ": " << model.entities.size() << " entities, "
        << model.relationships.size() << " relationships\n";
    out << report.error_count() << " errors, " << report.warning_count() << " warnings\n";
  }
  return report.ok() ? kOk : kValidation;
}

int cmd_assess(const std::optional<std::string>& model_path,
               const std::vector<std::string>& paths, int max_level_opt,
               const std::string& format, std::ostream& out, std::ostream& err) {
  const auto spec = load_model(model_path);
  const int max_level = max_level_opt == 0 ? spec.num_levels : max_level_opt;
  json layers = json::array();
  std::ostringstream text;
  text << "model: " << spec.name << " (" << spec.practices.size() << " practices, "
       << spec.num_levels << " levels)\n";
  for (const auto& path : paths) {
    const auto a = load_assessment(path);
    maturity::validate_assessment(a, spec);
    const auto rec = maturity::mu(a, spec, max_level);
    const int level = maturity::level_achieved(a, spec);
    for (const auto& w : rec.warnings) {
      err << "warning: layer " << layer_index(a.layer) << ": " << w << "\n";
    }

    json coverage = json::object();
    for (const auto& [code, c] : rec.domain_coverage) coverage[code] = sig10_value(c);
    json entry = {{"layer", layer_index(a.layer)},
                  {"name", std::string(layer_name(a.layer))},
                  {"p_bar", sig10_value(rec.p_bar)},
                  {"o", sig10_value(rec.o)},
                  {"m", sig10_value(rec.m)},
                  {"level_achieved", level},
                  {"domain_coverage", coverage}};

    text << "layer " << layer_index(a.layer) << " " << layer_name(a.layer)
         << ": p_bar=" << sig10(rec.p_bar) << " o=" << sig10(rec.o) << " m=" << sig10(rec.m)
         << " level_achieved=" << level << "\n";
    for (const auto& [code, c] : rec.domain_coverage) {
      text << "  domain " << code << ": " << sig10(c) << "\n";
    }

    if (a.objective_domain_matrix_path) {
      std::filesystem::path mpath(*a.objective_domain_matrix_path);
      if (mpath.is_relative()) mpath = std::filesystem::path(path).parent_path() / mpath;
      const auto matrix =
          maturity::load_domain_objective_matrix(inputs::read_file(mpath.string()));
      json objectives = json::object();
      for (const auto& b : maturity::objective_breakdown(rec, matrix, a)) {
        objectives[b.objective] = b.coverage ? json(sig10_value(*b.coverage)) : json(nullptr);
        text << "  objective " << b.objective << ": "
             << (b.coverage ? sig10(*b.coverage) : std::string("n/a")) << "\n";
      }
      entry["objective_coverage"] = objectives;
    }
    layers.push_back(entry);
  }
  if (format == "json") {
    out << dump(json{{"model", spec.name}, {"layers", layers}});
  } else {
    out << text.str();
  }
  return kOk;
}

int cmd_quote(const QuoteArgs& a, std::ostream& out, std::ostream& err) {
  const LoadedQuote in = load_quote_inputs(a);
  const auto utility = pricing::parse_utility(a.utility);

  std::vector<inputs::ScenarioSource> sources;
  for (const auto& path : a.scenarios) {
    sources.push_back(inputs::parse_scenario_file(inputs::read_file(path)));
  }
  if (sources.size() != 1 && sources.size() != kAllLayers.size()) {
    throw UsageError("--scenarios takes one file or one file per layer");
  }

  std::vector<pricing::LayerInputs> layer_inputs;
  for (std::size_t i = 0; i < kAllLayers.size(); ++i) {
    const Layer layer = kAllLayers[i];
    const auto& src = sources.size() == 1 ? sources.front() : sources[i];
    layer_inputs.push_back({assessment_for(in.assessments, layer, "underwriter"),
                            econ_for(in.econ, layer), scenarios_from(src, a, layer)});
  }

  const auto q = pricing::quote(in.org, in.model, std::move(layer_inputs), utility,
                                {a.max_level, a.strict});

  std::string report;
  if (a.format == "json") {
    json layers = json::array();
    for (std::size_t i = 0; i < q.layers.size(); ++i) {
      const auto& lp = q.layers[i];
      const auto& m = q.mu[i];
      layers.push_back({{"layer", layer_index(lp.layer)},
                        {"name", std::string(layer_name(lp.layer))},
                        {"p_bar", sig10_value(m.p_bar)},
                        {"o", sig10_value(m.o)},
                        {"m", sig10_value(m.m)},
                        {"pi", sig10_value(lp.pi)},
                        {"expected_loss", money_json(lp.expected_loss)},
                        {"premium", money_json(lp.premium)},
                        {"rate", lp.rate ? json(sig10_value(*lp.rate)) : json(nullptr)},
                        {"limit", money_json(lp.limit_used)}});
    }
    report = dump(json{{"org", in.org.name},
                       {"utility", pricing::to_string(utility)},
                       {"layers", layers},
                       {"total_premium", money_json(q.total_premium)},
                       {"warnings", issues_json(q.issues)}});
  } else {
    std::ostringstream s;
    s << "org: " << in.org.name << "\n";
    s << "utility: " << pricing::to_string(utility) << "\n";
    for (std::size_t i = 0; i < q.layers.size(); ++i) {
      const auto& lp = q.layers[i];
      const auto& m = q.mu[i];
      s << "layer " << layer_index(lp.layer) << " " << layer_name(lp.layer) << ":\n"
        << "  p_bar=" << sig10(m.p_bar) << " o=" << sig10(m.o) << " m=" << sig10(m.m) << "\n"
        << "  pi=" << sig10(lp.pi) << "\n"
        << "  expected_loss=" << lp.expected_loss.to_string() << "\n"
        << "  premium=" << lp.premium.to_string() << "\n"
        << "  rate=" << (lp.rate ? sig10(*lp.rate) : std::string("undefined")) << "\n"
        << "  limit=" << lp.limit_used.to_string() << "\n";
    }
    s << "total_premium: " << q.total_premium.to_string() << "\n";
    report = s.str();
    print_issues(q.issues, err);
  }
  Output{out, a.out}.emit(report);
  return q.has_errors() ? kValidation : kOk;
}

int cmd_adjust(const QuoteArgs& a, const std::string& claims_path,
               const std::vector<std::string>& adjuster_paths, std::ostream& out,
               std::ostream& err) {
  const LoadedQuote in = load_quote_inputs(a);
  const auto report = org::validate_model(in.org);
  if (!report.ok()) {
    throw ValidationError("organization model has " + std::to_string(report.error_count()) +
                          " error(s)");
  }
  std::vector<maturity::LayerAssessment> adjusters;
  for (const auto& path : adjuster_paths) {
    auto as = load_assessment(path);
    if (as.role != maturity::AssessmentRole::adjuster) {
      throw ValidationError(path + ": adjuster assessment must declare role adjuster");
    }
    adjusters.push_back(std::move(as));
  }
  const auto claim_list = inputs::parse_claims(inputs::read_file(claims_path));
  const int max_level = a.max_level == 0 ? in.model.num_levels : a.max_level;

  std::vector<claims::Settlement> settlements;
  for (const auto& claim : claim_list) {
    claim.validate();
    const auto& econ = econ_for(in.econ, claim.layer);
    econ.validate();
    const auto& under = assessment_for(in.assessments, claim.layer, "underwriter");
    const auto& adj = assessment_for(adjusters, claim.layer, "adjuster");
    maturity::validate_assessment(under, in.model);
    maturity::validate_assessment(adj, in.model);
    const auto mu = maturity::mu(under, in.model, max_level);
    const auto mu_prime = maturity::mu(adj, in.model, max_level);
    const Money adjusted = claims::adjust_losses(mu_prime, econ, claim);
    settlements.push_back(claims::settle(claim, adjusted, mu, econ));
  }

  Money total;
  for (const auto& s : settlements) total += s.payout;

  std::string text;
  if (a.format == "json") {
    json arr = json::array();
    for (const auto& s : settlements) {
      arr.push_back({{"layer", layer_index(s.layer)},
                     {"claimed", money_json(s.claimed)},
                     {"priced_loss", money_json(s.priced_loss)},
                     {"adjusted_loss", money_json(s.adjusted_loss)},
                     {"limit", money_json(s.limit)},
                     {"payout", money_json(s.payout)},
                     {"ratio", sig10_value(s.ratio)},
                     {"warnings", s.warnings}});
    }
    text = dump(json{{"org", in.org.name}, {"settlements", arr}, {"total_payout", money_json(total)}});
  } else {
    std::ostringstream s;
    s << "org: " << in.org.name << "\n";
    for (const auto& st : settlements) {
      s << "layer " << layer_index(st.layer) << " " << layer_name(st.layer) << ":\n"
        << "  claimed=" << st.claimed.to_string() << "\n"
        << "  priced_loss=" << st.priced_loss.to_string() << "\n"
        << "  adjusted_loss=" << st.adjusted_loss.to_string() << "\n"
        << "  ratio=" << sig10(st.ratio) << "\n"
        << "  limit=" << st.limit.to_string() << "\n"
        << "  payout=" << st.payout.to_string() << "\n";
      for (const auto& w : st.warnings) {
        err << "warning: layer " << layer_index(st.layer) << ": " << w << "\n";
      }
    }
    s << "total_payout: " << total.to_string() << "\n";
    text = s.str();
  }
  Output{out, a.out}.emit(text);
  return kOk;
}

struct SimulateArgs {
  QuoteArgs common;
  std::string assess;
  std::string dist;
  std::optional<std::size_t> n;
  std::optional<std::string> utility;
};

int cmd_simulate(const SimulateArgs& s, std::ostream& out) {
  const QuoteArgs& a = s.common;
  const auto model = load_model(a.model);
  const auto econ_rows = inputs::parse_economics(inputs::read_file(a.econ));
  const auto as = load_assessment(s.assess);
  maturity::validate_assessment(as, model);
  const auto& econ = econ_for(econ_rows, as.layer);
  econ.validate();

  const auto source = inputs::parse_scenario_file(inputs::read_file(s.dist));
  if (!source.block) {
    throw FormatError(s.dist + ": simulate needs a distribution block");
  }
  sim::SimConfig cfg;
  cfg.n = s.n.value_or(source.block->n);
  cfg.seed = resolve_seed(a.seed, source.block->seed);
  cfg.workers = a.workers;
  cfg.validate();

  const int max_level = a.max_level == 0 ? model.num_levels : a.max_level;
  const auto rec = maturity::mu(as, model, max_level);
  const auto result = sim::simulate_losses(econ, rec, source.block->dist_c,
                                           source.block->dist_s, cfg);
  std::optional<sim::McPremium> premium;
  std::optional<pricing::UtilitySpec> utility;
  if (s.utility) {
    utility = pricing::parse_utility(*s.utility);
    premium = sim::mc_price_layer(econ, rec, source.block->dist_c, source.block->dist_s, cfg,
                                  *utility);
  }

  std::string text;
  if (a.format == "json") {
    json q = json::object();
    for (const auto& [level, v] : result.quantiles) q[sig10(level)] = money_json(v);
    json doc = {{"layer", layer_index(as.layer)},
                {"dist_c", sim::to_string(source.block->dist_c)},
                {"dist_s", sim::to_string(source.block->dist_s)},
                {"mean", money_json(result.mean)},
                {"sd", money_json(result.sd)},
                {"quantiles", q},
                {"n", result.n},
                {"seed", result.seed},
                {"generator", result.generator}};
    if (premium) {
      doc["utility"] = pricing::to_string(*utility);
      doc["pi"] = sig10_value(premium->pi);
      doc["premium"] = money_json(premium->premium);
    }
    text = dump(doc);
  } else {
    std::ostringstream o;
    o << "layer: " << layer_index(as.layer) << " " << layer_name(as.layer) << "\n"
      << "dist_c: " << sim::to_string(source.block->dist_c) << "\n"
      << "dist_s: " << sim::to_string(source.block->dist_s) << "\n"
      << "mean: " << result.mean.to_string() << "\n"
      << "sd: " << result.sd.to_string() << "\n";
    for (const auto& [level, v] : result.quantiles) {
      o << "q" << sig10(level) << ": " << v.to_string() << "\n";
    }
    o << "n: " << result.n << "\n"
      << "seed: " << result.seed << "\n"
      << "generator: " << result.generator << "\n";
    if (premium) {
      o << "utility: " << pricing::to_string(*utility) << "\n"
        << "pi: " << sig10(premium->pi) << "\n"
        << "premium: " << premium->premium.to_string() << "\n";
    }
    text = o.str();
  }
  Output{out, a.out}.emit(text);
  return kOk;
}

int cmd_export_dot(const std::string& path, const std::optional<std::string>& out_path,
                   std::ostream& out) {
  const auto model = erd::parse_org(inputs::read_file(path));
  Output{out, out_path}.emit(erd::export_dot(model));
  return kOk;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Layered cyber insurance quoting from organization and maturity models",
               "cyberquote"};
  app.require_subcommand(1);
  app.footer(
      "Option values given on the command line override values read from input files, which "
      "override built-in defaults. Exit codes: 0 ok, 1 validation, 2 format, 3 numerical, "
      "4 usage.");

  std::string org_path;
  std::string format = "text";
  auto* validate = app.add_subcommand("validate", "Check an organization model");
  validate->add_option("org", org_path, "Organization model file")->required();
  add_format(validate, format);

  std::optional<std::string> model_path;
  std::vector<std::string> assess_paths;
  int max_level = 0;
  auto* assess = app.add_subcommand("assess", "Score maturity assessments");
  assess->add_option("--model", model_path, "Maturity model CSV (default: built-in CMMC 2.0)");
  assess->add_option("--assess", assess_paths, "Assessment files")
      ->required()
      ->delimiter(',');
  assess->add_option("--max-level", max_level, "Highest maturity level considered (0: all)")
      ->check(CLI::NonNegativeNumber);
  add_format(assess, format);

  QuoteArgs qa;
  auto* quote = app.add_subcommand("quote", "Price the three layers of an organization");
  add_quote_inputs(quote, qa);
  quote->add_option("--scenarios", qa.scenarios, "Scenario file, or one per layer")
      ->required()
      ->delimiter(',')
      ->expected(1, 3);
  quote->add_option("--utility", qa.utility, "linear | cara,a=<coefficient>")
      ->capture_default_str();
  add_sim_options(quote, qa);

  QuoteArgs aa;
  std::string claims_path;
  std::vector<std::string> adjuster_paths;
  auto* adjust = app.add_subcommand("adjust", "Settle claims against observed compliance");
  add_quote_inputs(adjust, aa);
  adjust->add_option("--claims", claims_path, "Claims CSV")->required();
  adjust->add_option("--adjuster", adjuster_paths, "Adjuster assessments")
      ->required()
      ->delimiter(',');

  SimulateArgs sa;
  auto* simulate = app.add_subcommand("simulate", "Monte Carlo loss distribution for one layer");
  simulate->add_option("--econ", sa.common.econ, "Economics CSV")->required();
  simulate->add_option("--assess", sa.assess, "Assessment for the simulated layer")->required();
  simulate->add_option("--dist,--scenarios", sa.dist, "Distribution block file")->required();
  simulate->add_option("--model", sa.common.model,
                       "Maturity model CSV (default: built-in CMMC 2.0)");
  simulate->add_option("-n,--draws", sa.n, "Draw count (overrides the file)")
      ->check(CLI::PositiveNumber);
  simulate->add_option("--utility", sa.utility, "Also price the layer: linear | cara,a=<a>");
  simulate->add_option("--max-level", sa.common.max_level,
                       "Highest maturity level considered (0: all)")
      ->check(CLI::NonNegativeNumber);
  add_sim_options(simulate, sa.common);
  add_format(simulate, sa.common.format);
  simulate->add_option("--out", sa.common.out, "Write the report to a file");

  std::optional<std::string> dot_out;
  auto* dot = app.add_subcommand("export-dot", "Render an organization model as Graphviz DOT");
  dot->add_option("org", org_path, "Organization model file")->required();
  dot->add_option("--out", dot_out, "Write to a file");

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kOk : kUsage;
  }

  try {
    if (*validate) return cmd_validate(org_path, format, out, err);
    if (*assess) return cmd_assess(model_path, assess_paths, max_level, format, out, err);
    if (*quote) return cmd_quote(qa, out, err);
    if (*adjust) return cmd_adjust(aa, claims_path, adjuster_paths, out, err);
    if (*simulate) return cmd_simulate(sa, out);
    if (*dot) return cmd_export_dot(org_path, dot_out, out);
  } catch (const UsageError& e) {
    err << "usage error: " << e.what() << "\n";
    return kUsage;
  } catch (const FormatError& e) {
    err << "format error: " << e.what() << "\n";
    return kFormat;
  } catch (const ValidationError& e) {
    err << "validation error: " << e.what() << "\n";
    return kValidation;
  } catch (const DomainError& e) {
    err << "domain error: " << e.what() << "\n";
    return kNumerical;
  } catch (const NumericalError& e) {
    err << "numerical error: " << e.what() << "\n";
    return kNumerical;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << "\n";
    return kValidation;
  }
  return kUsage;
}

}  // namespace cyberquote::cli
