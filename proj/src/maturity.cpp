#include "cyberquote/maturity.hpp"

#include <algorithm>
#include <cmath>
#include <set>
#include <sstream>

#include "cyberquote/csv.hpp"
#include "cyberquote/error.hpp"

namespace cyberquote::maturity {

const Practice* MaturityModelSpec::find_practice(std::string_view id) const noexcept {
  for (const auto& p : practices) {
    if (p.id == id) return &p;
  }
  return nullptr;
}

const Domain* MaturityModelSpec::find_domain(std::string_view code) const noexcept {
  for (const auto& d : domains) {
    if (d.code == code) return &d;
  }
  return nullptr;
}

std::size_t MaturityModelSpec::count_practices(int level,
                                               std::string_view domain_code) const noexcept {
  return static_cast<std::size_t>(
      std::count_if(practices.begin(), practices.end(), [&](const Practice& p) {
        return p.level == level && (domain_code.empty() || p.domain_code == domain_code);
      }));
}

namespace {

// "# key: value" -> (key, value); nullopt for ordinary comments.
std::optional<std::pair<std::string, std::string>> directive(std::string_view line) {
  if (line.empty() || line.front() != '#') return std::nullopt;
  line.remove_prefix(1);
  const auto colon = line.find(':');
  if (colon == std::string_view::npos) return std::nullopt;
  std::string key = csv::trim(line.substr(0, colon));
  if (key != "name" && key != "levels" && key != "domain") return std::nullopt;
  return std::make_pair(std::move(key), csv::trim(line.substr(colon + 1)));
}

std::string at_line(std::size_t line) { return "line " + std::to_string(line) + ": "; }

}  // namespace

MaturityModelSpec load_maturity_model(std::string_view csv_text) {
  MaturityModelSpec spec;
  std::optional<int> declared_levels;
  bool declared_domains = false;

  std::istringstream lines{std::string(csv_text)};
  std::string line;
  std::size_t line_no = 0;
  while (std::getline(lines, line)) {
    ++line_no;
    if (!line.empty() && line.back() == '\r') line.pop_back();
    auto d = directive(line);
    if (!d) continue;
    if (d->first == "name") {
      spec.name = d->second;
    } else if (d->first == "levels") {
      const auto n = csv::to_int(d->second, "levels");
      if (n < 1) throw FormatError(at_line(line_no) + "levels must be positive");
      declared_levels = static_cast<int>(n);
    } else {
      const auto comma = d->second.find(',');
      Domain dom;
      dom.code = csv::trim(d->second.substr(0, comma));
      dom.name = comma == std::string::npos ? dom.code : csv::trim(d->second.substr(comma + 1));
      if (dom.code.empty()) throw FormatError(at_line(line_no) + "empty domain code");
      if (spec.find_domain(dom.code)) {
        throw FormatError(at_line(line_no) + "domain '" + dom.code + "' declared twice");
      }
      spec.domains.push_back(std::move(dom));
      declared_domains = true;
    }
  }

  const auto rows = csv::parse(csv_text);
  bool header_seen = false;
  std::set<std::string> ids;
  int max_level = 0;
  for (const auto& row : rows) {
    if (row.fields.size() != 4) {
      throw FormatError(at_line(row.line) + "expected 4 columns (id,domain,level,description), got " +
                        std::to_string(row.fields.size()));
    }
    if (!header_seen) {
      header_seen = true;
      if (csv::trim(row.fields[0]) == "id" && csv::trim(row.fields[1]) == "domain") continue;
      throw FormatError(at_line(row.line) + "missing header id,domain,level,description");
    }
    Practice p;
    p.id = csv::trim(row.fields[0]);
    p.domain_code = csv::trim(row.fields[1]);
    p.description = row.fields[3];
    if (p.id.empty()) throw FormatError(at_line(row.line) + "empty practice id");
    try {
      const auto level = csv::to_int(row.fields[2], "level");
      if (level < 1) throw FormatError("level must be >= 1");
      p.level = static_cast<int>(level);
    } catch (const FormatError& e) {
      throw FormatError(at_line(row.line) + e.what());
    }
    if (!ids.insert(p.id).second) {
      throw FormatError(at_line(row.line) + "duplicate practice id '" + p.id + "'");
    }
    if (!spec.find_domain(p.domain_code)) {
      if (declared_domains) {
        throw FormatError(at_line(row.line) + "unknown domain '" + p.domain_code + "'");
      }
      spec.domains.push_back({p.domain_code, p.domain_code});
    }
    max_level = std::max(max_level, p.level);
    spec.practices.push_back(std::move(p));
  }
  spec.num_levels = declared_levels.value_or(std::max(max_level, 1));
  if (max_level > spec.num_levels) {
    throw FormatError("practice level " + std::to_string(max_level) + " exceeds declared levels " +
                      std::to_string(spec.num_levels));
  }
  return spec;
}

PracticeStatus practice_status_from_int(long value) {
  switch (value) {
    case -1:
      return PracticeStatus::not_met;
    case 0:
      return PracticeStatus::not_relevant;
    case 1:
      return PracticeStatus::met;
    default:
      throw DomainError("practice status must be -1, 0 or 1, got " + std::to_string(value));
  }
}

PracticeStatus LayerAssessment::status_of(std::string_view practice_id) const {
  auto it = practice_status.find(std::string(practice_id));
  return it == practice_status.end() ? PracticeStatus::not_relevant : it->second;
}

double LayerAssessment::weight_of(std::string_view domain_code) const {
  auto it = domain_weights.find(std::string(domain_code));
  return it == domain_weights.end() ? 1.0 : it->second;
}

LayerAssessment parse_assessment(std::string_view text) {
  LayerAssessment a;
  enum class Section { none, assessment, practice_status, domain_weights, objectives };
  Section section = Section::none;
  bool layer_set = false;

  std::istringstream lines{std::string(text)};
  std::string raw;
  std::size_t line_no = 0;
  while (std::getline(lines, raw)) {
    ++line_no;
    if (!raw.empty() && raw.back() == '\r') raw.pop_back();
    const std::string line = csv::trim(raw);
    if (line.empty() || line.front() == '#') continue;
    if (line.front() == '[') {
      if (line.back() != ']') throw FormatError(at_line(line_no) + "unterminated section header");
      const std::string name = csv::trim(std::string_view(line).substr(1, line.size() - 2));
      if (name == "assessment") {
        section = Section::assessment;
      } else if (name == "practice_status") {
        section = Section::practice_status;
      } else if (name == "domain_weights") {
        section = Section::domain_weights;
      } else if (name == "objectives") {
        section = Section::objectives;
      } else {
        throw FormatError(at_line(line_no) + "unknown section [" + name + "]");
      }
      continue;
    }
    const auto rows = csv::parse(line, false);
    if (rows.empty()) continue;
    const auto& f = rows.front().fields;
    if (f.size() != 2) {
      throw FormatError(at_line(line_no) + "expected 2 columns, got " + std::to_string(f.size()));
    }
    const std::string key = csv::trim(f[0]);
    const std::string value = csv::trim(f[1]);
    try {
      switch (section) {
        case Section::none:
          throw FormatError("row outside of any section");
        case Section::assessment:
          if (key == "key" && value == "value") break;
          if (key == "layer") {
            const auto idx = csv::to_int(value, "layer");
            if (idx < 1 || idx > 3) throw FormatError("layer must be 1, 2 or 3");
            a.layer = static_cast<Layer>(idx);
            layer_set = true;
          } else if (key == "role") {
            if (value == "underwriter") {
              a.role = AssessmentRole::underwriter;
            } else if (value == "adjuster") {
              a.role = AssessmentRole::adjuster;
            } else {
              throw FormatError("role must be underwriter or adjuster");
            }
          } else if (key == "maturity_override") {
            a.maturity_override = csv::to_double(value, "maturity_override");
          } else if (key == "objective_domain_matrix") {
            a.objective_domain_matrix_path = value;
          } else {
            throw FormatError("unknown assessment key '" + key + "'");
          }
          break;
        case Section::practice_status: {
          if (key == "id" && value == "value") break;
          const auto v = csv::to_int(value, "practice status");
          if (v < -1 || v > 1) throw FormatError("practice status must be -1, 0 or 1");
          if (!a.practice_status.emplace(key, practice_status_from_int(v)).second) {
            throw FormatError("practice '" + key + "' listed twice");
          }
          break;
        }
        case Section::domain_weights:
          if (key == "domain" && value == "weight") break;
          if (!a.domain_weights.emplace(key, csv::to_double(value, "domain weight")).second) {
            throw FormatError("domain '" + key + "' weighted twice");
          }
          break;
        case Section::objectives:
          if (key == "label" && value == "score") break;
          a.objectives.emplace_back(key, csv::to_double(value, "objective score"));
          break;
      }
    } catch (const FormatError& e) {
      throw FormatError(at_line(line_no) + e.what());
    }
  }
  if (!layer_set) throw FormatError("assessment does not name its layer");
  return a;
}

void validate_assessment(const LayerAssessment& a, const MaturityModelSpec& spec) {
  auto in_unit = [](double x) { return x >= 0.0 && x <= 1.0; };
  for (const auto& [id, status] : a.practice_status) {
    (void)status;
    if (!spec.find_practice(id)) throw UnknownPracticeError(id);
  }
  for (const auto& [code, w] : a.domain_weights) {
    if (!spec.find_domain(code)) throw ValidationError("unknown domain: " + code);
    if (!in_unit(w)) throw ValidationError("domain weight for " + code + " outside [0,1]");
  }
  for (const auto& [label, score] : a.objectives) {
    if (!in_unit(score)) throw ValidationError("objective score for " + label + " outside [0,1]");
  }
  if (a.maturity_override && !in_unit(*a.maturity_override)) {
    throw ValidationError("maturity_override outside [0,1]");
  }
}

double practice_score(const LayerAssessment& a, const MaturityModelSpec& spec, int max_level,
                      Warnings* warnings) {
  std::map<std::string, std::pair<long, long>> tally;  // domain -> (met, relevant)
  long relevant = 0;
  for (const auto& p : spec.practices) {
    if (p.level > max_level) continue;
    const PracticeStatus s = a.status_of(p.id);
    if (s == PracticeStatus::not_relevant) continue;
    ++relevant;
    auto& [met, rel] = tally[p.domain_code];
    ++rel;
    if (s == PracticeStatus::met) ++met;
  }
  if (relevant == 0) {
    if (warnings) warnings->push_back("no-relevant-practices: practice score defaults to 0");
    return 0.0;
  }
  double numerator = 0.0;
  double denominator = 0.0;
  for (const auto& [code, t] : tally) {
    const double w = a.weight_of(code);
    numerator += w * static_cast<double>(t.first);
    denominator += w * static_cast<double>(t.second);
  }
  if (denominator <= 0.0) {
    if (warnings) warnings->push_back("zero-weight: relevant practices carry no domain weight");
    return 0.0;
  }
  return std::clamp(numerator / denominator, 0.0, 1.0);
}

double objective_score(const LayerAssessment& a, Warnings* warnings) {
  if (a.objectives.empty()) {
    if (warnings) warnings->push_back("no-objectives: objective score defaults to 0");
    return 0.0;
  }
  // Sorted summation keeps the mean independent of declaration order.
  std::vector<double> scores;
  scores.reserve(a.objectives.size());
  for (const auto& [label, score] : a.objectives) {
    (void)label;
    scores.push_back(score);
  }
  std::sort(scores.begin(), scores.end());
  double sum = 0.0;
  for (double s : scores) sum += s;
  return sum / static_cast<double>(scores.size());
}

double normalize_maturity(int achieved_level, int num_levels) {
  if (num_levels < 1 || achieved_level < 0 || achieved_level > num_levels) {
    throw DomainError("normalize_maturity requires 0 <= level <= num_levels, num_levels >= 1 (got " +
                      std::to_string(achieved_level) + ", " + std::to_string(num_levels) + ")");
  }
  return static_cast<double>(achieved_level) / static_cast<double>(num_levels);
}

int level_achieved(const LayerAssessment& a, const MaturityModelSpec& spec, Warnings* warnings) {
  std::vector<bool> has_relevant(static_cast<std::size_t>(spec.num_levels) + 1, false);
  std::vector<bool> has_unmet(static_cast<std::size_t>(spec.num_levels) + 1, false);
  for (const auto& p : spec.practices) {
    const PracticeStatus s = a.status_of(p.id);
    if (s == PracticeStatus::not_relevant) continue;
    has_relevant[static_cast<std::size_t>(p.level)] = true;
    if (s == PracticeStatus::not_met) has_unmet[static_cast<std::size_t>(p.level)] = true;
  }
  int achieved = 0;
  std::vector<int> vacuous;
  for (int level = 1; level <= spec.num_levels; ++level) {
    if (has_unmet[static_cast<std::size_t>(level)]) break;
    if (!has_relevant[static_cast<std::size_t>(level)]) vacuous.push_back(level);
    achieved = level;
  }
  if (warnings && !vacuous.empty()) {
    std::string msg = "no-relevant-practices: level(s)";
    for (int l : vacuous) msg += " " + std::to_string(l);
    msg += " achieved vacuously";
    warnings->push_back(std::move(msg));
  }
  return achieved;
}

MuRecord mu(const LayerAssessment& a, const MaturityModelSpec& spec, int max_level) {
  if (max_level < 1 || max_level > spec.num_levels) {
    throw DomainError("max_level must lie in [1, " + std::to_string(spec.num_levels) + "]");
  }
  MuRecord r;
  r.layer = a.layer;
  r.p_bar = practice_score(a, spec, max_level, &r.warnings);
  r.o = objective_score(a, &r.warnings);
  if (a.maturity_override) {
    r.m = *a.maturity_override;
  } else {
    r.m = normalize_maturity(level_achieved(a, spec, &r.warnings), spec.num_levels);
  }
  std::map<std::string, std::pair<int, int>> counts;  // domain -> (met, relevant)
  for (const auto& p : spec.practices) {
    if (p.level > max_level) continue;
    const PracticeStatus s = a.status_of(p.id);
    if (s == PracticeStatus::not_relevant) continue;
    auto& [met, relevant] = counts[p.domain_code];
    ++relevant;
    if (s == PracticeStatus::met) ++met;
  }
  for (const auto& [code, c] : counts) {
    r.domain_coverage[code] = static_cast<double>(c.first) / static_cast<double>(c.second);
  }
  return r;
}

LayerAssessment with_practice_failed(const LayerAssessment& a, std::string_view practice_id) {
  LayerAssessment out = a;
  auto it = out.practice_status.find(std::string(practice_id));
  if (it != out.practice_status.end()) it->second = PracticeStatus::not_met;
  return out;
}

DomainObjectiveMatrix load_domain_objective_matrix(std::string_view csv_text) {
  const auto rows = csv::parse(csv_text);
  if (rows.empty()) throw FormatError("empty domain-objective matrix");
  DomainObjectiveMatrix m;
  const auto& header = rows.front().fields;
  if (header.size() < 2 || csv::trim(header[0]) != "Domain") {
    throw FormatError("domain-objective matrix header must be Domain,<objectives...>");
  }
  for (std::size_t j = 1; j < header.size(); ++j) m.objectives.push_back(csv::trim(header[j]));
  for (std::size_t i = 1; i < rows.size(); ++i) {
    const auto& f = rows[i].fields;
    if (f.size() != header.size()) {
      throw FormatError(at_line(rows[i].line) + "expected " + std::to_string(header.size()) +
                        " columns");
    }
    m.domains.push_back(csv::trim(f[0]));
    std::vector<double> cells;
    for (std::size_t j = 1; j < f.size(); ++j) {
      const double v = csv::to_double(f[j], "matrix cell");
      if (v < 0.0 || v > 1.0) throw FormatError(at_line(rows[i].line) + "cell outside [0,1]");
      cells.push_back(v);
    }
    m.cells.push_back(std::move(cells));
  }
  return m;
}

std::vector<ObjectiveBreakdown> objective_breakdown(const MuRecord& r,
                                                    const DomainObjectiveMatrix& matrix,
                                                    const LayerAssessment& a) {
  std::vector<ObjectiveBreakdown> out;
  for (std::size_t j = 0; j < matrix.objectives.size(); ++j) {
    double num = 0.0, den = 0.0;
    for (std::size_t d = 0; d < matrix.domains.size(); ++d) {
      auto it = r.domain_coverage.find(matrix.domains[d]);
      if (it == r.domain_coverage.end()) continue;
      const double w = matrix.cells[d][j] * a.weight_of(matrix.domains[d]);
      num += w * it->second;
      den += w;
    }
    ObjectiveBreakdown b{matrix.objectives[j], std::nullopt};
    if (den > 0.0) b.coverage = num / den;
    out.push_back(std::move(b));
  }
  return out;
}

}  // namespace cyberquote::maturity
