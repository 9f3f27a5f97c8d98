#pragma once

#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "cyberquote/org_model.hpp"

namespace cyberquote::maturity {

using Warnings = std::vector<std::string>;

struct Domain {
  std::string code;
  std::string name;
};

struct Practice {
  std::string id;
  std::string domain_code;
  int level = 1;
  std::string description;
};

struct MaturityModelSpec {
  std::string name;
  int num_levels = 1;
  std::vector<Domain> domains;
  std::vector<Practice> practices;  // file order

  const Practice* find_practice(std::string_view id) const noexcept;
  const Domain* find_domain(std::string_view code) const noexcept;
  std::size_t count_practices(int level, std::string_view domain_code = {}) const noexcept;
};

// Maturity model CSV with header `id,domain,level,description`. Optional leading
// directives in comment lines:
//   # name: <model name>
//   # levels: <num_levels>
//   # domain: <code>,<display name>
// When any domain directive is present the declared set is authoritative and a
// practice naming another domain is rejected; otherwise domains are collected from
// the rows in first-seen order. Throws FormatError.
MaturityModelSpec load_maturity_model(std::string_view csv_text);

enum class PracticeStatus : int { not_met = -1, not_relevant = 0, met = 1 };

PracticeStatus practice_status_from_int(long value);

enum class AssessmentRole { underwriter, adjuster };

struct LayerAssessment {
  Layer layer = Layer::operations;
  AssessmentRole role = AssessmentRole::underwriter;
  // Practices absent from the table count as not relevant.
  std::map<std::string, PracticeStatus> practice_status;
  // Domains absent from the table weigh 1.
  std::map<std::string, double> domain_weights;
  std::vector<std::pair<std::string, double>> objectives;
  std::optional<double> maturity_override;
  std::optional<std::string> objective_domain_matrix_path;

  PracticeStatus status_of(std::string_view practice_id) const;
  double weight_of(std::string_view domain_code) const;
};

// Sectioned assessment file:
//
//   [assessment]            key,value rows: layer, role, maturity_override,
//                           objective_domain_matrix
//   [practice_status]       id,value   (value in -1, 0, 1)
//   [domain_weights]        domain,weight
//   [objectives]            label,score
//
// A row equal to the section's column header is skipped. Throws FormatError.
LayerAssessment parse_assessment(std::string_view text);

// Throws ValidationError when the assessment references ids the model does not
// declare or holds values outside [0, 1].
void validate_assessment(const LayerAssessment& assessment, const MaturityModelSpec& spec);

// Domain-weighted fraction of relevant practices (status != 0, level <= max_level)
// that are met. Not-met practices add weight to the denominator only.
double practice_score(const LayerAssessment& assessment, const MaturityModelSpec& spec,
                      int max_level, Warnings* warnings = nullptr);

// Mean of the objective scores; 0 with a warning when there are none.
double objective_score(const LayerAssessment& assessment, Warnings* warnings = nullptr);

double normalize_maturity(int achieved_level, int num_levels);

// Largest L such that no practice at any level <= L is unmet. Levels without
// relevant practices count as achieved, with a warning.
int level_achieved(const LayerAssessment& assessment, const MaturityModelSpec& spec,
                   Warnings* warnings = nullptr);

struct MuRecord {
  Layer layer = Layer::operations;
  double p_bar = 0.0;
  double o = 0.0;
  double m = 0.0;
  std::map<std::string, double> domain_coverage;
  Warnings warnings;
};

MuRecord mu(const LayerAssessment& assessment, const MaturityModelSpec& spec, int max_level);

// Returns a copy of the assessment with the practice forced to not-met if it is listed.
LayerAssessment with_practice_failed(const LayerAssessment& assessment,
                                     std::string_view practice_id);

// Objective-to-domain gating matrix: header `Domain,<objective labels...>`.
struct DomainObjectiveMatrix {
  std::vector<std::string> objectives;
  std::vector<std::string> domains;
  std::vector<std::vector<double>> cells;  // cells[domain][objective], each in [0, 1]
};

DomainObjectiveMatrix load_domain_objective_matrix(std::string_view csv_text);

struct ObjectiveBreakdown {
  std::string objective;
  std::optional<double> coverage;  // nullopt when no gated domain has relevant practices
};

// Per objective: weighted mean of domain coverage, each domain weighted by
// matrix cell times the assessment's domain weight.
std::vector<ObjectiveBreakdown> objective_breakdown(const MuRecord& mu_record,
                                                    const DomainObjectiveMatrix& matrix,
                                                    const LayerAssessment& assessment);

}  // namespace cyberquote::maturity
