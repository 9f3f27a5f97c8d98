#pragma once

#include <string>
#include <string_view>

#include "cyberquote/error.hpp"
#include "cyberquote/org_model.hpp"

// Textual description language for organization models.
//
//   org        := "org" STRING "{" (layerblock | zoneblock | relstmt)* "}"
//   layerblock := ("operations"|"service"|"systems") "{" entitydecl* "}"
//   entitydecl := "entity" IDENT ("as" STRING)? attrblock?
//   attrblock  := "[" STRING ("," STRING)* "]"
//   relstmt    := "rel" IDENT STRING "(" IDENT ("," IDENT)+ ")" attrblock?
//   zoneblock  := "zone" ("criticality"|"sensitivity") "{" IDENT ("," IDENT)* "}"
//
// IDENT = [A-Za-z_][A-Za-z0-9_-]*, STRING is double quoted with \" \\ \n \t escapes,
// '#' starts a comment running to end of line. Each layer and zone block may appear
// at most once.
namespace cyberquote::erd {

class ParseError : public FormatError {
 public:
  ParseError(int line, int column, std::string expected, std::string found);

  int line() const noexcept { return line_; }
  int column() const noexcept { return column_; }
  const std::string& expected() const noexcept { return expected_; }
  const std::string& found() const noexcept { return found_; }

 private:
  int line_;
  int column_;
  std::string expected_;
  std::string found_;
};

// Fail-fast: throws ParseError on the first syntax error or broken model invariant
// (duplicate id, undeclared endpoint or zone member). Empty input yields an empty model.
org::OrgModel parse_org(std::string_view source);

// Canonical text: layers in order, entities and relationships sorted by id, one
// declaration per line. parse_org(serialize_org(m)) == m for every valid model.
std::string serialize_org(const org::OrgModel& model);

inline constexpr std::string_view kCriticalityFill = "#f8cecc";  // red tint
inline constexpr std::string_view kSensitivityFill = "#dae8fc";  // blue tint
inline constexpr std::string_view kIntegrityFill = "#e1d5e7";    // purple tint

// Graphviz digraph: one cluster per layer, entities as boxes, relationships as
// diamonds, attributes as ellipses. Output is byte-stable for a given model.
std::string export_dot(const org::OrgModel& model);

}  // namespace cyberquote::erd
