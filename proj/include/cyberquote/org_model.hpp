#pragma once

#include <array>
#include <optional>
#include <set>
#include <string>
#include <string_view>
#include <vector>

namespace cyberquote {

// The three organizational strata, each priced separately.
enum class Layer : int { operations = 1, service = 2, systems = 3 };

inline constexpr std::array<Layer, 3> kAllLayers = {Layer::operations, Layer::service,
                                                    Layer::systems};

constexpr int layer_index(Layer l) noexcept { return static_cast<int>(l); }
std::string_view layer_name(Layer l) noexcept;
// Accepts 1..3; throws DomainError otherwise.
Layer layer_from_index(int index);
// Case-insensitive "operations"/"service"/"systems"; nullopt otherwise.
std::optional<Layer> layer_from_name(std::string_view name) noexcept;

}  // namespace cyberquote

namespace cyberquote::org {

struct EntityNode {
  std::string id;
  std::string display_name;
  Layer layer = Layer::operations;
  std::vector<std::string> attributes;

  bool operator==(const EntityNode&) const = default;
};

// An undirected hyperedge; endpoint order is kept as declared.
struct RelationshipEdge {
  std::string id;
  std::string label;
  std::vector<std::string> endpoints;
  std::vector<std::string> attributes;

  bool operator==(const RelationshipEdge&) const = default;
};

struct ZoneAssignment {
  std::set<std::string> criticality_members;
  std::set<std::string> sensitivity_members;

  bool operator==(const ZoneAssignment&) const = default;
};

struct SourceLocation {
  int line = 0;
  int column = 0;
};

struct OrgModel {
  std::string name;
  std::vector<EntityNode> entities;
  std::vector<RelationshipEdge> relationships;
  ZoneAssignment zones;

  const EntityNode* find_entity(std::string_view id) const noexcept;
};

// Structural equality: entities and relationships compared as sets keyed by id,
// so declaration order does not matter. Endpoint and attribute order does.
bool operator==(const OrgModel& a, const OrgModel& b);

enum class Severity { error, warning };

struct Diagnostic {
  Severity severity = Severity::error;
  std::string code;
  std::string message;
  std::string location;  // entity/relationship id, or "layer:<name>"
};

struct ValidationReport {
  std::vector<Diagnostic> diagnostics;

  std::size_t error_count() const noexcept;
  std::size_t warning_count() const noexcept;
  bool ok() const noexcept { return error_count() == 0; }
};

// Reports dangling endpoints, duplicate ids, short relationships, unknown zone
// members (errors) and empty layers (warnings). Never throws.
ValidationReport validate_model(const OrgModel& model);

std::vector<EntityNode> entities_in_layer(const OrgModel& model, Layer layer);

struct ZoneFlags {
  bool criticality = false;
  bool sensitivity = false;

  bool operator==(const ZoneFlags&) const = default;
};

ZoneFlags zone_flags(const OrgModel& model, std::string_view entity_id);

enum class Cia : unsigned { confidentiality = 1u, integrity = 2u, availability = 4u };

// Availability maps to criticality, confidentiality to sensitivity, integrity to both.
ZoneFlags cia_to_cs(std::initializer_list<Cia> requirements);
ZoneFlags cia_to_cs(const std::set<Cia>& requirements);

// Undirected transitive closure over relationship hyperedges, including the start.
std::set<std::string> reachable_from(const OrgModel& model, std::string_view entity_id);

}  // namespace cyberquote::org
