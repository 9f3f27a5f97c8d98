#include "cyberquote/org_model.hpp"

#include <algorithm>
#include <cctype>
#include <deque>
#include <map>
#include <unordered_map>

#include "cyberquote/error.hpp"

namespace cyberquote {

std::string_view layer_name(Layer l) noexcept {
  switch (l) {
    case Layer::operations:
      return "Operations";
    case Layer::service:
      return "Service";
    case Layer::systems:
      return "Systems";
  }
  return "?";
}

Layer layer_from_index(int index) {
  if (index < 1 || index > 3) {
    throw DomainError("layer index must be 1, 2 or 3, got " + std::to_string(index));
  }
  return static_cast<Layer>(index);
}

std::optional<Layer> layer_from_name(std::string_view name) noexcept {
  std::string lower(name);
  std::transform(lower.begin(), lower.end(), lower.begin(),
                 [](unsigned char c) { return static_cast<char>(std::tolower(c)); });
  if (lower == "operations") return Layer::operations;
  if (lower == "service") return Layer::service;
  if (lower == "systems") return Layer::systems;
  return std::nullopt;
}

}  // namespace cyberquote

namespace cyberquote::org {

const EntityNode* OrgModel::find_entity(std::string_view id) const noexcept {
  for (const auto& e : entities) {
    if (e.id == id) return &e;
  }
  return nullptr;
}

namespace {

template <typename T>
std::vector<const T*> sorted_by_id(const std::vector<T>& items) {
  std::vector<const T*> out;
  out.reserve(items.size());
  for (const auto& item : items) out.push_back(&item);
  std::stable_sort(out.begin(), out.end(),
                   [](const T* a, const T* b) { return a->id < b->id; });
  return out;
}

template <typename T>
bool same_items(const std::vector<T>& a, const std::vector<T>& b) {
  if (a.size() != b.size()) return false;
  const auto sa = sorted_by_id(a);
  const auto sb = sorted_by_id(b);
  for (std::size_t i = 0; i < sa.size(); ++i) {
    if (!(*sa[i] == *sb[i])) return false;
  }
  return true;
}

}  // namespace

bool operator==(const OrgModel& a, const OrgModel& b) {
  return a.name == b.name && a.zones == b.zones && same_items(a.entities, b.entities) &&
         same_items(a.relationships, b.relationships);
}

std::size_t ValidationReport::error_count() const noexcept {
  return static_cast<std::size_t>(
      std::count_if(diagnostics.begin(), diagnostics.end(),
                    [](const Diagnostic& d) { return d.severity == Severity::error; }));
}

std::size_t ValidationReport::warning_count() const noexcept {
  return diagnostics.size() - error_count();
}

ValidationReport validate_model(const OrgModel& model) {
  ValidationReport report;
  auto error = [&](std::string code, std::string message, std::string location) {
    report.diagnostics.push_back(
        {Severity::error, std::move(code), std::move(message), std::move(location)});
  };

  std::map<std::string, int> entity_ids;
  for (const auto& e : model.entities) {
    if (e.id.empty()) {
      error("empty-id", "entity with empty id", "");
      continue;
    }
    if (++entity_ids[e.id] == 2) {
      error("duplicate-id", "entity '" + e.id + "' declared more than once", e.id);
    }
  }

  std::map<std::string, int> rel_ids;
  for (const auto& r : model.relationships) {
    if (r.id.empty()) {
      error("empty-id", "relationship with empty id", "");
    } else if (++rel_ids[r.id] == 2) {
      error("duplicate-id", "relationship '" + r.id + "' declared more than once", r.id);
    }
    if (r.endpoints.size() < 2) {
      error("arity", "relationship '" + r.id + "' needs at least two endpoints", r.id);
    }
    for (const auto& ep : r.endpoints) {
      if (!entity_ids.contains(ep)) {
        error("dangling-endpoint",
              "relationship '" + r.id + "' references undeclared entity '" + ep + "'", r.id);
      }
    }
  }

  auto check_zone = [&](const std::set<std::string>& members, const char* zone) {
    for (const auto& id : members) {
      if (!entity_ids.contains(id)) {
        error("unknown-zone-member",
              std::string(zone) + " zone references undeclared entity '" + id + "'", id);
      }
    }
  };
  check_zone(model.zones.criticality_members, "criticality");
  check_zone(model.zones.sensitivity_members, "sensitivity");

  for (Layer layer : kAllLayers) {
    const bool any = std::any_of(model.entities.begin(), model.entities.end(),
                                 [&](const EntityNode& e) { return e.layer == layer; });
    if (!any) {
      report.diagnostics.push_back({Severity::warning, "empty-layer",
                                    std::string(layer_name(layer)) + " layer has no entities",
                                    "layer:" + std::string(layer_name(layer))});
    }
  }
  return report;
}

std::vector<EntityNode> entities_in_layer(const OrgModel& model, Layer layer) {
  std::vector<EntityNode> out;
  std::copy_if(model.entities.begin(), model.entities.end(), std::back_inserter(out),
               [&](const EntityNode& e) { return e.layer == layer; });
  return out;
}

ZoneFlags zone_flags(const OrgModel& model, std::string_view entity_id) {
  if (model.find_entity(entity_id) == nullptr) {
    throw UnknownEntityError(std::string(entity_id));
  }
  const std::string id(entity_id);
  return {model.zones.criticality_members.contains(id),
          model.zones.sensitivity_members.contains(id)};
}

ZoneFlags cia_to_cs(const std::set<Cia>& requirements) {
  ZoneFlags flags;
  for (Cia r : requirements) {
    switch (r) {
      case Cia::availability:
        flags.criticality = true;
        break;
      case Cia::confidentiality:
        flags.sensitivity = true;
        break;
      case Cia::integrity:
        flags.criticality = true;
        flags.sensitivity = true;
        break;
    }
  }
  return flags;
}

ZoneFlags cia_to_cs(std::initializer_list<Cia> requirements) {
  return cia_to_cs(std::set<Cia>(requirements));
}

std::set<std::string> reachable_from(const OrgModel& model, std::string_view entity_id) {
  if (model.find_entity(entity_id) == nullptr) {
    throw UnknownEntityError(std::string(entity_id));
  }
  // entity id -> indices of relationships touching it
  std::unordered_map<std::string, std::vector<std::size_t>> incident;
  for (std::size_t r = 0; r < model.relationships.size(); ++r) {
    for (const auto& ep : model.relationships[r].endpoints) incident[ep].push_back(r);
  }
  std::set<std::string> seen{std::string(entity_id)};
  std::vector<bool> edge_used(model.relationships.size(), false);
  std::deque<std::string> queue{std::string(entity_id)};
  while (!queue.empty()) {
    const std::string current = std::move(queue.front());
    queue.pop_front();
    auto it = incident.find(current);
    if (it == incident.end()) continue;
    for (std::size_t r : it->second) {
      if (edge_used[r]) continue;
      edge_used[r] = true;
      for (const auto& ep : model.relationships[r].endpoints) {
        if (model.find_entity(ep) != nullptr && seen.insert(ep).second) queue.push_back(ep);
      }
    }
  }
  return seen;
}

}  // namespace cyberquote::org
