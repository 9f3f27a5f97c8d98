#pragma once

#include <random>
#include <string>

#include "cyberquote/org_model.hpp"

// Random valid organization models for round-trip properties.
namespace model_gen {

inline std::string random_ident(std::mt19937_64& rng, const std::string& prefix) {
  static const std::string tail =
      "abcdefghijklmnopqrstuvwxyzABCDEFGHIJKLMNOPQRSTUVWXYZ0123456789_-";
  std::uniform_int_distribution<std::size_t> len(1, 8);
  std::uniform_int_distribution<std::size_t> pick(0, tail.size() - 1);
  std::string s = prefix;
  for (std::size_t i = 0, n = len(rng); i < n; ++i) s += tail[pick(rng)];
  return s;
}

inline std::string random_text(std::mt19937_64& rng) {
  static const std::string pool[] = {"Finance", "Human Resources", "a \"quoted\" name",
                                     "back\\slash", "line\nbreak", "tab\there", "R&D",
                                     "caf\xc3\xa9", "# not a comment", "{braces}, [x]", ""};
  std::uniform_int_distribution<std::size_t> pick(0, std::size(pool) - 1);
  return pool[pick(rng)];
}

inline cyberquote::org::OrgModel random_model(std::mt19937_64& rng) {
  using namespace cyberquote;
  org::OrgModel m;
  m.name = random_text(rng);
  std::uniform_int_distribution<int> n_entities(0, 9);
  std::uniform_int_distribution<int> layer(1, 3);
  std::uniform_int_distribution<int> n_attrs(0, 3);
  std::bernoulli_distribution coin(0.5);

  const int ne = n_entities(rng);
  for (int i = 0; i < ne; ++i) {
    org::EntityNode e;
    e.id = random_ident(rng, "e" + std::to_string(i) + "_");
    e.display_name = coin(rng) ? e.id : random_text(rng);
    e.layer = layer_from_index(layer(rng));
    for (int a = 0, na = n_attrs(rng); a < na; ++a) e.attributes.push_back(random_text(rng));
    if (coin(rng)) m.zones.criticality_members.insert(e.id);
    if (coin(rng)) m.zones.sensitivity_members.insert(e.id);
    m.entities.push_back(std::move(e));
  }
  if (ne >= 2) {
    std::uniform_int_distribution<int> n_rels(0, 8);
    std::uniform_int_distribution<int> arity(2, 4);
    std::uniform_int_distribution<int> endpoint(0, ne - 1);
    for (int i = 0, nr = n_rels(rng); i < nr; ++i) {
      org::RelationshipEdge r;
      r.id = random_ident(rng, "r" + std::to_string(i) + "_");
      r.label = random_text(rng);
      for (int k = 0, ar = arity(rng); k < ar; ++k) {
        r.endpoints.push_back(m.entities[static_cast<std::size_t>(endpoint(rng))].id);
      }
      for (int a = 0, na = n_attrs(rng); a < na; ++a) r.attributes.push_back(random_text(rng));
      m.relationships.push_back(std::move(r));
    }
  }
  return m;
}

}  // namespace model_gen
