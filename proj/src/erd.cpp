#include "cyberquote/erd.hpp"

#include <algorithm>
#include <cctype>
#include <map>
#include <optional>
#include <sstream>
#include <vector>

namespace cyberquote::erd {

ParseError::ParseError(int line, int column, std::string expected, std::string found)
    : FormatError("line " + std::to_string(line) + ", column " + std::to_string(column) +
                  ": expected " + expected + ", found " + found),
      line_(line),
      column_(column),
      expected_(std::move(expected)),
      found_(std::move(found)) {}

namespace {

enum class Tok { ident, string, punct, end };

struct Token {
  Tok kind = Tok::end;
  std::string text;
  int line = 1;
  int column = 1;
};

std::string describe(const Token& t) {
  switch (t.kind) {
    case Tok::ident:
      return "'" + t.text + "'";
    case Tok::string:
      return "string \"" + t.text + "\"";
    case Tok::punct:
      return "'" + t.text + "'";
    case Tok::end:
      return "end of input";
  }
  return "?";
}

bool ident_start(char c) { return std::isalpha(static_cast<unsigned char>(c)) || c == '_'; }
bool ident_char(char c) {
  return std::isalnum(static_cast<unsigned char>(c)) || c == '_' || c == '-';
}

class Lexer {
 public:
  explicit Lexer(std::string text) : src_(std::move(text)) {}

  std::vector<Token> run() {
    std::vector<Token> out;
    while (true) {
      skip_space();
      Token t;
      t.line = line_;
      t.column = col_;
      if (pos_ >= src_.size()) {
        out.push_back(t);
        return out;
      }
      const char c = src_[pos_];
      if (ident_start(c)) {
        t.kind = Tok::ident;
        while (pos_ < src_.size() && ident_char(src_[pos_])) t.text += advance();
      } else if (c == '"') {
        t.kind = Tok::string;
        advance();
        t.text = read_string(t);
      } else if (std::string_view("{}[](),").find(c) != std::string_view::npos) {
        t.kind = Tok::punct;
        t.text = std::string(1, advance());
      } else {
        throw ParseError(line_, col_, "identifier, string or punctuation",
                         "'" + std::string(1, c) + "'");
      }
      out.push_back(std::move(t));
    }
  }

 private:
  char advance() {
    const char c = src_[pos_++];
    if (c == '\n') {
      ++line_;
      col_ = 1;
    } else {
      ++col_;
    }
    return c;
  }

  void skip_space() {
    while (pos_ < src_.size()) {
      const char c = src_[pos_];
      if (c == '#') {
        while (pos_ < src_.size() && src_[pos_] != '\n') advance();
      } else if (std::isspace(static_cast<unsigned char>(c))) {
        advance();
      } else {
        break;
      }
    }
  }

  std::string read_string(const Token& start) {
    std::string s;
    while (true) {
      if (pos_ >= src_.size() || src_[pos_] == '\n') {
        throw ParseError(start.line, start.column, "closing '\"'",
                         pos_ >= src_.size() ? "end of input" : "end of line");
      }
      const char c = advance();
      if (c == '"') return s;
      if (c != '\\') {
        s += c;
        continue;
      }
      if (pos_ >= src_.size()) throw ParseError(line_, col_, "escape sequence", "end of input");
      const int l = line_, col = col_;
      const char e = advance();
      switch (e) {
        case '"':
          s += '"';
          break;
        case '\\':
          s += '\\';
          break;
        case 'n':
          s += '\n';
          break;
        case 't':
          s += '\t';
          break;
        default:
          throw ParseError(l, col, "escape sequence (\\\" \\\\ \\n \\t)",
                           "'\\" + std::string(1, e) + "'");
      }
    }
  }

  std::string src_;
  std::size_t pos_ = 0;
  int line_ = 1;
  int col_ = 1;
};

struct IdentRef {
  std::string id;
  int line;
  int column;
};

class Parser {
 public:
  explicit Parser(std::vector<Token> tokens) : toks_(std::move(tokens)) {}

  org::OrgModel run() {
    org::OrgModel model;
    if (peek().kind == Tok::end) return model;
    expect_keyword("org", "keyword 'org'");
    model.name = expect(Tok::string, "organization name string").text;
    expect_punct("{");
    std::vector<bool> layer_seen(4, false);
    bool crit_seen = false, sens_seen = false;
    std::vector<IdentRef> zone_refs_c, zone_refs_s;
    std::vector<std::pair<std::size_t, std::vector<IdentRef>>> endpoint_refs;

    while (!(peek().kind == Tok::punct && peek().text == "}")) {
      const Token& t = peek();
      if (t.kind != Tok::ident) {
        throw ParseError(t.line, t.column, "layer block, zone block, 'rel' or '}'", describe(t));
      }
      if (auto layer = layer_keyword(t.text)) {
        const int idx = layer_index(*layer);
        if (layer_seen[idx]) {
          throw ParseError(t.line, t.column, "each layer block at most once",
                           "second '" + t.text + "' block");
        }
        layer_seen[idx] = true;
        next();
        parse_layer(model, *layer);
      } else if (t.text == "zone") {
        next();
        const Token& kind = peek();
        bool critical;
        if (kind.kind == Tok::ident && kind.text == "criticality") {
          critical = true;
        } else if (kind.kind == Tok::ident && kind.text == "sensitivity") {
          critical = false;
        } else {
          throw ParseError(kind.line, kind.column, "'criticality' or 'sensitivity'",
                           describe(kind));
        }
        bool& seen = critical ? crit_seen : sens_seen;
        if (seen) {
          throw ParseError(kind.line, kind.column, "each zone block at most once",
                           "second '" + kind.text + "' zone");
        }
        seen = true;
        next();
        expect_punct("{");
        auto& refs = critical ? zone_refs_c : zone_refs_s;
        refs.push_back(ident_ref());
        while (accept_punct(",")) refs.push_back(ident_ref());
        expect_punct("}");
      } else if (t.text == "rel") {
        next();
        org::RelationshipEdge rel;
        const IdentRef id = ident_ref();
        rel.id = id.id;
        if (!rel_ids_.emplace(rel.id, id).second) {
          throw ParseError(id.line, id.column, "unique relationship id",
                           "duplicate '" + rel.id + "'");
        }
        rel.label = expect(Tok::string, "relationship label string").text;
        expect_punct("(");
        std::vector<IdentRef> eps{ident_ref()};
        expect_punct(",");
        eps.push_back(ident_ref());
        while (accept_punct(",")) eps.push_back(ident_ref());
        expect_punct(")");
        for (const auto& e : eps) rel.endpoints.push_back(e.id);
        rel.attributes = maybe_attrs();
        endpoint_refs.emplace_back(model.relationships.size(), std::move(eps));
        model.relationships.push_back(std::move(rel));
      } else {
        throw ParseError(t.line, t.column, "layer block, zone block, 'rel' or '}'", describe(t));
      }
    }
    expect_punct("}");
    const Token& tail = peek();
    if (tail.kind != Tok::end) {
      throw ParseError(tail.line, tail.column, "end of input", describe(tail));
    }

    for (const auto& [index, refs] : endpoint_refs) {
      (void)index;
      for (const auto& r : refs) require_entity(r, "declared entity as endpoint");
    }
    for (const auto& r : zone_refs_c) {
      require_entity(r, "declared entity in zone");
      model.zones.criticality_members.insert(r.id);
    }
    for (const auto& r : zone_refs_s) {
      require_entity(r, "declared entity in zone");
      model.zones.sensitivity_members.insert(r.id);
    }
    return model;
  }

 private:
  static std::optional<Layer> layer_keyword(const std::string& s) {
    if (s == "operations") return Layer::operations;
    if (s == "service") return Layer::service;
    if (s == "systems") return Layer::systems;
    return std::nullopt;
  }

  void parse_layer(org::OrgModel& model, Layer layer) {
    expect_punct("{");
    while (!accept_punct("}")) {
      expect_keyword("entity", "'entity' or '}'");
      const IdentRef id = ident_ref();
      if (!entity_ids_.emplace(id.id, id).second) {
        throw ParseError(id.line, id.column, "unique entity id", "duplicate '" + id.id + "'");
      }
      org::EntityNode e;
      e.id = id.id;
      e.layer = layer;
      e.display_name = id.id;
      if (peek().kind == Tok::ident && peek().text == "as") {
        next();
        e.display_name = expect(Tok::string, "display name string").text;
      }
      e.attributes = maybe_attrs();
      model.entities.push_back(std::move(e));
    }
  }

  std::vector<std::string> maybe_attrs() {
    std::vector<std::string> attrs;
    if (!accept_punct("[")) return attrs;
    attrs.push_back(expect(Tok::string, "attribute string").text);
    while (accept_punct(",")) attrs.push_back(expect(Tok::string, "attribute string").text);
    expect_punct("]");
    return attrs;
  }

  void require_entity(const IdentRef& r, const char* what) const {
    if (!entity_ids_.contains(r.id)) {
      throw ParseError(r.line, r.column, what, "undeclared '" + r.id + "'");
    }
  }

  IdentRef ident_ref() {
    const Token& t = expect(Tok::ident, "identifier");
    return {t.text, t.line, t.column};
  }

  const Token& peek() const { return toks_[pos_]; }
  const Token& next() {
    const Token& t = toks_[pos_];
    if (pos_ + 1 < toks_.size()) ++pos_;
    return t;
  }

  const Token& expect(Tok kind, const std::string& what) {
    const Token& t = peek();
    if (t.kind != kind) throw ParseError(t.line, t.column, what, describe(t));
    return next();
  }

  void expect_keyword(const std::string& kw, const std::string& what) {
    const Token& t = peek();
    if (t.kind != Tok::ident || t.text != kw) throw ParseError(t.line, t.column, what, describe(t));
    next();
  }

  void expect_punct(const std::string& p) {
    const Token& t = peek();
    if (t.kind != Tok::punct || t.text != p) {
      throw ParseError(t.line, t.column, "'" + p + "'", describe(t));
    }
    next();
  }

  bool accept_punct(const std::string& p) {
    const Token& t = peek();
    if (t.kind == Tok::punct && t.text == p) {
      next();
      return true;
    }
    return false;
  }

  std::vector<Token> toks_;
  std::size_t pos_ = 0;
  std::map<std::string, IdentRef> entity_ids_;
  std::map<std::string, IdentRef> rel_ids_;
};

std::string normalize_newlines(std::string_view s) {
  std::string out;
  out.reserve(s.size());
  for (std::size_t i = 0; i < s.size(); ++i) {
    if (s[i] == '\r' && i + 1 < s.size() && s[i + 1] == '\n') continue;
    out += s[i];
  }
  return out;
}

std::string quote(std::string_view s) {
  std::string out = "\"";
  for (char c : s) {
    switch (c) {
      case '"':
        out += "\\\"";
        break;
      case '\\':
        out += "\\\\";
        break;
      case '\n':
        out += "\\n";
        break;
      case '\t':
        out += "\\t";
        break;
      default:
        out += c;
    }
  }
  out += '"';
  return out;
}

std::string attr_block(const std::vector<std::string>& attrs) {
  if (attrs.empty()) return {};
  std::string out = " [";
  for (std::size_t i = 0; i < attrs.size(); ++i) {
    if (i) out += ", ";
    out += quote(attrs[i]);
  }
  return out + "]";
}

std::string_view layer_keyword_of(Layer l) {
  switch (l) {
    case Layer::operations:
      return "operations";
    case Layer::service:
      return "service";
    case Layer::systems:
      return "systems";
  }
  return "";
}

// DOT ID: always quoted so arbitrary entity ids and labels are legal.
std::string dot_id(std::string_view s) {
  std::string out = "\"";
  for (char c : s) {
    if (c == '"' || c == '\\') out += '\\';
    if (c == '\n') {
      out += "\\n";
      continue;
    }
    out += c;
  }
  return out + "\"";
}

}  // namespace

org::OrgModel parse_org(std::string_view source) {
  Lexer lexer(normalize_newlines(source));
  Parser parser(lexer.run());
  return parser.run();
}

std::string serialize_org(const org::OrgModel& model) {
  std::ostringstream out;
  if (model.entities.empty() && model.relationships.empty() &&
      model.zones.criticality_members.empty() && model.zones.sensitivity_members.empty()) {
    out << "org " << quote(model.name) << " {}\n";
    return out.str();
  }
  out << "org " << quote(model.name) << " {\n";
  for (Layer layer : kAllLayers) {
    auto members = org::entities_in_layer(model, layer);
    std::sort(members.begin(), members.end(),
              [](const auto& a, const auto& b) { return a.id < b.id; });
    if (members.empty()) {
      out << "  " << layer_keyword_of(layer) << " {}\n";
      continue;
    }
    out << "  " << layer_keyword_of(layer) << " {\n";
    for (const auto& e : members) {
      out << "    entity " << e.id;
      if (e.display_name != e.id) out << " as " << quote(e.display_name);
      out << attr_block(e.attributes) << "\n";
    }
    out << "  }\n";
  }
  auto zone = [&](const char* kind, const std::set<std::string>& members) {
    if (members.empty()) return;
    out << "  zone " << kind << " { ";
    bool first = true;
    for (const auto& id : members) {
      if (!first) out << ", ";
      out << id;
      first = false;
    }
    out << " }\n";
  };
  zone("criticality", model.zones.criticality_members);
  zone("sensitivity", model.zones.sensitivity_members);

  std::vector<const org::RelationshipEdge*> rels;
  for (const auto& r : model.relationships) rels.push_back(&r);
  std::stable_sort(rels.begin(), rels.end(), [](auto* a, auto* b) { return a->id < b->id; });
  for (const auto* r : rels) {
    out << "  rel " << r->id << " " << quote(r->label) << " (";
    for (std::size_t i = 0; i < r->endpoints.size(); ++i) {
      if (i) out << ", ";
      out << r->endpoints[i];
    }
    out << ")" << attr_block(r->attributes) << "\n";
  }
  out << "}\n";
  return out.str();
}

std::string export_dot(const org::OrgModel& model) {
  std::ostringstream out;
  out << "digraph " << dot_id(model.name.empty() ? "org" : model.name) << " {\n";
  out << "  graph [rankdir=TB, compound=true];\n";
  out << "  node [fontname=\"Helvetica\"];\n";
  out << "  edge [arrowhead=none];\n";
  for (Layer layer : kAllLayers) {
    out << "  subgraph cluster_" << layer_keyword_of(layer) << " {\n";
    out << "    label=" << dot_id(std::string(layer_name(layer)) + " (" +
                                  std::to_string(layer_index(layer)) + ")")
        << ";\n";
    out << "    style=dashed;\n";
    for (const auto& e : org::entities_in_layer(model, layer)) {
      const bool c = model.zones.criticality_members.contains(e.id);
      const bool s = model.zones.sensitivity_members.contains(e.id);
      out << "    " << dot_id("e:" + e.id) << " [shape=box, label=" << dot_id(e.display_name);
      if (c || s) {
        const std::string_view fill = c && s ? kIntegrityFill : (c ? kCriticalityFill
                                                                   : kSensitivityFill);
        out << ", style=filled, fillcolor=" << dot_id(fill);
      }
      out << "];\n";
      for (std::size_t i = 0; i < e.attributes.size(); ++i) {
        const std::string node = "a:" + e.id + ":" + std::to_string(i);
        out << "    " << dot_id(node) << " [shape=ellipse, label=" << dot_id(e.attributes[i])
            << "];\n";
        out << "    " << dot_id("e:" + e.id) << " -> " << dot_id(node) << ";\n";
      }
    }
    out << "  }\n";
  }
  for (const auto& r : model.relationships) {
    const std::string node = "r:" + r.id;
    out << "  " << dot_id(node) << " [shape=diamond, label=" << dot_id(r.label) << "];\n";
    for (const auto& ep : r.endpoints) {
      out << "  " << dot_id(node) << " -> " << dot_id("e:" + ep) << ";\n";
    }
    for (std::size_t i = 0; i < r.attributes.size(); ++i) {
      const std::string attr = "a:" + node + ":" + std::to_string(i);
      out << "  " << dot_id(attr) << " [shape=ellipse, label=" << dot_id(r.attributes[i])
          << "];\n";
      out << "  " << dot_id(node) << " -> " << dot_id(attr) << ";\n";
    }
  }
  out << "}\n";
  return out.str();
}

}  // namespace cyberquote::erd
