#pragma once

// JSON module descriptions. A document looks like
//   {"field": {"p": 32003}, "vars": ["x1", "x2"], "order": "grevlex",
//    "module": {"shifts": [0, 1], "relations": [["x1", "x2^2"], ...]}}
// or, for a quotient ring, "ideal": ["x1^2", "x1*x2"] in place of "module".

#include <algorithm>
#include <cctype>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "json.hpp"

#include "cmdev/module.hpp"
#include "cmdev/text.hpp"

namespace cmdev {

using Json = nlohmann::ordered_json;

struct InputDescription {
  std::string name;
  RingPtr ring;
  /// True when the document used the ideal shorthand; printing keeps the form.
  bool ideal_form = false;
  std::vector<int> shifts;
  /// relations[r][c] is the entry of relation r in component c.
  std::vector<std::vector<Polynomial>> relations;

  PresentedModule module() const {
    FreeModule f(ring, shifts);
    std::vector<ModuleElement> rels;
    for (const auto& row : relations) rels.push_back(ModuleElement::from_entries(f, row));
    return PresentedModule(f, std::move(rels));
  }

  friend bool operator==(const InputDescription& a, const InputDescription& b) {
    if (a.name != b.name || !same_ring(a.ring, b.ring) || a.ideal_form != b.ideal_form || a.shifts != b.shifts ||
        a.relations.size() != b.relations.size())
      return false;
    for (std::size_t r = 0; r < a.relations.size(); ++r) {
      if (a.relations[r].size() != b.relations[r].size()) return false;
      for (std::size_t c = 0; c < a.relations[r].size(); ++c)
        if (!(a.relations[r][c] == b.relations[r][c])) return false;
    }
    return true;
  }
};

namespace detail {

/// 1-based line and column of byte offset `pos`.
inline std::pair<int, int> line_column(const std::string& text, std::size_t pos) {
  int line = 1, col = 1;
  for (std::size_t i = 0; i < pos && i < text.size(); ++i) {
    if (text[i] == '\n') {
      ++line;
      col = 1;
    } else {
      ++col;
    }
  }
  return {line, col};
}

class DocumentReader {
 public:
  explicit DocumentReader(const std::string& text) : text_(text) {}

  [[noreturn]] void fail(const std::string& path, const std::string& msg) const {
    throw InputError(path, msg);
  }

  /// Parses a polynomial string, mapping errors to positions in the document.
  Polynomial polynomial(const Json& v, const RingPtr& ring, const std::string& path) const {
    if (!v.is_string()) fail(path, "expected a polynomial string");
    const std::string s = v.get<std::string>();
    try {
      return parse_polynomial(s, ring);
    } catch (const ParseError& e) {
      const std::string msg = std::string(e.what()).substr(std::string(e.what()).find(": ") + 2);
      const std::size_t at = text_.find('"' + s + '"');
      if (at == std::string::npos) throw ParseError(path + ": " + msg, 1, e.column());
      auto [line, col] = line_column(text_, at + 1);
      throw ParseError(msg + " in " + path + " \"" + s + "\"", line, col + e.column() - 1);
    }
  }

 private:
  const std::string& text_;
};

inline void check_keys(const Json& obj, const std::vector<std::string>& allowed, const std::string& path,
                       const DocumentReader& r) {
  for (const auto& [key, value] : obj.items()) {
    (void)value;
    if (std::find(allowed.begin(), allowed.end(), key) == allowed.end()) r.fail(path, "unknown key '" + key + "'");
  }
}

}  // namespace detail

/// Parses a JSON module description. `order_override` replaces the document's order.
inline InputDescription parse_input(const std::string& text, const std::optional<std::string>& order_override = {}) {
  Json doc;
  try {
    doc = Json::parse(text);
  } catch (const Json::parse_error& e) {
    auto [line, col] = detail::line_column(text, e.byte == 0 ? 0 : e.byte - 1);
    std::string msg = e.what();
    if (auto p = msg.find("syntax error"); p != std::string::npos) msg = msg.substr(p);
    throw ParseError("malformed JSON: " + msg, line, col);
  }
  detail::DocumentReader r(text);
  if (!doc.is_object()) r.fail("document", "expected an object");
  detail::check_keys(doc, {"name", "comment", "field", "vars", "order", "module", "ideal"}, "document", r);

  InputDescription d;
  if (doc.contains("name")) {
    if (!doc["name"].is_string()) r.fail("name", "expected a string");
    d.name = doc["name"].get<std::string>();
  }
  std::uint64_t p = PrimeField::kDefaultPrime;
  if (doc.contains("field")) {
    const Json& f = doc["field"];
    if (!f.is_object()) r.fail("field", "expected an object");
    detail::check_keys(f, {"p"}, "field", r);
    if (f.contains("p")) {
      if (!f["p"].is_number_unsigned()) r.fail("field.p", "expected a positive integer");
      p = f["p"].get<std::uint64_t>();
    }
  }
  if (p < 3 || p >= (1u << 31) || !PrimeField::is_prime(p))
    r.fail("field.p", std::to_string(p) + " is not an odd prime below 2^31");

  if (!doc.contains("vars") || !doc["vars"].is_array() || doc["vars"].empty())
    r.fail("vars", "expected a nonempty array of variable names");
  std::vector<std::string> names;
  for (std::size_t i = 0; i < doc["vars"].size(); ++i) {
    const Json& v = doc["vars"][i];
    const std::string path = "vars[" + std::to_string(i) + "]";
    if (!v.is_string()) r.fail(path, "expected a string");
    std::string s = v.get<std::string>();
    if (s.empty() || !(std::isalpha(static_cast<unsigned char>(s[0])) || s[0] == '_'))
      r.fail(path, "variable names start with a letter or '_'");
    for (char c : s)
      if (!(std::isalnum(static_cast<unsigned char>(c)) || c == '_')) r.fail(path, "invalid variable name '" + s + "'");
    if (std::find(names.begin(), names.end(), s) != names.end()) r.fail(path, "duplicate variable '" + s + "'");
    names.push_back(std::move(s));
  }
  if (names.size() > kMaxVars) r.fail("vars", "at most " + std::to_string(kMaxVars) + " variables are supported");

  std::string order = "grevlex";
  if (doc.contains("order")) {
    if (!doc["order"].is_string()) r.fail("order", "expected an order name");
    order = doc["order"].get<std::string>();
  }
  if (order_override) order = *order_override;
  OrderKind kind;
  try {
    kind = order_kind_from_string(order);
  } catch (const PreconditionError&) {
    r.fail("order", "unknown order '" + order + "' (grevlex, grlex, lex)");
  }
  d.ring = std::make_shared<const Ring>(PrimeField(static_cast<std::uint32_t>(p)), names, kind);

  const bool has_module = doc.contains("module"), has_ideal = doc.contains("ideal");
  if (has_module == has_ideal) r.fail("document", "exactly one of 'module' and 'ideal' is required");
  if (has_ideal) {
    d.ideal_form = true;
    d.shifts = {0};
    const Json& gens = doc["ideal"];
    if (!gens.is_array()) r.fail("ideal", "expected an array of polynomial strings");
    for (std::size_t i = 0; i < gens.size(); ++i) {
      const std::string path = "ideal[" + std::to_string(i) + "]";
      Polynomial g = r.polynomial(gens[i], d.ring, path);
      if (!g.is_homogeneous()) r.fail(path, "generator is not homogeneous");
      d.relations.push_back({std::move(g)});
    }
    return d;
  }

  const Json& m = doc["module"];
  if (!m.is_object()) r.fail("module", "expected an object");
  detail::check_keys(m, {"shifts", "relations"}, "module", r);
  if (!m.contains("shifts") || !m["shifts"].is_array()) r.fail("module.shifts", "expected an array of integers");
  for (std::size_t i = 0; i < m["shifts"].size(); ++i) {
    const Json& s = m["shifts"][i];
    if (!s.is_number_integer()) r.fail("module.shifts[" + std::to_string(i) + "]", "expected an integer");
    d.shifts.push_back(s.get<int>());
  }
  const FreeModule f(d.ring, d.shifts);
  if (m.contains("relations")) {
    const Json& rels = m["relations"];
    if (!rels.is_array()) r.fail("module.relations", "expected an array of rows");
    for (std::size_t i = 0; i < rels.size(); ++i) {
      const std::string path = "module.relations[" + std::to_string(i) + "]";
      if (!rels[i].is_array() || rels[i].size() != d.shifts.size())
        r.fail(path, "expected a row of " + std::to_string(d.shifts.size()) + " polynomial strings");
      std::vector<Polynomial> row;
      for (std::size_t c = 0; c < rels[i].size(); ++c)
        row.push_back(r.polynomial(rels[i][c], d.ring, path + "[" + std::to_string(c) + "]"));
      if (!ModuleElement::from_entries(f, row).is_homogeneous())
        r.fail(path, "relation is not homogeneous for the given shifts");
      d.relations.push_back(std::move(row));
    }
  }
  return d;
}

inline Json to_json(const InputDescription& d) {
  Json doc;
  if (!d.name.empty()) doc["name"] = d.name;
  doc["field"] = {{"p", d.ring->field().characteristic()}};
  doc["vars"] = d.ring->names();
  doc["order"] = to_string(d.ring->order());
  if (d.ideal_form) {
    Json gens = Json::array();
    for (const auto& row : d.relations) gens.push_back(to_string(row.at(0)));
    doc["ideal"] = gens;
  } else {
    Json rels = Json::array();
    for (const auto& row : d.relations) {
      Json jr = Json::array();
      for (const auto& e : row) jr.push_back(to_string(e));
      rels.push_back(jr);
    }
    doc["module"] = {{"shifts", d.shifts}, {"relations", rels}};
  }
  return doc;
}

inline std::string print_input(const InputDescription& d) { return to_json(d).dump(2) + "\n"; }

/// Description of an arbitrary module with the given name.
inline InputDescription describe(const PresentedModule& m, std::string name = {}) {
  InputDescription d;
  d.name = std::move(name);
  d.ring = m.ring();
  d.shifts = m.free_module().shifts();
  for (const auto& rel : m.relations()) {
    std::vector<TermVec> entries(m.rank());
    for (const auto& t : rel.terms()) entries[t.comp].push_back({t.mon, 0, t.coef});
    std::vector<Polynomial> row;
    for (auto& e : entries) row.push_back(Polynomial(m.ring(), std::move(e)));
    d.relations.push_back(std::move(row));
  }
  d.ideal_form = m.rank() == 1 && d.shifts[0] == 0;
  return d;
}

}  // namespace cmdev
