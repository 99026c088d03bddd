#pragma once

// JSON documents for every structure kind, with a canonical serialization:
// sorted keys, dense integer arrays, one table row per line. Congruence and
// equivalence families are stored as block-id arrays per projection, in
// least-representative form. parse(serialize(d)) is the identity and
// serialize(parse(t)) is byte-stable.

#include <memory>
#include <optional>
#include <sstream>
#include <fstream>
#include <string>
#include <variant>
#include <vector>

#include "json.hpp"

#include "finrest/action.hpp"
#include "finrest/core.hpp"
#include "finrest/em_set.hpp"
#include "finrest/etale.hpp"
#include "finrest/generators.hpp"
#include "finrest/matched_pair.hpp"
#include "finrest/report.hpp"
#include "finrest/restriction.hpp"

namespace finrest {

using json = nlohmann::json;

struct DocMeta {
  std::string name;
  std::string note;
};

using Payload = std::variant<FiniteMonoid, Semilattice, BooleanAlgebra, LeftRestrictionMonoid,
                             MatchedPair, SupportedAction, EmSet>;

struct StructureDocument {
  std::string kind;
  DocMeta meta;
  Payload payload;
};

// ---------------------------------------------------------------------------
// Canonical dump: objects and nested tables multi-line, scalar arrays inline.

namespace detail {

inline bool all_scalars(const json& a) {
  for (const auto& v : a)
    if (v.is_array() || v.is_object()) return false;
  return true;
}

inline void dump_canonical(const json& v, std::string& out, int indent) {
  std::string pad(indent, ' ');
  if (v.is_object()) {
    if (v.empty()) {
      out += "{}";
      return;
    }
    out += "{\n";
    bool first = true;
    for (auto it = v.begin(); it != v.end(); ++it) {
      if (!first) out += ",\n";
      first = false;
      out += pad + "  " + json(it.key()).dump() + ": ";
      dump_canonical(it.value(), out, indent + 2);
    }
    out += "\n" + pad + "}";
  } else if (v.is_array()) {
    if (v.empty() || all_scalars(v)) {
      out += v.dump();
      return;
    }
    out += "[\n";
    bool first = true;
    for (const auto& item : v) {
      if (!first) out += ",\n";
      first = false;
      out += pad + "  ";
      dump_canonical(item, out, indent + 2);
    }
    out += "\n" + pad + "]";
  } else {
    out += v.dump();
  }
}

inline const json& field(const json& j, const std::string& key, const std::string& where) {
  auto it = j.find(key);
  if (it == j.end()) fail_structural(where + ": missing field '" + key + "'");
  return *it;
}

inline int int_field(const json& j, const std::string& key, const std::string& where) {
  const json& v = field(j, key, where);
  if (!v.is_number_integer()) fail_structural(where + ": field '" + key + "' must be an integer");
  return v.get<int>();
}

inline std::vector<int> int_vector(const json& v, const std::string& where) {
  if (!v.is_array()) fail_structural(where + ": expected an array");
  std::vector<int> out;
  for (size_t i = 0; i < v.size(); ++i) {
    if (!v[i].is_number_integer())
      fail_structural(where + ": entry " + std::to_string(i) + " must be an integer");
    out.push_back(v[i].get<int>());
  }
  return out;
}

inline Table int_table(const json& v, const std::string& where) {
  if (!v.is_array()) fail_structural(where + ": expected an array of rows");
  Table out;
  for (size_t r = 0; r < v.size(); ++r)
    out.push_back(int_vector(v[r], where + " row " + std::to_string(r)));
  return out;
}

}  // namespace detail

inline std::string canonical_dump(const json& v) {
  std::string out;
  detail::dump_canonical(v, out, 0);
  out += "\n";
  return out;
}

// ---------------------------------------------------------------------------
// Per-kind payload serialization.

inline json monoid_to_json(const FiniteMonoid& m) {
  return json{{"size", m.size}, {"identity", m.identity}, {"mult", m.mult}};
}

inline FiniteMonoid monoid_from_json(const json& j, const std::string& where) {
  FiniteMonoid m;
  m.size = detail::int_field(j, "size", where);
  m.identity = detail::int_field(j, "identity", where);
  m.mult = detail::int_table(detail::field(j, "mult", where), where + ".mult");
  validate_monoid_shape(m);
  return m;
}

inline json semilattice_to_json(const Semilattice& e) {
  return json{{"size", e.size()}, {"top", e.top()}, {"meet", e.meet.mult}};
}

inline Semilattice semilattice_from_json(const json& j, const std::string& where) {
  Semilattice e;
  e.meet.size = detail::int_field(j, "size", where);
  e.meet.identity = detail::int_field(j, "top", where);
  e.meet.mult = detail::int_table(detail::field(j, "meet", where), where + ".meet");
  validate_monoid_shape(e.meet);
  return e;
}

inline json boolean_algebra_to_json(const BooleanAlgebra& b) {
  json j = semilattice_to_json(b.lattice);
  j["bottom"] = b.bottom;
  j["join"] = b.join;
  j["complement"] = b.complement;
  return j;
}

inline BooleanAlgebra boolean_algebra_from_json(const json& j, const std::string& where) {
  BooleanAlgebra b;
  b.lattice = semilattice_from_json(j, where);
  b.bottom = detail::int_field(j, "bottom", where);
  b.join = detail::int_table(detail::field(j, "join", where), where + ".join");
  b.complement = detail::int_vector(detail::field(j, "complement", where), where + ".complement");
  validate_boolean_algebra_shape(b);
  return b;
}

inline json lrm_to_json(const LeftRestrictionMonoid& s) {
  json j = monoid_to_json(s.monoid);
  j["plus"] = s.plus;
  if (s.zero) j["zero"] = *s.zero;
  return j;
}

inline LeftRestrictionMonoid lrm_from_json(const json& j, const std::string& where) {
  LeftRestrictionMonoid s;
  s.monoid = monoid_from_json(j, where);
  s.plus = detail::int_vector(detail::field(j, "plus", where), where + ".plus");
  if (j.contains("zero") && !j["zero"].is_null()) s.zero = detail::int_field(j, "zero", where);
  validate_lrm_shape(s);
  return s;
}

inline std::vector<Partition> partitions_from_json(const json& v, int count, int width,
                                                   const std::string& where) {
  if (!v.is_array() || static_cast<int>(v.size()) != count)
    fail_structural(where + ": expected " + std::to_string(count) + " partitions");
  std::vector<Partition> out;
  for (int i = 0; i < count; ++i) {
    Partition p{detail::int_vector(v[i], where + "[" + std::to_string(i) + "]")};
    validate_partition_shape(p, width);
    out.push_back(std::move(p));
  }
  return out;
}

inline json matched_pair_to_json(const MatchedPair& p) {
  json j;
  j["boolean"] = p.is_boolean();
  j["E"] = p.is_boolean() ? boolean_algebra_to_json(p.algebra()) : semilattice_to_json(p.E);
  j["M"] = monoid_to_json(p.M);
  j["act"] = p.act;
  json cong = json::array();
  for (const auto& part : p.cong) cong.push_back(part.block);
  j["cong"] = cong;
  return j;
}

inline MatchedPair matched_pair_from_json(const json& j, const std::string& where) {
  MatchedPair p;
  bool boolean = detail::field(j, "boolean", where).get<bool>();
  const json& ej = detail::field(j, "E", where);
  if (boolean) {
    auto b = boolean_algebra_from_json(ej, where + ".E");
    p.E = b.lattice;
    p.boolean_e = BooleanStructure{b.bottom, b.join, b.complement};
  } else {
    p.E = semilattice_from_json(ej, where + ".E");
  }
  p.M = monoid_from_json(detail::field(j, "M", where), where + ".M");
  p.act = detail::int_table(detail::field(j, "act", where), where + ".act");
  p.cong = partitions_from_json(detail::field(j, "cong", where), p.e_size(), p.m_size(), where + ".cong");
  validate_matched_pair_shape(p);
  return p;
}

inline json action_to_json(const SupportedAction& a) {
  json j;
  j["boolean"] = a.boolean_mode;
  j["lrm"] = lrm_to_json(*a.S);
  j["carrier"] = a.carrier;
  j["act"] = a.act;
  j["support"] = a.support;
  return j;
}

inline SupportedAction action_from_json(const json& j, const std::string& where) {
  SupportedAction a;
  a.boolean_mode = detail::field(j, "boolean", where).get<bool>();
  a.S = std::make_shared<const LeftRestrictionMonoid>(
      lrm_from_json(detail::field(j, "lrm", where), where + ".lrm"));
  a.carrier = detail::int_field(j, "carrier", where);
  a.act = detail::int_table(detail::field(j, "act", where), where + ".act");
  a.support = detail::int_vector(detail::field(j, "support", where), where + ".support");
  validate_action_shape(a);
  return a;
}

inline json em_set_to_json(const EmSet& y) {
  json j;
  j["boolean"] = y.boolean_flag;
  j["pair"] = matched_pair_to_json(*y.pair);
  j["carrier"] = y.carrier;
  j["act"] = y.act;
  json eq = json::array();
  for (const auto& part : y.eq) eq.push_back(part.block);
  j["eq"] = eq;
  return j;
}

inline EmSet em_set_from_json(const json& j, const std::string& where) {
  EmSet y;
  y.boolean_flag = detail::field(j, "boolean", where).get<bool>();
  y.pair = std::make_shared<const MatchedPair>(
      matched_pair_from_json(detail::field(j, "pair", where), where + ".pair"));
  y.carrier = detail::int_field(j, "carrier", where);
  y.act = detail::int_table(detail::field(j, "act", where), where + ".act");
  y.eq = partitions_from_json(detail::field(j, "eq", where), y.pair->e_size(), y.carrier, where + ".eq");
  validate_em_set_shape(y);
  return y;
}

// ---------------------------------------------------------------------------
// Documents.

inline json document_to_json(const StructureDocument& doc) {
  json j = std::visit(
      [](const auto& payload) -> json {
        using T = std::decay_t<decltype(payload)>;
        if constexpr (std::is_same_v<T, FiniteMonoid>) return monoid_to_json(payload);
        if constexpr (std::is_same_v<T, Semilattice>) return semilattice_to_json(payload);
        if constexpr (std::is_same_v<T, BooleanAlgebra>) return boolean_algebra_to_json(payload);
        if constexpr (std::is_same_v<T, LeftRestrictionMonoid>) return lrm_to_json(payload);
        if constexpr (std::is_same_v<T, MatchedPair>) return matched_pair_to_json(payload);
        if constexpr (std::is_same_v<T, SupportedAction>) return action_to_json(payload);
        if constexpr (std::is_same_v<T, EmSet>) return em_set_to_json(payload);
      },
      doc.payload);
  j["kind"] = doc.kind;
  j["name"] = doc.meta.name;
  if (!doc.meta.note.empty()) j["note"] = doc.meta.note;
  return j;
}

inline std::string serialize(const StructureDocument& doc) { return canonical_dump(document_to_json(doc)); }

inline StructureDocument document_from_json(const json& j) {
  if (!j.is_object()) fail_structural("document: expected a JSON object");
  StructureDocument doc;
  doc.kind = detail::field(j, "kind", "document").get<std::string>();
  doc.meta.name = j.contains("name") ? j["name"].get<std::string>() : "";
  doc.meta.note = j.contains("note") ? j["note"].get<std::string>() : "";
  const std::string& w = doc.kind;
  if (doc.kind == "monoid")
    doc.payload = monoid_from_json(j, w);
  else if (doc.kind == "semilattice")
    doc.payload = semilattice_from_json(j, w);
  else if (doc.kind == "boolean_algebra")
    doc.payload = boolean_algebra_from_json(j, w);
  else if (doc.kind == "lrm")
    doc.payload = lrm_from_json(j, w);
  else if (doc.kind == "matched_pair")
    doc.payload = matched_pair_from_json(j, w);
  else if (doc.kind == "action")
    doc.payload = action_from_json(j, w);
  else if (doc.kind == "em_set")
    doc.payload = em_set_from_json(j, w);
  else
    fail_structural("document: unknown kind '" + doc.kind + "'");
  return doc;
}

inline StructureDocument parse_document(const std::string& text) {
  json j;
  try {
    j = json::parse(text);
  } catch (const json::parse_error& e) {
    fail_structural(std::string("parse error: ") + e.what());
  }
  return document_from_json(j);
}

// ---------------------------------------------------------------------------
// Reports.

inline json report_to_json(const AxiomReport& r) {
  json entries = json::array();
  for (const auto& e : r.entries) {
    json je{{"axiom", e.axiom}, {"pass", e.pass}};
    if (!e.pass) je["witness"] = e.witness;
    if (!e.note.empty()) je["note"] = e.note;
    entries.push_back(je);
  }
  return json{{"kind", "axiom_report"},
              {"structure", r.structure},
              {"pass", r.ok()},
              {"entries", entries},
              {"seconds", r.seconds}};
}

// ---------------------------------------------------------------------------
// Built-in generators, addressed by spec strings such as "pt(2)",
// "sym_inv(2)", "powerset(3)", "powerset_lrm(2)", "trivial_plus(rz3)".

inline std::pair<std::string, std::string> split_generator_spec(const std::string& spec) {
  auto open = spec.find('(');
  if (open == std::string::npos) return {spec, ""};
  auto close = spec.rfind(')');
  if (close == std::string::npos || close < open)
    throw Error(Errc::usage, "malformed generator spec: " + spec);
  return {spec.substr(0, open), spec.substr(open + 1, close - open - 1)};
}

inline FiniteMonoid builtin_monoid(const std::string& name) {
  if (name == "c1") return cyclic_monoid(1);
  if (name == "c2") return cyclic_monoid(2);
  if (name == "c3") return cyclic_monoid(3);
  if (name == "c4") return cyclic_monoid(4);
  if (name == "rz3") return right_zero_monoid3();
  throw Error(Errc::usage, "unknown built-in monoid: " + name);
}

// A built-in monoid name, or a path to a monoid document.
inline FiniteMonoid monoid_argument(const std::string& arg) {
  try {
    return builtin_monoid(arg);
  } catch (const Error&) {
  }
  std::ifstream f(arg);
  if (!f) throw Error(Errc::usage, "unknown monoid '" + arg + "' (not built in, not a readable file)");
  std::ostringstream ss;
  ss << f.rdbuf();
  auto doc = parse_document(ss.str());
  if (!std::holds_alternative<FiniteMonoid>(doc.payload))
    throw Error(Errc::usage, "trivial_plus expects a monoid document");
  return std::get<FiniteMonoid>(doc.payload);
}

inline StructureDocument generate(const std::string& spec) {
  auto [name, arg] = split_generator_spec(spec);
  StructureDocument doc;
  doc.meta.name = spec;
  doc.meta.note = "generated";
  auto int_arg = [&]() {
    try {
      return std::stoi(arg);
    } catch (...) {
      throw Error(Errc::usage, "generator " + name + " needs an integer argument");
    }
  };
  if (name == "pt") {
    doc.kind = "lrm";
    doc.payload = pt(int_arg()).lrm;
  } else if (name == "sym_inv") {
    doc.kind = "lrm";
    doc.payload = sym_inv(int_arg()).lrm;
  } else if (name == "powerset") {
    doc.kind = "boolean_algebra";
    doc.payload = powerset(int_arg());
  } else if (name == "powerset_lrm" || name == "boolean_as_lrm") {
    doc.kind = "lrm";
    doc.payload = powerset_lrm(int_arg());
  } else if (name == "trivial_plus") {
    doc.kind = "lrm";
    doc.payload = trivial_plus(monoid_argument(arg));
  } else {
    throw Error(Errc::usage, "unknown generator: " + name);
  }
  return doc;
}

inline const std::vector<std::string>& generator_catalog() {
  static const std::vector<std::string> names = {
      "pt(n)",          "sym_inv(n)",        "powerset(k)",
      "powerset_lrm(k)", "boolean_as_lrm(k)", "trivial_plus(c1|c2|c3|c4|rz3|<monoid.json>)"};
  return names;
}

}  // namespace finrest
