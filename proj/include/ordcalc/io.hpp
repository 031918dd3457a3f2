#pragma once

// JSON documents for sequences, step sets, trees and multisets.  Ordinal
// fields are expression strings (plain integers are accepted too).
//
//   sequence  {"segments":[{"kind":"explicit","values":["1","w"]},
//                          {"kind":"repeat","value":"w1","length":"w"}]}
//   steps     {"mode":"selected","natural_steps":[{"segment":0,"offset":1}]}
//             {"mode":"all-natural"} / {"mode":"all-ordinary"}
//   tree      {"children":[{"multiplicity":"omega","tree":{"children":[]}}]}
//   multiset  {"entries":[{"value":"w1","multiplicity":"omega"}]}
//
// Multiplicities are positive integers, "omega" (ℵ₀) or "alephK" (ℵ_K).
// Structural problems raise ParseError; value-level problems (a zero-length
// run, a step outside the sequence) raise DomainError from validation.

#include <fstream>
#include <sstream>
#include <string>

#include <json.hpp>

#include "ordcalc/cardinal.hpp"
#include "ordcalc/error.hpp"
#include "ordcalc/invariant_sum.hpp"
#include "ordcalc/notation.hpp"
#include "ordcalc/sequence.hpp"
#include "ordcalc/tree_size.hpp"

namespace ordcalc {

using Json = nlohmann::json;

namespace detail {

inline const Json& field(const Json& j, const char* name) {
  if (!j.is_object() || !j.contains(name)) throw ParseError(std::string("missing field '") + name + "'");
  return j.at(name);
}

inline Ordinal ordinal_field(const Json& j) {
  if (j.is_number_unsigned()) return Ordinal(Natural(j.get<std::uint64_t>()));
  if (j.is_number_integer()) {
    if (j.get<std::int64_t>() < 0) throw ParseError("ordinals are nonnegative");
    return Ordinal(Natural(j.get<std::int64_t>()));
  }
  if (j.is_string()) return parse_ordinal(j.get<std::string>());
  throw ParseError("ordinal fields are expression strings or integers");
}

}  // namespace detail

inline Json read_json_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ParseError("cannot open '" + path + "'");
  try {
    return Json::parse(in);
  } catch (const Json::parse_error& e) {
    throw ParseError(path + ": " + e.what());
  }
}

// ---------------------------------------------------------------------------
// Cardinals

inline Cardinal cardinal_from_json(const Json& j) {
  if (j.is_number_integer()) {
    if (j.get<std::int64_t>() < 1) throw ParseError("multiplicity must be positive");
    return Cardinal(Natural(j.get<std::int64_t>()));
  }
  if (j.is_string()) {
    const auto s = j.get<std::string>();
    if (s == "omega") return Cardinal::aleph(0);
    if (s.rfind("aleph", 0) == 0 && s.size() > 5 && s.size() <= 14 &&
        s.find_first_not_of("0123456789", 5) == std::string::npos) {
      return Cardinal::aleph(static_cast<std::uint32_t>(std::stoul(s.substr(5))));
    }
  }
  throw ParseError("multiplicity must be a positive integer, \"omega\" or \"alephK\"");
}

inline Json to_json(const Cardinal& c) {
  if (c.is_finite()) return Json(c.count().convert_to<std::uint64_t>());
  return Json(to_string(c));
}

// ---------------------------------------------------------------------------
// Sequences

inline SeqDesc sequence_from_json(const Json& j) {
  const Json& segs = detail::field(j, "segments");
  if (!segs.is_array()) throw ParseError("'segments' must be an array");
  SeqDesc s;
  for (const auto& seg : segs) {
    const Json& kind = detail::field(seg, "kind");
    if (kind == "explicit") {
      const Json& values = detail::field(seg, "values");
      if (!values.is_array()) throw ParseError("'values' must be an array");
      Explicit e;
      for (const auto& v : values) e.values.push_back(detail::ordinal_field(v));
      s.segments.emplace_back(std::move(e));
    } else if (kind == "repeat") {
      s.segments.emplace_back(
          Repeat{detail::ordinal_field(detail::field(seg, "value")), detail::ordinal_field(detail::field(seg, "length"))});
    } else {
      throw ParseError("segment kind must be \"explicit\" or \"repeat\"");
    }
  }
  return s;
}

inline Json to_json(const SeqDesc& s) {
  Json segs = Json::array();
  for (const auto& seg : s.segments) {
    if (const auto* e = std::get_if<Explicit>(&seg)) {
      Json values = Json::array();
      for (const auto& v : e->values) values.push_back(print_ordinal(v));
      segs.push_back({{"kind", "explicit"}, {"values", values}});
    } else {
      const auto& r = std::get<Repeat>(seg);
      segs.push_back({{"kind", "repeat"}, {"value", print_ordinal(r.value)}, {"length", print_ordinal(r.length)}});
    }
  }
  return Json{{"segments", segs}};
}

// ---------------------------------------------------------------------------
// Step sets

inline StepSet steps_from_json(const Json& j) {
  const Json& mode = detail::field(j, "mode");
  if (mode == "all-natural") return StepSet::all_natural();
  if (mode == "all-ordinary") return StepSet::all_ordinary();
  if (mode != "selected") throw ParseError("step mode must be \"selected\", \"all-natural\" or \"all-ordinary\"");
  StepSet g = StepSet::selected({});
  if (!j.contains("natural_steps")) return g;
  const Json& steps = j.at("natural_steps");
  if (!steps.is_array()) throw ParseError("'natural_steps' must be an array");
  for (const auto& p : steps) {
    const Json& seg = detail::field(p, "segment");
    if (!seg.is_number_unsigned()) throw ParseError("step segment must be a nonnegative integer");
    g.natural_steps.push_back(Position{seg.get<std::size_t>(), detail::ordinal_field(detail::field(p, "offset"))});
  }
  return g;
}

inline Json to_json(const StepSet& g) {
  switch (g.mode) {
    case StepSet::Mode::AllNatural: return Json{{"mode", "all-natural"}};
    case StepSet::Mode::AllOrdinary: return Json{{"mode", "all-ordinary"}};
    case StepSet::Mode::Selected: break;
  }
  Json steps = Json::array();
  for (const auto& p : g.natural_steps) {
    Json offset = is_finite(p.offset) ? Json(finite_value(p.offset).convert_to<std::uint64_t>())
                                      : Json(print_ordinal(p.offset));
    steps.push_back({{"segment", p.segment}, {"offset", offset}});
  }
  return Json{{"mode", "selected"}, {"natural_steps", steps}};
}

// ---------------------------------------------------------------------------
// Trees

inline TreeDesc tree_from_json(const Json& j) {
  TreeDesc t;
  if (!j.is_object()) throw ParseError("a tree is an object with a 'children' array");
  if (!j.contains("children")) return t;
  const Json& children = j.at("children");
  if (!children.is_array()) throw ParseError("'children' must be an array");
  for (const auto& c : children) {
    const Cardinal k = c.contains("multiplicity") ? cardinal_from_json(c.at("multiplicity")) : Cardinal(1);
    t.children.push_back(TreeChild{tree_from_json(detail::field(c, "tree")), k});
  }
  return t;
}

inline Json to_json(const TreeDesc& t) {
  Json children = Json::array();
  for (const auto& c : t.children) children.push_back({{"multiplicity", to_json(c.multiplicity)}, {"tree", to_json(c.tree)}});
  return Json{{"children", children}};
}

// ---------------------------------------------------------------------------
// Multisets

inline OrdMultiset multiset_from_json(const Json& j) {
  const Json& entries = detail::field(j, "entries");
  if (!entries.is_array()) throw ParseError("'entries' must be an array");
  OrdMultiset m;
  for (const auto& e : entries) {
    m.entries.push_back(
        MultisetEntry{detail::ordinal_field(detail::field(e, "value")), cardinal_from_json(detail::field(e, "multiplicity"))});
  }
  return m;
}

inline Json to_json(const OrdMultiset& m) {
  Json entries = Json::array();
  for (const auto& e : m.entries) {
    entries.push_back({{"value", print_ordinal(e.value)}, {"multiplicity", to_json(e.multiplicity)}});
  }
  return Json{{"entries", entries}};
}

}  // namespace ordcalc
