#pragma once

// JSON and CSV forms of tables, profiles and reports. Field names here are
// part of the external interface; keep them stable.

#include <ostream>
#include <sstream>
#include <string>

#include "json.hpp"

#include "bolext/analysis.hpp"
#include "bolext/classifier.hpp"
#include "bolext/extension.hpp"
#include "bolext/theta.hpp"

namespace bolext {

using nlohmann::json;

inline json tuple_json(const Tuple& t) {
  return json::array({t.alpha.name(), t.beta.name(), t.gamma.name(), t.delta.name()});
}

inline Tuple tuple_from_json(const json& j) {
  if (!j.is_array() || j.size() != 4) throw ValidationError("tuple must be an array of four map names");
  return {ThetaMap::parse(j[0].get<std::string>()), ThetaMap::parse(j[1].get<std::string>()),
          ThetaMap::parse(j[2].get<std::string>()), ThetaMap::parse(j[3].get<std::string>())};
}

template <BinaryTable T>
json rows_json(const T& t) {
  json rows = json::array();
  for (Element a = 0; a < t.size(); ++a) {
    json row = json::array();
    for (Element b = 0; b < t.size(); ++b) row.push_back(t(a, b));
    rows.push_back(std::move(row));
  }
  return rows;
}

inline json to_json(const MagmaTable& m) {
  json j{{"size", m.size()}, {"table", rows_json(m)}};
  if (m.origin()) j["origin"] = {{"group", m.origin()->group->label()}, {"tuple", tuple_json(m.origin()->tuple)}};
  return j;
}

/// Table part only; provenance is informational and not reconstructed.
inline MagmaTable magma_from_json(const json& j) {
  std::vector<std::vector<Element>> rows = j.at("table").get<std::vector<std::vector<Element>>>();
  if (j.contains("size") && j.at("size").get<std::size_t>() != rows.size())
    throw ValidationError("size field disagrees with table");
  return MagmaTable(CayleyTable::from_rows(rows));
}

inline json to_json(const LoopProfile& p) {
  json spectrum = json::object();
  for (auto [order, count] : p.order_spectrum) spectrum[std::to_string(order)] = count;
  return {{"size", p.size},
          {"center_size", p.center_size},
          {"order_spectrum", spectrum},
          {"exponent2_count", p.exponent2_count},
          {"associator_nontrivial", p.associator_nontrivial}};
}

inline json to_json(const Flags& f) {
  return {{"quasigroup", f.quasigroup}, {"loop", f.loop},           {"left_alternative", f.left_alternative},
          {"left_bol", f.left_bol},     {"right_bol", f.right_bol}, {"moufang", f.moufang},
          {"associative", f.associative}};
}

inline json to_json(const Verdict& v) {
  return {{"name", v.name},         {"statement", v.statement},   {"applicable", v.applicable},
          {"conforms", v.conforms}, {"mismatches", v.mismatches}, {"notes", v.notes}};
}

inline json to_json(const ClassificationReport& r) {
  json records = json::array();
  for (const auto& rec : r.records) {
    records.push_back({{"index", rec.tuple.index()},
                       {"tuple", tuple_json(rec.tuple)},
                       {"representative", rec.representative.index()},
                       {"flags", to_json(rec.flags)}});
  }
  json verdicts = json::array();
  for (const auto& v : r.verdicts) verdicts.push_back(to_json(v));
  return {{"group", r.group},
          {"scope", scope_name(r.scope)},
          {"assumptions_hold", r.assumptions_hold},
          {"records", records},
          {"summary", r.summary},
          {"summary_distinct", r.summary_distinct},
          {"verdicts", verdicts},
          {"iso_classes", r.iso_classes}};
}

inline json to_json(const ThetaProfile& p) {
  json orders = json::object();
  for (auto [o, c] : p.element_orders) orders[std::to_string(o)] = c;
  return {{"order", p.order},
          {"element_orders", orders},
          {"generated_by_yx_and_xy-", p.generated_by_swap_and_invert},
          {"isomorphism_type", p.isomorphism_type},
          {"is_quaternion", p.matches_quaternion}};
}

inline json to_json(const TheoremReport& r) {
  json verdicts = json::array();
  for (const auto& v : r.verdicts) verdicts.push_back(to_json(v));
  return {{"group", r.group},
          {"refused", r.refused},
          {"reason", r.reason},
          {"conforms", r.conforms()},
          {"theta", to_json(r.theta)},
          {"discrepancies", r.discrepancies},
          {"open_question_notes", r.open_notes},
          {"verdicts", verdicts}};
}

inline json to_json(const ExceptionalReport& r) {
  json entries = json::array();
  for (const auto& e : r.entries) entries.push_back({{"group", e.group}, {"tuple", tuple_json(e.tuple)}});
  return {{"groups", r.groups},
          {"group_isomorphic", r.group_iso},
          {"entries", entries},
          {"classes", r.classes},
          {"exceptional_classes", r.exceptional}};
}

inline void write_csv(std::ostream& out, const ClassificationReport& r) {
  out << "index,alpha,beta,gamma,delta,representative,quasigroup,loop,left_alternative,left_bol,right_bol,"
         "moufang,associative\n";
  for (const auto& rec : r.records) {
    const Flags& f = rec.flags;
    out << rec.tuple.index() << ',' << rec.tuple.alpha.name() << ',' << rec.tuple.beta.name() << ','
        << rec.tuple.gamma.name() << ',' << rec.tuple.delta.name() << ',' << rec.representative.index() << ','
        << f.quasigroup << ',' << f.loop << ',' << f.left_alternative << ',' << f.left_bol << ',' << f.right_bol
        << ',' << f.moufang << ',' << f.associative << '\n';
  }
}

/// 1-based labels with a rule between the G block and the barred block:
///
///   1 2 | 3 4
///   2 1 | 4 3
///   ----+----
///   3 4 | 1 2
///   4 3 | 2 1
template <BinaryTable T>
std::string render_blocks(const T& t) {
  const auto size = static_cast<Element>(t.size());
  const Element half = size / 2;
  const std::size_t w = std::to_string(size).size();
  auto cell = [&](Element v) {
    std::string s = std::to_string(v + 1);
    return std::string(w - s.size(), ' ') + s;
  };
  std::ostringstream os;
  const std::size_t left = half * (w + 1), right = (size - half) * (w + 1);
  for (Element a = 0; a < size; ++a) {
    if (a == half && half > 0) os << std::string(left, '-') << '+' << std::string(right, '-') << '\n';
    for (Element b = 0; b < size; ++b) {
      if (b == half && half > 0) os << " |";
      if (b) os << ' ';
      os << cell(t(a, b));
    }
    os << '\n';
  }
  return os.str();
}

}  // namespace bolext
