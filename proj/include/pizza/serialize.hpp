// serialize.hpp
// JSON forms of values, cuttings, tables and games. Exact values travel as
// {"exact": "num/den", "decimal": x}.

#pragma once

#include "pizza/analysis.hpp"
#include "pizza/game.hpp"
#include "pizza/solver.hpp"

#include <json.hpp>

namespace pizza {

using Json = nlohmann::ordered_json;

inline std::string fraction_string(const Rational& r) {
  return numerator(r).str() + "/" + denominator(r).str();
}

inline Json to_json(const Rational& r) { return Json{{"exact", fraction_string(r)}, {"decimal", to_double(r)}}; }

/// Accepts "a/b", "a", decimals and JSON numbers (integers only, to stay exact).
inline Rational rational_from_json(const Json& j) {
  if (j.is_string()) return parse_rational(j.get<std::string>());
  if (j.is_number_integer()) return Rational(j.get<std::int64_t>());
  if (j.is_object() && j.contains("exact")) return parse_rational(j.at("exact").get<std::string>());
  throw std::invalid_argument("expected an exact value (string or integer)");
}

inline Json to_json(const Cutting& P) {
  Json slices = Json::array();
  for (const auto& s : P.slices()) slices.push_back(fraction_string(s));
  return Json{{"n", P.size()}, {"slices", slices}, {"total", to_json(P.total())}, {"text", format_cutting(P)}};
}

/// A cutting given as text ("1,2,3" or "002020030300404") or as an array.
inline Cutting cutting_from_json(const Json& j) {
  if (j.is_string()) return parse_cutting(j.get<std::string>());
  if (j.is_array()) {
    std::vector<Rational> s;
    for (const auto& x : j) s.push_back(rational_from_json(x));
    return Cutting(std::move(s));
  }
  throw std::invalid_argument("cutting must be a string or an array of sizes");
}

inline Json to_json(const Turn& t) {
  return Json{{"turn", t.number}, {"player", name(t.player)}, {"index", t.index}, {"kind", name(t.kind)}};
}

inline Json turns_json(std::span<const Turn> turns) {
  Json out = Json::array();
  for (const auto& t : turns) out.push_back(to_json(t));
  return out;
}

inline Json to_json(const GameRecord& g) {
  return Json{{"cutting", format_cutting(g.cutting)},
              {"moves", turns_json(g.turns)},
              {"gains", {{"alice", to_json(g.alice_gain)}, {"bob", to_json(g.bob_gain)}}},
              {"jumps", {{"alice", g.jumps(Player::Alice)}, {"bob", g.jumps(Player::Bob)}}}};
}

inline Json to_json(const Position& pos) {
  Json j{{"turn", pos.turn()},
         {"to_move", pos.finished() ? Json(nullptr) : Json(name(pos.to_move()))},
         {"remaining", {{"start", pos.start()}, {"length", pos.length()}}},
         {"jumps", {{"alice", pos.jumps(Player::Alice)}, {"bob", pos.jumps(Player::Bob)}}}};
  j["legal_moves"] = pos.finished() ? Json::array() : Json(legal_moves(pos));
  return j;
}

/// Every arc (start, length) with its value and stored choice.
inline Json to_json(const ValueTable& t) {
  std::size_t n = t.slices();
  Json values = Json::array();
  for (std::size_t len = 1; len < n; ++len)
    for (std::size_t s = 0; s < n; ++s)
      values.push_back(Json{{"start", s}, {"length", len}, {"value", fraction_string(t.value(s, len))},
                            {"policy", name(t.policy(s, len))}});
  return Json{{"n", n},
              {"positions", t.positions()},
              {"alice", to_json(t.alice_value())},
              {"bob", to_json(t.bob_value())},
              {"policy", values}};
}

/// Potentials and the half-circle overlay of an odd cutting, indexed by
/// pizza slice.
inline Json potentials_json(const Cutting& P) {
  if (P.size() % 2 == 0) return nullptr;
  auto V = characteristic_cycle(P);
  auto table = potential_table(std::span<const Rational>(V.elements));
  CycleIndexMap map(P.size());
  Json per_slice = Json::array();
  for (std::size_t i = 0; i < P.size(); ++i) per_slice.push_back(fraction_string(table.element[map.to_cycle(i)]));
  Json cycle = Json::array();
  for (const auto& v : V.elements) cycle.push_back(fraction_string(v));
  return Json{{"cycle", cycle},
              {"slice_potentials", per_slice},
              {"potential", to_json(table.cycle)},
              {"best_slice", map.to_pizza(table.argmax)},
              {"min_half_circle", {{"start", table.min_half_circle}, {"length", half_circle_length(P.size())}}}};
}

}  // namespace pizza
