// engines.hpp
// Name registry for every strategy a game can be played against.

#pragma once

#include "pizza/solver.hpp"
#include "pizza/strategies.hpp"

#include <string>
#include <vector>

namespace pizza {

struct EngineInfo {
  std::string name;
  bool plays_alice = false;
  bool plays_bob = false;
  std::optional<int> max_jumps;
  std::string description;
};

inline const std::vector<EngineInfo>& engines() {
  static const std::vector<EngineInfo> list{
      {"parity", true, false, 0, "even n: the heavier of the even and odd slices"},
      {"zero-jump", true, false, 0, "odd n: start at a maximum-potential slice, then shift"},
      {"one-jump-halfb", true, false, 1, "odd n: median of B, gain b/2 + min{c+d, f+a}"},
      {"one-jump-38", true, false, 1, "odd n: gain 3b/8 + e/2"},
      {"two-jump", true, false, 2, "odd n: gain b/2 + e/4 + min{c+d, f+a}"},
      {"small-odd", true, false, 1, "odd n <= 13: gain |P|/2"},
      {"dispatch-49", true, false, 2, "any n: gain at least 4|P|/9"},
      {"dispatch-716", true, false, 1, "any n: gain at least 7|P|/16"},
      {"bob-class", false, true, 1, "take the end of the heavier parity class, then shift"},
      {"optimal", true, true, std::nullopt, "exact minimax play from the value table"},
      {"random", true, true, std::nullopt, "seeded uniformly random legal moves"},
  };
  return list;
}

inline const EngineInfo& engine_info(const std::string& name) {
  for (const auto& e : engines())
    if (e.name == name) return e;
  throw std::invalid_argument("unknown engine '" + name + "'");
}

/// Builds the engine `name` to play `side` on P. `table` may carry an
/// already solved value table for the optimal engine.
inline Strategy make_engine(const std::string& name, const Cutting& P, Player side, std::uint64_t seed = 1,
                            std::shared_ptr<const ValueTable> table = nullptr) {
  const EngineInfo& info = engine_info(name);
  if ((side == Player::Alice && !info.plays_alice) || (side == Player::Bob && !info.plays_bob))
    throw std::invalid_argument("engine '" + name + "' cannot play " + pizza::name(side));
  if (name == "optimal") return optimal_strategy(table ? table : std::make_shared<const ValueTable>(P), side);
  if (name == "random") return random_strategy(seed);
  if (name == "bob-class") return bob_take_class(P);
  if (name == "parity") return alice_parity(P);
  if (name == "zero-jump") return alice_zero_jump(P);
  if (name == "one-jump-halfb") return alice_one_jump_halfb(P);
  if (name == "one-jump-38") return alice_one_jump_38(P);
  if (name == "two-jump") return alice_two_jump(P);
  if (name == "small-odd") return alice_small_odd(P);
  if (name == "dispatch-49") return alice_dispatch(P);
  return alice_dispatch_one_jump(P);
}

}  // namespace pizza
