// solver.hpp
// Exact solving: the quadratic value table over all arcs, the jump-limited
// variant, an unmemoised minimax oracle and best-response certification of
// fixed strategies.

#pragma once

#include "pizza/game.hpp"

#include <algorithm>
#include <memory>
#include <optional>
#include <span>
#include <stdexcept>
#include <variant>
#include <vector>

namespace pizza {

/// Optimal end for the player to move on an arc.
enum class Choice : std::uint8_t { Left, Right, Either };

inline const char* name(Choice c) {
  switch (c) {
    case Choice::Left: return "left";
    case Choice::Right: return "right";
    case Choice::Either: return "either";
  }
  return "?";
}

/// v(X) for every arc X = (start, length), 1 <= length <= n-1, filled by
/// increasing length with v(X) = |X| - min{v(X minus left end), v(X minus
/// right end)}.
template <class Int>
class BasicValueTable {
 public:
  explicit BasicValueTable(std::span<const Int> sizes) : n_(sizes.size()) {
    if (n_ == 0) throw std::invalid_argument("empty pizza");
    prefix_.assign(2 * n_ + 1, Int(0));
    for (std::size_t i = 0; i < 2 * n_; ++i) prefix_[i + 1] = prefix_[i] + sizes[i % n_];
    total_ = prefix_[n_];
    if (n_ == 1) return;
    values_.assign(n_ * n_, Int(0));
    policy_.assign(n_ * n_, Choice::Either);
    for (std::size_t s = 0; s < n_; ++s) values_[slot(s, 1)] = sizes[s];
    for (std::size_t len = 2; len < n_; ++len) {
      for (std::size_t s = 0; s < n_; ++s) {
        const Int& without_left = values_[slot((s + 1) % n_, len - 1)];
        const Int& without_right = values_[slot(s, len - 1)];
        Choice c = without_left < without_right   ? Choice::Left
                   : without_right < without_left ? Choice::Right
                                                  : Choice::Either;
        values_[slot(s, len)] = arc_size(s, len) - (c == Choice::Right ? without_right : without_left);
        policy_[slot(s, len)] = c;
      }
    }
  }

  std::size_t slices() const { return n_; }
  const Int& total() const { return total_; }

  Int arc_size(std::size_t start, std::size_t len) const { return prefix_[start + len] - prefix_[start]; }

  Int value(std::size_t start, std::size_t len) const {
    if (len == 0) return Int(0);
    if (len >= n_) return alice_value();
    return values_[slot(start % n_, len)];
  }

  Choice policy(std::size_t start, std::size_t len) const {
    if (len < 2 || len >= n_) return Choice::Either;
    return policy_[slot(start % n_, len)];
  }

  /// |P| minus the smallest value Bob can be left with after the first move.
  Int alice_value() const {
    if (n_ == 1) return total_;
    Int worst = values_[slot(1 % n_, n_ - 1)];
    for (std::size_t x = 1; x < n_; ++x) worst = std::min(worst, values_[slot((x + 1) % n_, n_ - 1)]);
    return total_ - worst;
  }

 private:
  std::size_t slot(std::size_t start, std::size_t len) const { return len * n_ + start - n_; }

  std::size_t n_;
  Int total_ = 0;
  std::vector<Int> prefix_;
  std::vector<Int> values_;
  std::vector<Choice> policy_;
};

/// Exact value table with values reported as rationals. Stores all
/// n^2 - n + 2 positions (the arcs plus the empty and full pizza).
class ValueTable {
 public:
  explicit ValueTable(const Cutting& P) : cutting_(P) {
    with_scaled_sizes(P, [&](const auto& s) {
      using Int = typename std::decay_t<decltype(s.values)>::value_type;
      table_ = BasicValueTable<Int>(std::span<const Int>(s.values));
      denominator_ = s.denominator;
    });
  }

  const Cutting& cutting() const { return cutting_; }
  std::size_t slices() const { return cutting_.size(); }
  std::size_t positions() const { return slices() * slices() - slices() + 2; }

  /// Best gain for the player to move on the arc; length n means the full pizza.
  Rational value(std::size_t start, std::size_t len) const {
    return std::visit([&](const auto& t) { return to_rational(t.value(start, len), denominator_); }, table_);
  }
  Choice policy(std::size_t start, std::size_t len) const {
    return std::visit([&](const auto& t) { return t.policy(start, len); }, table_);
  }
  Rational alice_value() const {
    return std::visit([&](const auto& t) { return to_rational(t.alice_value(), denominator_); }, table_);
  }
  Rational bob_value() const { return cutting_.total() - alice_value(); }

  /// What the mover secures by taking idx and then playing optimally.
  Rational move_value(const Position& pos, std::size_t idx) const {
    if (!is_legal(pos, idx)) throw IllegalMove("slice " + std::to_string(idx) + " is not takeable", pos.turn());
    return std::visit(
        [&](const auto& t) {
          std::size_t n = slices();
          if (pos.full_circle()) return to_rational(t.total() - t.value((idx + 1) % n, n - 1), denominator_);
          std::size_t next_start = idx == pos.left_end() ? (pos.start() + 1) % n : pos.start();
          auto here = t.arc_size(pos.start(), pos.length());
          return to_rational(here - t.value(next_start, pos.length() - 1), denominator_);
        },
        table_);
  }

  Rational position_value(const Position& pos) const {
    if (pos.finished()) return 0;
    return value(pos.start(), pos.length());
  }

  std::vector<std::size_t> optimal_moves(const Position& pos) const {
    std::vector<std::size_t> best;
    std::optional<Rational> top;
    for (std::size_t idx : legal_moves(pos)) {
      Rational v = move_value(pos, idx);
      if (!top || *top < v) {
        top = v;
        best.clear();
      }
      if (v == *top) best.push_back(idx);
    }
    std::sort(best.begin(), best.end());
    best.erase(std::unique(best.begin(), best.end()), best.end());
    return best;
  }

  std::vector<std::size_t> best_first_moves() const { return optimal_moves(Position(slices())); }

 private:
  Cutting cutting_;
  Integer denominator_ = 1;
  std::variant<BasicValueTable<std::int64_t>, BasicValueTable<Integer>> table_{
      BasicValueTable<std::int64_t>(std::span<const std::int64_t>(std::vector<std::int64_t>{0}))};
};

inline ValueTable solve_optimal(const Cutting& P) { return ValueTable(P); }

/// Optimal play for either side from the table. Ties go to the Shift; on
/// turn 1 to the largest slice, then the smallest index.
inline Strategy optimal_strategy(std::shared_ptr<const ValueTable> table, Player side = Player::Alice) {
  Strategy s;
  s.name = "optimal";
  s.declared_gain = side == Player::Alice ? table->alice_value() : table->bob_value();
  s.next_move = [table](std::span<const Turn>, const Position& pos) -> std::size_t {
    auto best = table->optimal_moves(pos);
    if (pos.full_circle()) {
      const auto& sizes = table->cutting().slices();
      std::size_t pick = best.front();
      for (std::size_t idx : best)
        if (sizes[pick] < sizes[idx]) pick = idx;
      return pick;
    }
    std::size_t shift = shift_move(pos);
    return std::find(best.begin(), best.end(), shift) != best.end() ? shift : best.front();
  };
  return s;
}

inline Strategy optimal_strategy(const Cutting& P, Player side = Player::Alice) {
  return optimal_strategy(std::make_shared<const ValueTable>(P), side);
}

inline GameRecord optimal_game(const Cutting& P) {
  auto table = std::make_shared<const ValueTable>(P);
  return play_game(P, optimal_strategy(table, Player::Alice), optimal_strategy(table, Player::Bob));
}

/// Alice's jumps when both players follow the stored policy.
inline int optimal_jump_count(const Cutting& P) { return optimal_game(P).jumps(Player::Alice); }

// ---------------------------------------------------------------------------
// Jump-limited solving

/// Alice's optimal gain when `limited` may jump at most `budget` times (the
/// other player is unrestricted). Streams arcs by length: O(n^2 J) time,
/// O(n J) memory.
template <class Int>
Int solve_jump_limited_scaled(std::span<const Int> sizes, int budget, Player limited = Player::Alice) {
  std::size_t n = sizes.size();
  if (budget < 0) throw std::invalid_argument("negative jump budget");
  if (n == 1) return sizes[0];
  auto J = static_cast<std::size_t>(budget);
  std::vector<Int> prefix(2 * n + 1, Int(0));
  for (std::size_t i = 0; i < 2 * n; ++i) prefix[i + 1] = prefix[i] + sizes[i % n];
  // Layer index: (start * 3 + end) * (J + 1) + jumps_left, end 0 = none, 1 = left, 2 = right.
  auto at = [J](std::size_t start, int end, std::size_t j) { return (start * 3 + end) * (J + 1) + j; };
  std::vector<Int> prev(n * 3 * (J + 1), Int(0)), cur(prev.size(), Int(0));
  for (std::size_t len = 1; len < n; ++len) {
    bool alice = (n - len + 1) % 2 == 1;  // turn n - len + 1 removes from an arc of this length
    Player mover = alice ? Player::Alice : Player::Bob;
    for (std::size_t s = 0; s < n; ++s) {
      for (int end = 0; end < 3; ++end) {
        if (end == 0 && len != n - 1) continue;
        for (std::size_t j = 0; j <= J; ++j) {
          Int result;
          if (len == 1) {
            result = alice ? sizes[s] : Int(0);
          } else {
            // end == left: the previous slice neighboured our left end.
            bool left_is_shift = end != 2;
            bool right_is_shift = end != 1;
            std::size_t ls = (s + 1) % n;
            std::size_t r_end = (s + len - 1) % n;
            std::optional<Int> best;
            auto consider = [&](bool is_shift, std::size_t idx, std::size_t next_start, int next_end) {
              std::size_t jj = j;
              if (!is_shift && mover == limited) {
                if (jj == 0) return;
                --jj;
              }
              Int v = prev[at(next_start, next_end, jj)] + (alice ? sizes[idx] : Int(0));
              if (!best || (alice ? *best < v : v < *best)) best = v;
            };
            consider(left_is_shift, s, ls, 1);
            consider(right_is_shift, r_end, s, 2);
            result = *best;
          }
          cur[at(s, end, j)] = result;
        }
      }
    }
    std::swap(prev, cur);
  }
  std::optional<Int> best;
  for (std::size_t x = 0; x < n; ++x) {
    Int v = sizes[x] + prev[at((x + 1) % n, 0, J)];
    if (!best || *best < v) best = v;
  }
  return *best;
}

inline Rational solve_jump_limited(const Cutting& P, int budget, Player limited = Player::Alice) {
  return with_scaled_sizes(P, [&](const auto& s) {
    using Int = typename std::decay_t<decltype(s.values)>::value_type;
    return s.unscale(solve_jump_limited_scaled(std::span<const Int>(s.values), budget, limited));
  });
}

inline Rational solve_alice_jump_limited(const Cutting& P, int budget) {
  return solve_jump_limited(P, budget, Player::Alice);
}

// ---------------------------------------------------------------------------
// Oracles

inline constexpr std::size_t kBruteForceLimit = 21;

namespace detail {

inline Rational brute_force(const Cutting& P, const Position& pos) {
  if (pos.finished()) return 0;
  bool alice = pos.to_move() == Player::Alice;
  std::optional<Rational> best;
  for (std::size_t idx : legal_moves(pos)) {
    Rational v = brute_force(P, apply_move(pos, idx));
    if (alice) v += P.slices()[idx];
    if (!best || (alice ? *best < v : v < *best)) best = v;
  }
  return *best;
}

}  // namespace detail

/// Alice's optimal gain by full minimax over the game tree, no memoisation.
inline Rational brute_force_value(const Cutting& P) {
  if (P.size() > kBruteForceLimit)
    throw std::invalid_argument("brute force is limited to " + std::to_string(kBruteForceLimit) + " slices");
  return detail::brute_force(P, Position(P.size()));
}

struct BestResponse {
  Rational worst_gain = 0;           // fixed player's guaranteed gain
  int max_jumps = 0;                 // most jumps the fixed player made in any line
  std::size_t games = 0;             // leaves visited
  std::vector<std::size_t> worst_line;
};

namespace detail {

struct BestResponseSearch {
  const Cutting& P;
  const Strategy& s;
  Player side;
  BestResponse out;
  bool have = false;
  std::vector<Turn> history;

  void run(const Position& pos, const Rational& gain) {
    if (pos.finished()) {
      ++out.games;
      out.max_jumps = std::max(out.max_jumps, pos.jumps(side));
      if (!have || gain < out.worst_gain) {
        have = true;
        out.worst_gain = gain;
        out.worst_line.clear();
        for (const auto& t : history) out.worst_line.push_back(t.index);
      }
      return;
    }
    Player mover = pos.to_move();
    if (mover == side) {
      std::size_t idx = s.next_move(history, pos);
      if (!is_legal(pos, idx))
        throw ProtocolViolation("turn " + std::to_string(pos.turn()) + ": strategy '" + s.name +
                                    "' chose illegal slice " + std::to_string(idx),
                                pos.turn());
      step(pos, idx, gain + P.slices()[idx]);
    } else {
      for (std::size_t idx : legal_moves(pos)) step(pos, idx, gain);
    }
  }

  void step(const Position& pos, std::size_t idx, const Rational& gain) {
    history.push_back({pos.turn(), pos.to_move(), idx, classify_move(pos, idx)});
    run(apply_move(pos, idx), gain);
    history.pop_back();
  }
};

}  // namespace detail

/// Worst case of a fixed deterministic strategy over every reply sequence of
/// an unrestricted opponent.
inline BestResponse best_response_gain(const Cutting& P, const Strategy& s, Player side) {
  detail::BestResponseSearch search{P, s, side, {}, false, {}};
  search.run(Position(P.size()), Rational(0));
  return search.out;
}

}  // namespace pizza
