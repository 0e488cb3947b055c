// game.hpp
// Positions, legal moves, shift/jump classification and the referee.

#pragma once

#include "pizza/cutting.hpp"

#include <array>
#include <functional>
#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

namespace pizza {

enum class Player { Alice, Bob };
enum class MoveKind { First, Shift, Jump };
/// Which end of the previously remaining arc was removed by the last move.
enum class End { None, Left, Right };

inline Player other(Player p) { return p == Player::Alice ? Player::Bob : Player::Alice; }
inline const char* name(Player p) { return p == Player::Alice ? "alice" : "bob"; }
inline const char* name(MoveKind k) {
  switch (k) {
    case MoveKind::First: return "first";
    case MoveKind::Shift: return "shift";
    case MoveKind::Jump: return "jump";
  }
  return "?";
}

class IllegalMove : public std::invalid_argument {
 public:
  IllegalMove(const std::string& what, int turn) : std::invalid_argument(what), turn_(turn) {}
  int turn() const { return turn_; }

 private:
  int turn_;
};

class ProtocolViolation : public std::runtime_error {
 public:
  ProtocolViolation(const std::string& what, int turn) : std::runtime_error(what), turn_(turn) {}
  int turn() const { return turn_; }

 private:
  int turn_;
};

/// A game position on the pizza. Before the first turn the whole circle
/// remains; afterwards the remaining slices always form one proper arc
/// start, start+1, ..., start+length-1 (mod n) whose two ends are takeable.
class Position {
 public:
  explicit Position(std::size_t n) : n_(n), length_(n) {
    if (n == 0) throw std::invalid_argument("empty pizza");
  }

  std::size_t slices() const { return n_; }
  bool full_circle() const { return length_ == n_; }
  bool finished() const { return length_ == 0; }
  std::size_t start() const { return start_; }
  std::size_t length() const { return length_; }
  std::size_t left_end() const { return start_; }
  std::size_t right_end() const { return (start_ + length_ - 1) % n_; }
  End last_taken_end() const { return last_; }
  int turn() const { return turn_; }
  Player to_move() const { return turn_ % 2 == 1 ? Player::Alice : Player::Bob; }
  int jumps(Player p) const { return jumps_[p == Player::Alice ? 0 : 1]; }

  /// Slice removed on the previous turn, if any.
  std::optional<std::size_t> last_taken() const {
    if (turn_ == 1) return std::nullopt;
    if (last_ == End::Right) return (start_ + length_) % n_;
    return (start_ + n_ - 1) % n_;
  }

  bool contains(std::size_t idx) const {
    if (full_circle()) return idx < n_;
    return (idx + n_ - start_) % n_ < length_;
  }

  friend bool operator==(const Position&, const Position&) = default;

 private:
  friend Position apply_move(const Position&, std::size_t);

  std::size_t n_;
  std::size_t start_ = 0;
  std::size_t length_;
  End last_ = End::None;
  int turn_ = 1;
  std::array<int, 2> jumps_{0, 0};
};

inline std::vector<std::size_t> legal_moves(const Position& pos) {
  if (pos.finished()) throw IllegalMove("the game is over", pos.turn());
  std::vector<std::size_t> out;
  if (pos.full_circle()) {
    out.resize(pos.slices());
    for (std::size_t i = 0; i < out.size(); ++i) out[i] = i;
  } else if (pos.length() == 1) {
    out.push_back(pos.left_end());
  } else {
    out.push_back(pos.left_end());
    out.push_back(pos.right_end());
  }
  return out;
}

inline bool is_legal(const Position& pos, std::size_t idx) {
  if (pos.finished() || idx >= pos.slices()) return false;
  if (pos.full_circle()) return true;
  return idx == pos.left_end() || idx == pos.right_end();
}

/// First on turn 1; Shift when idx neighbours the slice taken on the previous
/// turn (both turn-2 choices do, and so does the single last slice); Jump
/// otherwise.
inline MoveKind classify_move(const Position& pos, std::size_t idx) {
  if (!is_legal(pos, idx))
    throw IllegalMove("slice " + std::to_string(idx) + " is not takeable on turn " + std::to_string(pos.turn()),
                      pos.turn());
  if (pos.full_circle()) return MoveKind::First;
  std::size_t n = pos.slices();
  std::size_t last = *pos.last_taken();
  return (idx == (last + 1) % n || idx == (last + n - 1) % n) ? MoveKind::Shift : MoveKind::Jump;
}

inline Position apply_move(const Position& pos, std::size_t idx) {
  MoveKind kind = classify_move(pos, idx);
  Position next = pos;
  std::size_t n = pos.n_;
  if (kind == MoveKind::First) {
    next.start_ = (idx + 1) % n;
    next.length_ = n - 1;
    next.last_ = End::None;
  } else if (idx == pos.left_end()) {
    next.start_ = (pos.start_ + 1) % n;
    next.length_ = pos.length_ - 1;
    next.last_ = End::Left;
  } else {
    next.length_ = pos.length_ - 1;
    next.last_ = End::Right;
  }
  if (kind == MoveKind::Jump) ++next.jumps_[pos.to_move() == Player::Alice ? 0 : 1];
  ++next.turn_;
  return next;
}

/// The Shift move at a position past turn 1 (the only move on the last turn).
inline std::size_t shift_move(const Position& pos) {
  for (std::size_t idx : legal_moves(pos))
    if (classify_move(pos, idx) == MoveKind::Shift) return idx;
  throw std::logic_error("no shift available on turn " + std::to_string(pos.turn()));
}

/// The other end of the remaining arc; equals shift_move on the last turn.
inline std::size_t jump_move(const Position& pos) {
  std::size_t s = shift_move(pos);
  return s == pos.left_end() ? pos.right_end() : pos.left_end();
}

struct Turn {
  int number;
  Player player;
  std::size_t index;
  MoveKind kind;
};

struct GameRecord {
  Cutting cutting;
  std::vector<Turn> turns;
  Rational alice_gain = 0;
  Rational bob_gain = 0;

  int jumps(Player p) const {
    int count = 0;
    for (const auto& t : turns) count += t.player == p && t.kind == MoveKind::Jump;
    return count;
  }
  const Rational& gain(Player p) const { return p == Player::Alice ? alice_gain : bob_gain; }
};

/// A deterministic move generator for one player. next_move sees the moves
/// so far and the current position and must return a legal index.
struct Strategy {
  using MoveFn = std::function<std::size_t(std::span<const Turn>, const Position&)>;

  std::string name;
  std::optional<int> max_jumps;  // nullopt: unbounded
  Rational declared_gain = 0;    // guaranteed gain for the side it was built for
  MoveFn next_move;
};

/// Replays the whole game, consulting each strategy on its own turns.
inline GameRecord play_game(const Cutting& P, const Strategy& alice, const Strategy& bob) {
  GameRecord rec;
  rec.cutting = P;
  Position pos(P.size());
  while (!pos.finished()) {
    Player mover = pos.to_move();
    const Strategy& s = mover == Player::Alice ? alice : bob;
    std::size_t idx = s.next_move(rec.turns, pos);
    if (!is_legal(pos, idx))
      throw ProtocolViolation("turn " + std::to_string(pos.turn()) + ": strategy '" + s.name +
                                  "' chose illegal slice " + std::to_string(idx),
                              pos.turn());
    MoveKind kind = classify_move(pos, idx);
    rec.turns.push_back({pos.turn(), mover, idx, kind});
    (mover == Player::Alice ? rec.alice_gain : rec.bob_gain) += P.slices()[idx];
    pos = apply_move(pos, idx);
  }
  return rec;
}

/// Replays a list of indices from the start, throwing IllegalMove at the
/// first bad one.
inline Position replay(std::size_t n, std::span<const std::size_t> moves) {
  Position pos(n);
  for (std::size_t idx : moves) pos = apply_move(pos, idx);
  return pos;
}

}  // namespace pizza
