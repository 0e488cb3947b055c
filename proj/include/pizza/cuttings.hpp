// cuttings.hpp
// Named cuttings, proof transformations and reproducible random fixtures.

#pragma once

#include "pizza/cutting.hpp"
#include "pizza/game.hpp"

#include <random>
#include <set>
#include <string>
#include <vector>

namespace pizza {

/// 0010100(1+w)0(2-w)00202 for 0 <= w <= 1; |P| = 9 for every w.
inline Cutting cutting_15(const Rational& omega) {
  if (omega < 0 || omega > 1) throw std::invalid_argument("omega must lie in [0, 1]");
  std::vector<Rational> s(15, Rational(0));
  s[2] = 1;
  s[4] = 1;
  s[7] = 1 + omega;
  s[9] = 2 - omega;
  s[12] = 2;
  s[14] = 2;
  return Cutting(std::move(s));
}

/// The same cutting at scale 18: 002020030300404.
inline Cutting cutting_15_scaled() { return parse_compact_cutting("002020030300404"); }

inline Cutting cutting_21() { return parse_compact_cutting("001010010101001010101"); }

inline Cutting cutting_23_onejump() { return parse_compact_cutting("20200200202006060050500"); }

/// Inserts n_target - n zeros between the first two consecutive zero slices.
inline Cutting extend_with_zeros(const Cutting& P, std::size_t n_target, bool require_even_gap = false) {
  std::size_t n = P.size();
  if (n_target < n) throw std::invalid_argument("target length is shorter than the cutting");
  if (require_even_gap && (n_target - n) % 2 != 0)
    throw std::invalid_argument("the number of added slices must be even");
  if (n_target == n) return P;
  for (std::size_t i = 0; i < n; ++i) {
    if (P[i] == 0 && P[static_cast<std::ptrdiff_t>(i) + 1] == 0) {
      std::vector<Rational> s(P.slices().begin(), P.slices().begin() + static_cast<std::ptrdiff_t>(i) + 1);
      s.insert(s.end(), n_target - n, Rational(0));
      s.insert(s.end(), P.slices().begin() + static_cast<std::ptrdiff_t>(i) + 1, P.slices().end());
      return Cutting(std::move(s));
    }
  }
  throw std::invalid_argument("the cutting has no two consecutive zero slices");
}

/// Subtracts the minimum slice size from every slice.
inline Cutting reduce_min_size(const Cutting& P) {
  Rational x = *std::min_element(P.slices().begin(), P.slices().end());
  std::vector<Rational> s;
  s.reserve(P.size());
  for (const auto& v : P.slices()) s.push_back(v - x);
  return Cutting(std::move(s));
}

/// True when `order` is a permutation of 0..n-1 in which every slice after
/// the first is takeable at its turn.
inline bool is_legal_order(std::span<const std::size_t> order, std::size_t n) {
  if (order.size() != n || n == 0) return false;
  Position pos(n);
  for (std::size_t idx : order) {
    if (!is_legal(pos, idx)) return false;
    pos = apply_move(pos, idx);
  }
  return true;
}

/// The slice taken t-th (t = 1, 2, ...) gets size 2^(1-t); each slice then
/// outweighs everything after it, so optimal play follows the order.
inline Cutting permutation_forcing(std::span<const std::size_t> order) {
  std::size_t n = order.size();
  if (!is_legal_order(order, n)) throw std::invalid_argument("not a legal play order");
  std::vector<Rational> s(n);
  Rational size = 1;
  for (std::size_t idx : order) {
    s[idx] = size;
    size /= 2;
  }
  return Cutting(std::move(s));
}

/// A play order where Alice jumps on every turn she can and Bob always
/// shifts: 0, 1, n-1, n-2, 2, 3, n-3, ...
inline std::vector<std::size_t> alice_all_jumps_order(std::size_t n) {
  std::vector<std::size_t> order;
  Position pos(n);
  while (!pos.finished()) {
    std::size_t idx;
    if (pos.full_circle())
      idx = 0;
    else if (pos.to_move() == Player::Alice && pos.length() > 1 && pos.turn() > 2)
      idx = jump_move(pos);
    else
      idx = shift_move(pos);
    order.push_back(idx);
    pos = apply_move(pos, idx);
  }
  return order;
}

inline std::vector<std::size_t> random_legal_order(std::size_t n, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  std::vector<std::size_t> order;
  Position pos(n);
  while (!pos.finished()) {
    auto moves = legal_moves(pos);
    std::size_t idx = moves[std::uniform_int_distribution<std::size_t>(0, moves.size() - 1)(rng)];
    order.push_back(idx);
    pos = apply_move(pos, idx);
  }
  return order;
}

/// The pizza whose characteristic cycle is 100100100.
inline Cutting tight_zero_jump() {
  std::vector<Rational> v{1, 0, 0, 1, 0, 0, 1, 0, 0};
  return pizza_from_cycle(std::span<const Rational>(v));
}

/// 1100...0: Alice cannot beat |P|/2.
inline Cutting two_ones(std::size_t n) {
  if (n < 2) throw std::invalid_argument("needs at least two slices");
  std::vector<Rational> s(n, Rational(0));
  s[0] = s[1] = 1;
  return Cutting(std::move(s));
}

enum class SizeDistribution { Uniform, Sparse };

inline const char* name(SizeDistribution d) { return d == SizeDistribution::Uniform ? "uniform" : "sparse"; }

/// Integer sizes in [0, max_size]. Sparse draws zero with probability 2/3,
/// which produces the low-potential shapes the bounds are tight on.
inline Cutting random_cutting(std::size_t n, unsigned max_size, std::uint64_t seed,
                              SizeDistribution dist = SizeDistribution::Uniform) {
  if (n == 0) throw std::invalid_argument("n must be positive");
  std::mt19937_64 rng(seed);
  std::uniform_int_distribution<unsigned> size(0, max_size);
  std::uniform_int_distribution<int> coin(0, 2);
  std::vector<Rational> s;
  s.reserve(n);
  for (std::size_t i = 0; i < n; ++i) {
    if (dist == SizeDistribution::Sparse && coin(rng) != 0)
      s.emplace_back(0);
    else
      s.emplace_back(size(rng));
  }
  return Cutting(std::move(s));
}

}  // namespace pizza
