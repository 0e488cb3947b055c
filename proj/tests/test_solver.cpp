#include "pizza/cuttings.hpp"
#include "pizza/solver.hpp"
#include "pizza/strategies.hpp"

#include <gtest/gtest.h>

using namespace pizza;
using Q = Rational;

namespace {

// Minimax over the explicit tree where `limited` may jump at most `budget`
// times; returns Alice's gain.
Q limited_minimax(const Cutting& P, const Position& pos, int budget, Player limited) {
  if (pos.finished()) return 0;
  bool alice = pos.to_move() == Player::Alice;
  std::optional<Q> best;
  for (std::size_t idx : legal_moves(pos)) {
    if (pos.to_move() == limited && classify_move(pos, idx) == MoveKind::Jump && pos.jumps(limited) >= budget) continue;
    Q v = limited_minimax(P, apply_move(pos, idx), budget, limited) + (alice ? P.slices()[idx] : Q(0));
    if (!best || (alice ? *best < v : v < *best)) best = v;
  }
  return *best;
}

std::vector<Cutting> fixtures(std::size_t max_n, std::size_t count, std::uint64_t seed0) {
  std::vector<Cutting> out;
  for (std::uint64_t seed = seed0; out.size() < count; ++seed) {
    std::size_t n = 1 + seed % max_n;
    out.push_back(random_cutting(n, seed % 3 ? 9 : 1, seed, seed % 2 ? SizeDistribution::Sparse : SizeDistribution::Uniform));
  }
  return out;
}

}  // namespace

TEST(Solver, PaperCuttings) {
  auto t = solve_optimal(cutting_15_scaled());
  EXPECT_EQ(t.alice_value(), Q(8));
  EXPECT_EQ(t.bob_value(), Q(10));
  for (const Q& w : {Q(0), Q(1, 3), Q(1, 2), Q(1)}) {
    auto tw = solve_optimal(cutting_15(w));
    EXPECT_EQ(tw.alice_value(), Q(4)) << w;
    EXPECT_EQ(tw.bob_value(), Q(5)) << w;
  }
  auto t21 = solve_optimal(cutting_21());
  EXPECT_EQ(t21.alice_value(), Q(4));
  EXPECT_EQ(t21.bob_value(), Q(5));
}

TEST(Solver, TwoOnesGiveHalf) {
  for (std::size_t n = 2; n <= 30; ++n) EXPECT_EQ(solve_optimal(two_ones(n)).alice_value(), Q(1)) << n;
}

TEST(Solver, SmallCases) {
  EXPECT_EQ(solve_optimal(Cutting::from({Q(5, 2)})).alice_value(), Q(5, 2));
  EXPECT_EQ(solve_optimal(Cutting::from({2, 7})).alice_value(), Q(7));
  EXPECT_EQ(brute_force_value(Cutting::from({7, 2})), Q(7));
  EXPECT_EQ(brute_force_value(cutting_15_scaled()), Q(8));
  EXPECT_THROW(brute_force_value(Cutting(std::vector<Q>(23, Q(1)))), std::invalid_argument);
}

TEST(Solver, PositionCount) {
  for (std::size_t n : {1u, 2u, 5u, 100u}) EXPECT_EQ(solve_optimal(Cutting(std::vector<Q>(n, Q(1)))).positions(), n * n - n + 2);
}

TEST(Solver, BellmanIdentityAndBounds) {
  for (const Cutting& P : fixtures(25, 150, 1)) {
    auto t = solve_optimal(P);
    std::size_t n = P.size();
    auto arc = [&](std::size_t s, std::size_t len) {
      Q sum = 0;
      for (std::size_t k = 0; k < len; ++k) sum += P[static_cast<std::ptrdiff_t>(s + k)];
      return sum;
    };
    for (std::size_t s = 0; s < n; ++s) {
      if (n > 1) EXPECT_EQ(t.value(s, 1), P.slices()[s]);
      EXPECT_EQ(t.value(s, 0), Q(0));
      for (std::size_t len = 2; len < n; ++len) {
        Q left = t.value((s + 1) % n, len - 1), right = t.value(s, len - 1);
        Q v = t.value(s, len);
        EXPECT_EQ(v, arc(s, len) - std::min(left, right));
        EXPECT_GE(v, Q(0));
        EXPECT_LE(v, arc(s, len));
        Choice c = t.policy(s, len);
        EXPECT_EQ(c, left < right ? Choice::Left : right < left ? Choice::Right : Choice::Either);
      }
    }
    EXPECT_EQ(t.alice_value() + t.bob_value(), P.total());
  }
}

TEST(Solver, AgreesWithBruteForce) {
  for (const Cutting& P : fixtures(13, 500, 1000)) {
    EXPECT_EQ(solve_optimal(P).alice_value(), brute_force_value(P)) << format_cutting(P);
  }
}

TEST(Solver, MoveValuesAndOptimalMoves) {
  for (const Cutting& P : fixtures(12, 80, 77)) {
    auto t = solve_optimal(P);
    auto order = random_legal_order(P.size(), P.size() * 7 + 1);
    Position pos(P.size());
    for (std::size_t idx : order) {
      Q best = -1;
      for (std::size_t m : legal_moves(pos)) best = std::max(best, t.move_value(pos, m));
      EXPECT_EQ(best, t.position_value(pos));
      for (std::size_t m : t.optimal_moves(pos)) EXPECT_EQ(t.move_value(pos, m), best);
      pos = apply_move(pos, idx);
    }
    EXPECT_EQ(t.position_value(pos), Q(0));
  }
  auto t = solve_optimal(Cutting::from({1, 2, 3}));
  EXPECT_THROW(t.move_value(apply_move(Position(3), 0), 0), IllegalMove);
}

TEST(Solver, OptimalStrategiesRealiseTheValues) {
  for (const Cutting& P : fixtures(16, 60, 300)) {
    auto g = optimal_game(P);
    auto t = solve_optimal(P);
    EXPECT_EQ(g.alice_gain, t.alice_value());
    EXPECT_EQ(best_response_gain(P, optimal_strategy(P, Player::Alice), Player::Alice).worst_gain, t.alice_value());
    EXPECT_EQ(best_response_gain(P, optimal_strategy(P, Player::Bob), Player::Bob).worst_gain, t.bob_value());
  }
}

TEST(Solver, BigIntegerPathMatchesMachineIntegers) {
  for (std::uint64_t seed = 1; seed <= 30; ++seed) {
    Cutting P = random_cutting(3 + seed % 10, 9, seed);
    Integer huge = Integer(1) << 80;
    std::vector<Q> scaled;
    for (const auto& x : P.slices()) scaled.push_back(x * Q(huge));
    EXPECT_EQ(solve_optimal(Cutting(scaled)).alice_value(), solve_optimal(P).alice_value() * Q(huge));
    EXPECT_EQ(solve_alice_jump_limited(Cutting(scaled), 1), solve_alice_jump_limited(P, 1) * Q(huge));
  }
}

TEST(JumpLimited, PaperConstants) {
  Cutting P23 = cutting_23_onejump();
  EXPECT_EQ(P23.total(), Q(32));
  EXPECT_EQ(solve_alice_jump_limited(P23, 1), Q(14));
  EXPECT_EQ(solve_alice_jump_limited(tight_zero_jump(), 0), Q(1));
  EXPECT_EQ(solve_alice_jump_limited(cutting_15_scaled(), 2), Q(8));
  EXPECT_THROW(solve_alice_jump_limited(tight_zero_jump(), -1), std::invalid_argument);
}

TEST(JumpLimited, AgreesWithLimitedMinimax) {
  for (const Cutting& P : fixtures(12, 120, 555)) {
    for (int J = 0; J <= 3; ++J) {
      EXPECT_EQ(solve_alice_jump_limited(P, J), limited_minimax(P, Position(P.size()), J, Player::Alice))
          << format_cutting(P) << " J=" << J;
      EXPECT_EQ(solve_jump_limited(P, J, Player::Bob), limited_minimax(P, Position(P.size()), J, Player::Bob))
          << format_cutting(P) << " Bob J=" << J;
    }
  }
}

TEST(JumpLimited, MonotoneAndUnboundOnceTheBudgetCannotBind) {
  for (const Cutting& P : fixtures(21, 120, 9000)) {
    std::size_t n = P.size();
    int cap = std::max(0, static_cast<int>(n / 2) - 1);
    Q prev = -1;
    for (int J = 0; J <= cap + 1; ++J) {
      Q v = solve_alice_jump_limited(P, J);
      EXPECT_GE(v, prev);
      prev = v;
    }
    EXPECT_EQ(solve_alice_jump_limited(P, cap), solve_optimal(P).alice_value()) << format_cutting(P);
    // Restricting Bob only helps Alice.
    EXPECT_GE(solve_jump_limited(P, 0, Player::Bob), solve_optimal(P).alice_value());
    if (n % 2 == 1 && n >= 15) EXPECT_GE(solve_alice_jump_limited(P, 2) * 9, P.total() * 4);
  }
}

TEST(JumpCount, Examples) {
  EXPECT_EQ(optimal_jump_count(permutation_forcing(alice_all_jumps_order(8))), 3);
  for (std::size_t n = 2; n <= 12; n += 2) EXPECT_EQ(optimal_jump_count(Cutting(std::vector<Q>(n, Q(1)))), 0) << n;
  EXPECT_EQ(optimal_jump_count(Cutting::from({4, 9})), 0);
}
