// strategies.hpp
// Alice's guaranteed-gain strategies and Bob's class-taking strategy.
//
// Every strategy of Alice here has the same shape: a first slice, then a list
// of "stay regions" on the characteristic cycle. While she has made p jumps,
// she shifts as long as the shift lands in region p and jumps the first time
// it would not; once the regions run out she only shifts. Precomputation is
// O(n) and each decision O(1).

#pragma once

#include "pizza/analysis.hpp"
#include "pizza/game.hpp"

#include <memory>
#include <optional>
#include <string>
#include <vector>

namespace pizza {

struct ShiftJumpPlan {
  std::size_t first = 0;            // pizza index of the first move
  std::vector<CycleArc> stay;       // stay[p] is used after p jumps
};

/// Turns a plan into a move function for the player `side`.
inline Strategy::MoveFn plan_mover(std::size_t n, ShiftJumpPlan plan, Player side) {
  auto shared = std::make_shared<const ShiftJumpPlan>(std::move(plan));
  return [n, shared, side](std::span<const Turn>, const Position& pos) -> std::size_t {
    if (pos.full_circle()) return shared->first;
    std::size_t shift = shift_move(pos);
    if (pos.length() == 1) return shift;
    auto done = static_cast<std::size_t>(pos.jumps(side));
    if (done < shared->stay.size()) {
      CycleIndexMap map(n);
      if (!shared->stay[done].contains(map.to_cycle(shift), n)) return jump_move(pos);
    }
    return shift;
  };
}

template <class T>
struct CycleContext {
  std::size_t n = 0;
  std::vector<T> v;  // characteristic cycle, scaled to integers
  Integer denominator = 1;
  T total = 0;
  PotentialTable<T> potentials;

  Rational r(const T& x) const { return to_rational(x, denominator); }
  std::size_t pizza(std::size_t k) const { return CycleIndexMap(n).to_pizza(k); }
  bool potential_at_least_half() const { return !(potentials.cycle + potentials.cycle < total); }
};

template <class T>
CycleContext<T> make_cycle_context(const ScaledSizes<T>& scaled) {
  CycleContext<T> ctx;
  ctx.n = scaled.values.size();
  ctx.v = cycle_order(std::span<const T>(scaled.values));
  ctx.denominator = scaled.denominator;
  for (const auto& x : ctx.v) ctx.total += x;
  ctx.potentials = potential_table(std::span<const T>(ctx.v));
  return ctx;
}

/// A plan plus its declared guarantee (in original units).
struct PlannedMove {
  std::string name;
  int max_jumps = 0;
  Rational bound = 0;
  ShiftJumpPlan plan;
};

inline Strategy to_strategy(std::size_t n, PlannedMove pm, Player side = Player::Alice) {
  Strategy s;
  s.name = pm.name;
  s.max_jumps = pm.max_jumps;
  s.declared_gain = pm.bound;
  s.next_move = plan_mover(n, std::move(pm.plan), side);
  return s;
}

// ---------------------------------------------------------------------------
// Building blocks on the cycle

template <class T>
PlannedMove plan_zero_jump(const CycleContext<T>& ctx) {
  PlannedMove pm{"zero-jump", 0, ctx.r(ctx.potentials.cycle), {}};
  pm.plan.first = ctx.pizza(ctx.potentials.argmax);
  return pm;
}

/// Median of B, shift inside B, jump once when the shift would leave B.
template <class T>
PlannedMove plan_half_b(const CycleContext<T>& ctx, const SixArcPartition<T>& part) {
  const CycleArc& B = part.arc(kB);
  if (B.length == 0) throw std::invalid_argument("arc B is empty");
  PlannedMove pm;
  pm.name = "one-jump-halfb";
  pm.max_jumps = 1;
  pm.bound = ctx.r(part.b()) / 2 + ctx.r(part.min_cd_fa());
  pm.plan.first = ctx.pizza(median_slice(std::span<const T>(ctx.v), B));
  pm.plan.stay = {B};
  return pm;
}

/// Running differences between Alice's take in B and Bob's in E, measured
/// from the first (h) and from the last (h') slice of B.
template <class T>
struct AdvantageProfile {
  std::size_t k = 0;  // l(B)
  std::vector<T> h, h_rev;
  std::size_t i = 0, i_rev = 0;  // largest indices with h(i), h'(i') within the threshold
  bool split = false;            // the i + i' > k case
  CycleArc b1, b2, b3, e1, e2, e3;
  bool use_last_segment = false;  // played on (B3, E3) instead of (B1, E1)
};

template <class T>
struct PlannedMove38 {
  PlannedMove move;
  std::optional<AdvantageProfile<T>> profile;  // absent when the E-start branch is taken
};

template <class T>
PlannedMove38<T> plan_one_jump_38(const CycleContext<T>& ctx, const SixArcPartition<T>& part) {
  std::size_t n = ctx.n;
  const CycleArc& B = part.arc(kB);
  const CycleArc& E = part.arc(kE);
  const T& b = part.b();
  const T& e = part.e();
  PlannedMove38<T> out;
  out.move.name = "one-jump-38";
  out.move.max_jumps = 1;
  out.move.bound = Rational(3) * ctx.r(b) / 8 + ctx.r(e) / 2 + ctx.r(part.min_cd_fa());

  // Threshold 3b/8 - e/2, compared as 8x against 3b - 4e.
  T threshold8 = T(3) * b - T(4) * e;
  if (!(T(0) < threshold8)) {
    out.move.plan.first = ctx.pizza(E.first());
    return out;
  }
  AdvantageProfile<T> prof;
  std::size_t k = B.length;
  prof.k = k;
  prof.h.assign(k + 1, T(0));
  prof.h_rev.assign(k + 1, T(0));
  for (std::size_t t = 1; t <= k; ++t) {
    prof.h[t] = prof.h[t - 1] + ctx.v[B.at(t - 1, n)] - ctx.v[E.at(t - 1, n)];
    prof.h_rev[t] = prof.h_rev[t - 1] + ctx.v[B.at(k - t, n)] - ctx.v[E.at(k + 1 - t, n)];
  }
  for (std::size_t t = 0; t <= k; ++t) {
    if (prof.h[t] < T(0) || prof.h_rev[t] < T(0))
      throw std::logic_error("negative advantage: the partition does not come from a minimal triple");
    if (!(threshold8 < T(8) * prof.h[t])) prof.i = t;
    if (!(threshold8 < T(8) * prof.h_rev[t])) prof.i_rev = t;
  }
  if (prof.i + prof.i_rev < k) {
    // Start just past B_i; any advantage reached before Bob hits an end of E
    // exceeds the threshold.
    out.move.plan.first = ctx.pizza(B.at(prof.i, n));
    out.move.plan.stay = {B};
  } else {
    if (prof.i + prof.i_rev == k) throw std::logic_error("advantage thresholds meet exactly");
    prof.split = true;
    std::size_t i = prof.i, ir = prof.i_rev;
    prof.b1 = CycleArc{B.start, k - ir};
    prof.b2 = CycleArc{B.at(k - ir, n), i - (k - ir)};
    prof.b3 = CycleArc{B.at(i, n), k - i};
    prof.e1 = CycleArc{E.start, k - ir + 1};
    prof.e2 = CycleArc{E.at(k - ir + 1, n), i - (k - ir) - 1};
    prof.e3 = CycleArc{E.at(i, n), k - i + 1};
    std::span<const T> v(ctx.v);
    prof.use_last_segment = arc_size(v, prof.e3) < arc_size(v, prof.e1);
    const CycleArc& bb = prof.use_last_segment ? prof.b3 : prof.b1;
    if (bb.length == 0) throw std::logic_error("empty advantage segment");
    out.move.plan.first = ctx.pizza(median_slice(v, bb));
    out.move.plan.stay = {bb};
  }
  out.profile = std::move(prof);
  return out;
}

/// Details of the two-phase strategy, kept for inspection.
template <class T>
struct TwoJumpDetail {
  bool first_phase_zero_jump = true;  // Case 1 (zero-jump on V') or Case 2
  std::vector<T> v_prime;             // B followed by E
  CycleArc b_prime, e_prime;          // Case 2 arcs, mapped back onto V
};

template <class T>
struct PlannedTwoJump {
  PlannedMove move;
  TwoJumpDetail<T> detail;
};

template <class T>
PlannedTwoJump<T> plan_two_jump(const CycleContext<T>& ctx, const SixArcPartition<T>& part) {
  std::size_t n = ctx.n;
  const CycleArc& B = part.arc(kB);
  const CycleArc& E = part.arc(kE);
  std::size_t k = B.length;
  PlannedTwoJump<T> out;
  out.move.name = "two-jump";
  out.move.max_jumps = 2;
  out.move.bound = ctx.r(part.b()) / 2 + ctx.r(part.e()) / 4 + ctx.r(part.min_cd_fa());

  auto& vp = out.detail.v_prime;
  vp.reserve(2 * k + 1);
  for (std::size_t t = 0; t < k; ++t) vp.push_back(ctx.v[B.at(t, n)]);
  for (std::size_t t = 0; t <= k; ++t) vp.push_back(ctx.v[E.at(t, n)]);
  auto to_v = [&](std::size_t idx) { return idx < k ? B.at(idx, n) : E.at(idx - k, n); };
  T total_prime = part.b() + part.e();

  std::span<const T> vps(vp);
  auto table = potential_table(vps, k);  // E is a minimum half-circle of V'
  bool zero_jump_phase = !(table.cycle + table.cycle < total_prime);
  std::optional<MinimalTriple<T>> triple;
  if (!zero_jump_phase) {
    triple = find_minimal_triple(vps, table);
    const auto& q = triple->partition;
    // Take the better of the two first-phase strategies on V'.
    Rational half_b = ctx.r(q.b()) / 2 + ctx.r(q.min_cd_fa());
    if (!(ctx.r(table.cycle) < half_b)) zero_jump_phase = true;
  }
  if (zero_jump_phase) {
    std::size_t q = 0;
    for (std::size_t t = 0; t < k; ++t)
      if (table.element[t] == table.cycle) {
        q = t;
        break;
      }
    if (!(table.element[q] == table.cycle)) throw std::logic_error("no maximal-potential slice in B");
    out.move.plan.first = ctx.pizza(to_v(q));
    out.move.plan.stay = {B};
    return out;
  }
  const auto& q = triple->partition;
  auto map_arc = [&](const CycleArc& a) { return CycleArc{to_v(a.start), a.length}; };
  out.detail.first_phase_zero_jump = false;
  out.detail.b_prime = map_arc(q.arc(kB));
  out.detail.e_prime = map_arc(q.arc(kE));
  out.move.plan.first = ctx.pizza(to_v(median_slice(vps, q.arc(kB))));
  out.move.plan.stay = {out.detail.b_prime, B};
  return out;
}

/// For 3 <= n <= 13: relabel so l(B) = 1, then the better of
/// g1 = b + min{c+d, f+a} (take B, jump to the other slice of E) and the
/// zero-jump g2 = max{c+d+e, e+f+a}.
template <class T>
PlannedMove plan_small_odd(const CycleContext<T>& ctx, const SixArcPartition<T>& part) {
  SixArcPartition<T> p = part;
  for (int r = 0; r < 3 && p.arc(kB).length != 1; ++r) p = p.rotated();
  if (p.arc(kB).length != 1) throw std::logic_error("no arc of length one among B, D, F");
  Rational g1 = ctx.r(p.b()) + ctx.r(p.min_cd_fa());
  Rational g2 = ctx.r(p.sum_cde() < p.sum_efa() ? p.sum_efa() : p.sum_cde());
  PlannedMove pm;
  if (!(g1 < g2)) {
    pm = plan_half_b(ctx, p);
    pm.bound = g1;
  } else {
    pm = plan_zero_jump(ctx);
    pm.max_jumps = 1;
    pm.bound = g2;
  }
  pm.name = "small-odd";
  pm.max_jumps = 1;
  return pm;
}

// ---------------------------------------------------------------------------
// Dispatchers

template <class T>
struct DispatchChoice {
  PlannedMove move;
  std::vector<Rational> gains;  // the candidates compared, in order g1, g2, ...
  std::size_t chosen = 0;       // index into gains, or npos for a short-circuit branch
  std::optional<SixArcPartition<T>> partition;  // normalised
};

template <class T>
PlannedMove plan_parity(const ScaledSizes<T>& s) {
  std::size_t n = s.values.size();
  if (n % 2 != 0) throw std::invalid_argument("the parity strategy needs an even number of slices");
  T even = 0, odd = 0;
  for (std::size_t i = 0; i < n; ++i) (i % 2 == 0 ? even : odd) += s.values[i];
  PlannedMove pm;
  pm.name = "parity";
  pm.max_jumps = 0;
  pm.plan.first = even < odd ? 1 : 0;
  pm.bound = s.unscale(even < odd ? odd : even);
  return pm;
}

template <class T>
DispatchChoice<T> plan_dispatch_49(const ScaledSizes<T>& s) {
  constexpr auto npos = static_cast<std::size_t>(-1);
  std::size_t n = s.values.size();
  DispatchChoice<T> out;
  out.chosen = npos;
  if (n % 2 == 0) {
    out.move = plan_parity(s);
  } else {
    auto ctx = make_cycle_context(s);
    if (n == 1 || ctx.potential_at_least_half()) {
      out.move = plan_zero_jump(ctx);
    } else {
      auto triple = find_minimal_triple(std::span<const T>(ctx.v), ctx.potentials);
      if (n <= 13) {
        out.move = plan_small_odd(ctx, triple.partition);
      } else {
        auto q = triple.partition.normalized();
        out.partition = q;
        PlannedMove g1 = plan_zero_jump(ctx);
        g1.bound = ctx.r(q.sum_efa());
        PlannedMove g2 = plan_two_jump(ctx, q).move;
        PlannedMove g3 = plan_two_jump(ctx, q.reflected()).move;
        std::array<PlannedMove*, 3> cands{&g1, &g2, &g3};
        out.chosen = 0;
        for (std::size_t i = 0; i < 3; ++i) {
          out.gains.push_back(cands[i]->bound);
          if (cands[out.chosen]->bound < cands[i]->bound) out.chosen = i;
        }
        out.move = std::move(*cands[out.chosen]);
      }
    }
  }
  out.move.name = "dispatch-49";
  out.move.max_jumps = 2;
  return out;
}

template <class T>
DispatchChoice<T> plan_dispatch_716(const ScaledSizes<T>& s) {
  constexpr auto npos = static_cast<std::size_t>(-1);
  std::size_t n = s.values.size();
  DispatchChoice<T> out;
  out.chosen = npos;
  if (n % 2 == 0) {
    out.move = plan_parity(s);
  } else {
    auto ctx = make_cycle_context(s);
    if (n == 1 || ctx.potential_at_least_half()) {
      out.move = plan_zero_jump(ctx);
    } else {
      auto triple = find_minimal_triple(std::span<const T>(ctx.v), ctx.potentials);
      auto q = triple.partition.normalized();
      out.partition = q;
      PlannedMove g1 = plan_zero_jump(ctx);
      g1.bound = ctx.r(q.sum_efa());
      PlannedMove g2 = plan_half_b(ctx, q);
      PlannedMove g3 = plan_half_b(ctx, q.reflected());
      PlannedMove g4 = plan_one_jump_38(ctx, q).move;
      std::array<PlannedMove*, 4> cands{&g1, &g2, &g3, &g4};
      out.chosen = 0;
      for (std::size_t i = 0; i < 4; ++i) {
        out.gains.push_back(cands[i]->bound);
        if (cands[out.chosen]->bound < cands[i]->bound) out.chosen = i;
      }
      out.move = std::move(*cands[out.chosen]);
    }
  }
  out.move.name = "dispatch-716";
  out.move.max_jumps = 1;
  return out;
}

// ---------------------------------------------------------------------------
// Strategy factories on cuttings

namespace detail {

inline void require_odd_cutting(const Cutting& P, const char* who) {
  if (P.size() % 2 == 0) throw std::invalid_argument(std::string(who) + " needs an odd number of slices");
}

template <class F>
Strategy on_cycle(const Cutting& P, F&& build) {
  return with_scaled_sizes(P, [&](const auto& s) {
    auto ctx = make_cycle_context(s);
    return to_strategy(P.size(), build(ctx));
  });
}

template <class T>
SixArcPartition<T> require_triple(const CycleContext<T>& ctx) {
  if (ctx.n == 1 || ctx.potential_at_least_half())
    throw std::invalid_argument("needs p(V) < |V|/2");
  return find_minimal_triple(std::span<const T>(ctx.v), ctx.potentials).partition;
}

}  // namespace detail

inline Strategy alice_parity(const Cutting& P) {
  return with_scaled_sizes(P, [&](const auto& s) { return to_strategy(P.size(), plan_parity(s)); });
}

inline Strategy alice_zero_jump(const Cutting& P) {
  detail::require_odd_cutting(P, "the zero-jump strategy");
  return detail::on_cycle(P, [](const auto& ctx) { return plan_zero_jump(ctx); });
}

inline Strategy alice_one_jump_halfb(const Cutting& P) {
  detail::require_odd_cutting(P, "the one-jump strategy");
  return detail::on_cycle(P, [](const auto& ctx) { return plan_half_b(ctx, detail::require_triple(ctx)); });
}

inline Strategy alice_one_jump_38(const Cutting& P) {
  detail::require_odd_cutting(P, "the one-jump strategy");
  return detail::on_cycle(P, [](const auto& ctx) { return plan_one_jump_38(ctx, detail::require_triple(ctx)).move; });
}

inline Strategy alice_two_jump(const Cutting& P) {
  detail::require_odd_cutting(P, "the two-jump strategy");
  return detail::on_cycle(P, [](const auto& ctx) { return plan_two_jump(ctx, detail::require_triple(ctx)).move; });
}

inline Strategy alice_small_odd(const Cutting& P) {
  detail::require_odd_cutting(P, "the small-n strategy");
  if (P.size() < 3 || P.size() > 13) throw std::invalid_argument("the small-n strategy needs 3 <= n <= 13");
  return detail::on_cycle(P, [](const auto& ctx) { return plan_small_odd(ctx, detail::require_triple(ctx)); });
}

/// The half-B strategy on an explicitly given partition of V (for instance a
/// rotated or reflected one).
inline Strategy alice_one_jump_halfb(const Cutting& P, const SixArcPartition<Rational>& part) {
  detail::require_odd_cutting(P, "the one-jump strategy");
  if (part.n != P.size()) throw std::invalid_argument("partition does not match the cutting");
  CycleContext<Rational> ctx;
  ctx.n = P.size();
  ctx.v = cycle_order(std::span<const Rational>(P.slices()));
  return to_strategy(P.size(), plan_half_b(ctx, part));
}

inline Strategy alice_one_jump_38(const Cutting& P, const SixArcPartition<Rational>& part) {
  detail::require_odd_cutting(P, "the one-jump strategy");
  if (part.n != P.size()) throw std::invalid_argument("partition does not match the cutting");
  CycleContext<Rational> ctx;
  ctx.n = P.size();
  ctx.v = cycle_order(std::span<const Rational>(P.slices()));
  return to_strategy(P.size(), plan_one_jump_38(ctx, part).move);
}

inline Strategy alice_dispatch(const Cutting& P) {
  return with_scaled_sizes(P, [&](const auto& s) { return to_strategy(P.size(), plan_dispatch_49(s).move); });
}

inline Strategy alice_dispatch_one_jump(const Cutting& P) {
  return with_scaled_sizes(P, [&](const auto& s) { return to_strategy(P.size(), plan_dispatch_716(s).move); });
}

// ---------------------------------------------------------------------------
// Bob

/// |K| and |L| for an even-length remaining arc: the slices at even and odd
/// offsets from its left end.
inline std::pair<Rational, Rational> class_sums(const Cutting& P, const Position& pos) {
  Rational k = 0, l = 0;
  for (std::size_t t = 0; t < pos.length(); ++t) (t % 2 == 0 ? k : l) += P[pos.start() + t];
  return {k, l};
}

/// From Bob's turn `from_turn` on: take the end of the heavier class (left on
/// ties), then only shift. Earlier Bob turns are delegated to `before` (or
/// shifts). From turn 2 the declared gain is the worst case over Alice's
/// first move of max{|K|,|L|}.
inline Strategy bob_take_class(const Cutting& P, int from_turn = 2, std::optional<Strategy> before = std::nullopt) {
  if (from_turn < 2 || from_turn % 2 != 0) throw std::invalid_argument("Bob moves on even turns");
  Strategy s;
  s.name = "bob-class";
  s.max_jumps = 1;
  if (from_turn == 2 && P.size() >= 2) {
    std::optional<Rational> worst;
    for (std::size_t x = 0; x < P.size(); ++x) {
      auto [k, l] = class_sums(P, apply_move(Position(P.size()), x));
      Rational g = k < l ? l : k;
      if (!worst || g < *worst) worst = g;
    }
    s.declared_gain = *worst;
  }
  auto pre = before ? std::make_shared<const Strategy>(*before) : nullptr;
  s.next_move = [P, from_turn, pre](std::span<const Turn> history, const Position& pos) -> std::size_t {
    if (pos.turn() < from_turn) return pre ? pre->next_move(history, pos) : shift_move(pos);
    if (pos.turn() > from_turn) return shift_move(pos);
    if (pos.length() % 2 != 0) throw std::logic_error("class strategy needs an even number of remaining slices");
    auto [k, l] = class_sums(P, pos);
    return k < l ? pos.right_end() : pos.left_end();
  };
  return s;
}

/// A seeded uniformly random legal move; the choice is a pure function of
/// the seed and the position.
inline Strategy random_strategy(std::uint64_t seed) {
  Strategy s;
  s.name = "random";
  s.next_move = [seed](std::span<const Turn>, const Position& pos) -> std::size_t {
    std::uint64_t x = seed ^ (0x9E3779B97F4A7C15ull * static_cast<std::uint64_t>(pos.turn()));
    x ^= (pos.start() + 1) * 0xBF58476D1CE4E5B9ull;
    x ^= x >> 31;
    x *= 0x94D049BB133111EBull;
    x ^= x >> 29;
    auto moves = legal_moves(pos);
    return moves[x % moves.size()];
  };
  return s;
}

}  // namespace pizza
