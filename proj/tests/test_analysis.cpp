#include "pizza/analysis.hpp"
#include "pizza/cuttings.hpp"
#include "pizza/solver.hpp"
#include "pizza/strategies.hpp"

#include <gtest/gtest.h>

#include <algorithm>
#include <random>

using namespace pizza;
using I = long long;

namespace {

std::vector<I> random_cycle(std::size_t n, std::mt19937_64& rng, int max = 9, bool sparse = false) {
  std::uniform_int_distribution<int> size(0, max), coin(0, 2);
  std::vector<I> v(n);
  for (auto& x : v) x = sparse && coin(rng) ? 0 : size(rng);
  return v;
}

// Three heavy elements about a third of the way apart over light noise;
// these have p(V) < |V|/2 at any length.
std::vector<I> spiky_cycle(std::size_t n, std::mt19937_64& rng) {
  auto v = random_cycle(n, rng, 2, true);
  std::uniform_int_distribution<std::size_t> jitter(0, n / 12);
  for (std::size_t k = 0; k < 3; ++k) v[(k * n / 3 + jitter(rng)) % n] += 10 * static_cast<I>(n);
  return v;
}

I direct_sum(const std::vector<I>& v, std::size_t start, std::size_t len) {
  I s = 0;
  for (std::size_t t = 0; t < len; ++t) s += v[(start + t) % v.size()];
  return s;
}

bool covers(std::size_t n, std::initializer_list<std::size_t> starts) {
  std::vector<bool> hit(n);
  for (std::size_t s : starts)
    for (std::size_t t = 0; t < (n + 1) / 2; ++t) hit[(s + t) % n] = true;
  return std::all_of(hit.begin(), hit.end(), [](bool b) { return b; });
}

// Every member of the triple is replaced by each strictly smaller
// half-circle in turn; none may keep the cover.
bool replacement_minimal(const std::vector<I>& v, const std::array<std::size_t, 3>& st) {
  std::size_t n = v.size(), h = (n + 1) / 2;
  for (int i = 0; i < 3; ++i) {
    I own = direct_sum(v, st[i], h);
    for (std::size_t s = 0; s < n; ++s) {
      if (!(direct_sum(v, s, h) < own)) continue;
      auto t = st;
      t[i] = s;
      if (covers(n, {t[0], t[1], t[2]})) return false;
    }
  }
  return true;
}

std::vector<I> as_ints(const Cutting& P) {
  std::vector<I> v;
  for (const auto& x : characteristic_cycle(P).elements) v.push_back(static_cast<I>(numerator(x)));
  return v;
}

}  // namespace

TEST(HalfCircles, WindowSumsOn100100100) {
  std::vector<I> v{1, 0, 0, 1, 0, 0, 1, 0, 0};
  auto hc = half_circle_sizes(std::span<const I>(v));
  EXPECT_EQ(hc.sizes, (std::vector<I>{2, 1, 2, 2, 1, 2, 2, 1, 2}));
  EXPECT_EQ(hc.min_index, 1u);
}

TEST(HalfCircles, DegenerateCycles) {
  std::vector<I> zeros(7, 0), one{5};
  EXPECT_EQ(half_circle_sizes(std::span<const I>(zeros)).sizes, zeros);
  EXPECT_EQ(half_circle_sizes(std::span<const I>(one)).sizes, (std::vector<I>{5}));
  std::vector<I> even(4, 1);
  EXPECT_THROW(half_circle_sizes(std::span<const I>(even)), std::invalid_argument);
}

TEST(HalfCircles, SlidingWindowMatchesDirectSums) {
  std::mt19937_64 rng(11);
  for (int rep = 0; rep < 1000; ++rep) {
    std::size_t n = 1 + 2 * (rep % 40);
    auto v = random_cycle(n, rng, 12, rep % 2);
    auto hc = half_circle_sizes(std::span<const I>(v));
    I lowest = hc.sizes[hc.min_index];
    for (std::size_t i = 0; i < n; ++i) {
      ASSERT_EQ(hc.sizes[i], direct_sum(v, i, (n + 1) / 2));
      EXPECT_LE(lowest, hc.sizes[i]);
      if (i < hc.min_index) EXPECT_LT(lowest, hc.sizes[i]);
    }
  }
}

TEST(Potentials, Examples) {
  std::vector<I> v{1, 0, 0, 1, 0, 0, 1, 0, 0};
  auto t = potential_table(std::span<const I>(v));
  EXPECT_EQ(t.element, std::vector<I>(9, 1));
  EXPECT_EQ(t.cycle, 1);

  std::vector<I> zeros(11, 0);
  EXPECT_EQ(potential_table(std::span<const I>(zeros)).cycle, 0);

  std::vector<I> one{7};
  auto single = potential_table(std::span<const I>(one));
  EXPECT_EQ(single.cycle, 7);
  EXPECT_EQ(single.element, one);

  auto V = characteristic_cycle(cutting_15(Rational(1, 2))).elements;
  EXPECT_EQ(potential_table(std::span<const Rational>(V)).cycle, Rational(4));
}

TEST(Potentials, LinearTableMatchesNaiveDefinition) {
  std::mt19937_64 rng(23);
  for (int rep = 0; rep < 1000; ++rep) {
    std::size_t n = 1 + 2 * (rep % 30);
    auto v = random_cycle(n, rng, 9, rep % 2);
    auto t = potential_table(std::span<const I>(v));
    std::size_t h = (n + 1) / 2;
    for (std::size_t i = 0; i < n; ++i) {
      I best = -1;
      for (std::size_t s = 0; s < n; ++s)
        if ((i + n - s) % n < h && (best < 0 || direct_sum(v, s, h) < best)) best = direct_sum(v, s, h);
      ASSERT_EQ(t.element[i], best) << rep << " " << i;
    }
    EXPECT_EQ(t.cycle, *std::max_element(t.element.begin(), t.element.end()));
    EXPECT_EQ(t.element[t.argmax], t.cycle);
    EXPECT_EQ(potentials_naive(std::span<const I>(v)), t.element);
  }
}

TEST(Potentials, LeftAndRightPotentialsOnTheUncoveredArc) {
  std::mt19937_64 rng(5);
  for (int rep = 0; rep < 400; ++rep) {
    std::size_t n = 3 + 2 * (rep % 25), m = (n - 1) / 2, h = m + 1;
    auto v = random_cycle(n, rng, 9, rep % 2);
    auto t = potential_table(std::span<const I>(v));
    ASSERT_EQ(t.uncovered.length, m);
    EXPECT_EQ(t.uncovered.start, (t.min_half_circle + h) % n);
    for (std::size_t off = 0; off < m; ++off) {
      std::size_t k = t.uncovered.at(off, n);
      EXPECT_EQ(std::min(t.left[off], t.right[off]), t.element[k]);
      // The realisers have the recorded size and cover the element.
      EXPECT_EQ(direct_sum(v, t.right_arg[off], h), t.right[off]);
      EXPECT_EQ(direct_sum(v, t.left_arg[off], h), t.left[off]);
      EXPECT_TRUE(CycleArc(t.right_arg[off], h).contains(k, n));
      EXPECT_TRUE(CycleArc(t.left_arg[off], h).contains(k, n));
      // p_r covers the last element of X, p_l the first.
      EXPECT_TRUE(CycleArc(t.right_arg[off], h).contains(t.uncovered.last(n), n));
      EXPECT_TRUE(CycleArc(t.left_arg[off], h).contains(t.uncovered.first(), n));
    }
  }
}

TEST(Potentials, FixedHalfCircleMustBeMinimum) {
  std::vector<I> v{1, 0, 0, 1, 0, 0, 1, 0, 0};
  EXPECT_EQ(potential_table(std::span<const I>(v), std::size_t{4}).min_half_circle, 4u);
  EXPECT_THROW(potential_table(std::span<const I>(v), std::size_t{0}), std::invalid_argument);
}

TEST(MinimalTriple, On100100100) {
  std::vector<I> v{1, 0, 0, 1, 0, 0, 1, 0, 0};
  auto tr = find_minimal_triple(std::span<const I>(v));
  auto starts = tr.starts;
  std::sort(starts.begin(), starts.end());
  EXPECT_EQ(starts, (std::array<std::size_t, 3>{1, 4, 7}));
  const auto& s = tr.partition.sizes;
  bool odd_ones = s[kA] == 0 && s[kC] == 0 && s[kE] == 0 && s[kB] == 1 && s[kD] == 1 && s[kF] == 1;
  bool even_ones = s[kA] == 1 && s[kC] == 1 && s[kE] == 1 && s[kB] == 0 && s[kD] == 0 && s[kF] == 0;
  EXPECT_TRUE(odd_ones || even_ones);
}

TEST(MinimalTriple, OnTheFifteenSliceCutting) {
  auto V = characteristic_cycle(cutting_15(Rational(1, 2))).elements;
  auto tr = find_minimal_triple(std::span<const Rational>(V));
  const auto& p = tr.partition;
  // a = c = e = 0, so the half-circles weigh b, d and f.
  EXPECT_EQ(tr.sizes[0], Rational(2));
  EXPECT_EQ(p.a(), 0);
  EXPECT_EQ(p.c(), 0);
  EXPECT_EQ(p.e(), 0);
  std::vector<Rational> bdf{p.b(), p.d(), p.f()};
  std::sort(bdf.begin(), bdf.end());
  EXPECT_EQ(bdf, (std::vector<Rational>{2, 3, 4}));
}

TEST(MinimalTriple, RejectsPotentialAtLeastHalf) {
  std::vector<I> v{1, 1, 1};
  EXPECT_THROW(find_minimal_triple(std::span<const I>(v)), std::invalid_argument);
}

TEST(MinimalTriple, InvariantsOnRandomCycles) {
  std::mt19937_64 rng(77);
  int checked = 0;
  int large = 0;
  for (int rep = 0; rep < 1500; ++rep) {
    std::size_t n = rep < 1400 ? 3 + 2 * (rep % 20) : 41 + 2 * (rep % 81);
    auto v = rep < 1400 ? random_cycle(n, rng, 9, rep % 3 != 0) : spiky_cycle(n, rng);
    auto t = potential_table(std::span<const I>(v));
    I total = direct_sum(v, 0, n);
    if (!(2 * t.cycle < total)) continue;
    auto tr = find_minimal_triple(std::span<const I>(v), t);
    ++checked;
    large += n > 41;
    const auto& p = tr.partition;
    std::size_t h = (n + 1) / 2;

    EXPECT_TRUE(covers(n, {tr.starts[0], tr.starts[1], tr.starts[2]}));
    EXPECT_EQ(direct_sum(v, tr.starts[0], h), t.half_circles[t.min_half_circle]);
    for (int i = 0; i < 3; ++i) {
      EXPECT_EQ(tr.sizes[i], direct_sum(v, tr.starts[i], h));
      EXPECT_LE(tr.sizes[i], t.cycle);
    }
    ASSERT_TRUE(replacement_minimal(v, tr.starts)) << "n=" << n << " rep=" << rep;

    EXPECT_EQ(p.arc(kA).start, tr.starts[0]);
    EXPECT_EQ(p.arc(kC).start, tr.starts[1]);
    EXPECT_EQ(p.arc(kE).start, tr.starts[2]);
    EXPECT_EQ(p.sum_abc(), tr.sizes[0]);
    EXPECT_EQ(p.sum_cde(), tr.sizes[1]);
    EXPECT_EQ(p.sum_efa(), tr.sizes[2]);
    EXPECT_EQ(p.arc(kA).length, p.arc(kD).length + 1);
    EXPECT_EQ(p.arc(kC).length, p.arc(kF).length + 1);
    EXPECT_EQ(p.arc(kE).length, p.arc(kB).length + 1);
    EXPECT_GE(p.arc(kA).length, 2u);
    std::size_t len = 0;
    I sum = 0;
    for (int i = 0; i < 6; ++i) {
      len += p.arcs[i].length;
      sum += p.sizes[i];
      EXPECT_EQ(p.sizes[i], direct_sum(v, p.arcs[i].start, p.arcs[i].length));
      EXPECT_EQ(p.arcs[(i + 1) % 6].start, (p.arcs[i].start + p.arcs[i].length) % n);
    }
    EXPECT_EQ(len, n);
    EXPECT_EQ(sum, total);
  }
  EXPECT_GT(checked, 200);
  EXPECT_GT(large, 90);
}

TEST(MinimalTriple, ContainsEveryMinimumHalfCircleWhenFixed) {
  std::vector<I> v{1, 0, 0, 1, 0, 0, 1, 0, 0};
  for (std::size_t start : {1u, 4u, 7u}) {
    auto tr = find_minimal_triple(std::span<const I>(v), std::optional<std::size_t>(start));
    EXPECT_EQ(tr.starts[0], start);
    EXPECT_TRUE(replacement_minimal(v, tr.starts));
  }
}

TEST(Partition, NormalizedOrdersTheThreeSums) {
  std::mt19937_64 rng(3);
  for (int rep = 0; rep < 500; ++rep) {
    std::size_t n = 5 + 2 * (rep % 15);
    auto v = random_cycle(n, rng, 9, true);
    auto t = potential_table(std::span<const I>(v));
    if (!(2 * t.cycle < direct_sum(v, 0, n))) continue;
    auto p = find_minimal_triple(std::span<const I>(v), t).partition;
    auto q = p.normalized();
    EXPECT_LE(q.sum_abc(), q.sum_cde());
    EXPECT_LE(q.sum_cde(), q.sum_efa());
    auto a = p.sizes, b = q.sizes;
    std::sort(a.begin(), a.end());
    std::sort(b.begin(), b.end());
    EXPECT_EQ(a, b);
    EXPECT_EQ(p.rotated().rotated().rotated().sizes, p.sizes);
    EXPECT_EQ(p.reflected().reflected().sizes, p.sizes);
    EXPECT_EQ(p.reflected().sum_abc(), p.sum_efa());
    EXPECT_EQ(p.rotated().sum_abc(), p.sum_cde());
  }
}

TEST(Median, Examples) {
  std::vector<I> a{3, 1, 3}, b{1, 1}, c{5}, empty;
  EXPECT_EQ(median_offset(std::span<const I>(a)), 1u);
  EXPECT_EQ(median_offset(std::span<const I>(b)), 0u);
  EXPECT_EQ(median_offset(std::span<const I>(c)), 0u);
  EXPECT_THROW(median_offset(std::span<const I>(empty)), std::invalid_argument);
  std::vector<I> v{3, 0, 0, 0, 3, 1};
  EXPECT_EQ(median_slice(std::span<const I>(v), CycleArc{4, 3}), 5u);
}

TEST(Median, FirstQualifyingSlice) {
  std::mt19937_64 rng(8);
  for (int rep = 0; rep < 500; ++rep) {
    auto arc = random_cycle(1 + rep % 12, rng, 6, rep % 2);
    std::size_t k = median_offset(std::span<const I>(arc));
    I total = direct_sum(arc, 0, arc.size());
    auto ok = [&](std::size_t j) {
      I before = direct_sum(arc, 0, j), after = total - before - arc[j];
      return 2 * before <= total && 2 * after <= total;
    };
    EXPECT_TRUE(ok(k));
    for (std::size_t j = 0; j < k; ++j) EXPECT_FALSE(ok(j));
  }
}

TEST(Potentials, ZeroJumpPlayFromTheBestElementGetsThePotential) {
  for (std::uint64_t seed = 1; seed <= 60; ++seed) {
    std::size_t n = 1 + 2 * (seed % 7);
    Cutting P = random_cutting(n, 6, seed, seed % 2 ? SizeDistribution::Sparse : SizeDistribution::Uniform);
    auto V = characteristic_cycle(P).elements;
    Rational pv = potential_table(std::span<const Rational>(V)).cycle;
    auto br = best_response_gain(P, alice_zero_jump(P), Player::Alice);
    EXPECT_GE(br.worst_gain, pv) << format_cutting(P);
    EXPECT_EQ(br.max_jumps, 0);
  }
}

TEST(CharacteristicCycle, TightZeroJumpCycleIs100100100) {
  EXPECT_EQ(as_ints(tight_zero_jump()), (std::vector<I>{1, 0, 0, 1, 0, 0, 1, 0, 0}));
}
