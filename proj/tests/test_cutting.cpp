#include "pizza/cutting.hpp"
#include "pizza/cuttings.hpp"
#include "pizza/solver.hpp"

#include <gtest/gtest.h>

#include <sstream>

using namespace pizza;

namespace {

Rational R(long a, long b = 1) { return Rational(a, b); }

// v_k = p_{2k mod n}, written out directly.
std::vector<Rational> interleave(const Cutting& P) {
  std::size_t n = P.size();
  std::vector<Rational> v(n);
  for (std::size_t k = 0; k < n; ++k) v[k] = P.slices()[(2 * k) % n];
  return v;
}

}  // namespace

TEST(Rational, ParsesIntegersFractionsAndDecimalsExactly) {
  EXPECT_EQ(parse_rational("7"), R(7));
  EXPECT_EQ(parse_rational("3/2"), R(3, 2));
  EXPECT_EQ(parse_rational("6/4"), R(3, 2));
  EXPECT_EQ(parse_rational("0.1"), R(1, 10));
  EXPECT_EQ(parse_rational("2.50"), R(5, 2));
  EXPECT_EQ(parse_rational(".5"), R(1, 2));
  EXPECT_EQ(parse_rational("-1/3"), R(-1, 3));
  EXPECT_EQ(parse_rational("010"), R(10));
  EXPECT_EQ(parse_rational("0.010"), R(1, 100));
  EXPECT_EQ(parse_rational("08/010"), R(4, 5));
  EXPECT_EQ(parse_rational("123456789012345678901234567890"), Rational(Integer("123456789012345678901234567890")));
}

TEST(Rational, RejectsMalformedNumbers) {
  for (const char* bad : {"", "x", "1/0", "1/", "/2", "1.2.3", ".", "1e5", "--1"})
    EXPECT_THROW(parse_rational(bad), std::invalid_argument) << bad;
}

TEST(Cutting, TotalAndCircularIndexing) {
  Cutting P = Cutting::from({1, 2, 3});
  EXPECT_EQ(P.size(), 3u);
  EXPECT_EQ(P.total(), R(6));
  EXPECT_EQ(P[3], R(1));
  EXPECT_EQ(P[-1], R(3));
  EXPECT_EQ(P.wrap(-4), 2u);
}

TEST(Cutting, RejectsNegativeAndEmpty) {
  EXPECT_THROW(Cutting(std::vector<Rational>{}), std::invalid_argument);
  EXPECT_THROW(Cutting(std::vector<Rational>{R(1), R(-1)}), std::invalid_argument);
}

TEST(CuttingFormat, LineFormatWithCommasAndWhitespace) {
  auto P = parse_cutting_line("1, 2\t3/2  0.25");
  ASSERT_TRUE(P);
  EXPECT_EQ(P->slices(), (std::vector<Rational>{R(1), R(2), R(3, 2), R(1, 4)}));
}

TEST(CuttingFormat, CommentsAndBlankLinesAreSkipped) {
  EXPECT_FALSE(parse_cutting_line("# a comment"));
  EXPECT_FALSE(parse_cutting_line("   "));
  std::istringstream in("# header\n1,2\n\n  # indented comment\n3 4 5\n");
  auto all = read_cuttings(in);
  ASSERT_EQ(all.size(), 2u);
  EXPECT_EQ(all[1].size(), 3u);
}

TEST(CuttingFormat, ParseErrorsNameLineAndColumn) {
  std::istringstream in("1,2\n1, 2, x\n");
  try {
    read_cuttings(in);
    FAIL() << "expected a parse error";
  } catch (const ParseError& e) {
    EXPECT_EQ(e.line(), 2u);
    EXPECT_EQ(e.column(), 7u);
    EXPECT_NE(std::string(e.what()).find("line 2, column 7"), std::string::npos);
  }
  try {
    parse_cutting("1,-2");
    FAIL() << "expected a parse error";
  } catch (const ParseError& e) {
    EXPECT_EQ(e.column(), 3u);
  }
}

TEST(CuttingFormat, CompactDigitsAndGroups) {
  Cutting P = parse_cutting("002020030300404");
  EXPECT_EQ(P.size(), 15u);
  EXPECT_EQ(P.total(), R(18));
  Cutting Q = parse_cutting("0(3/2)1(10)");
  EXPECT_EQ(Q.slices(), (std::vector<Rational>{R(0), R(3, 2), R(1), R(10)}));
  EXPECT_EQ(parse_cutting("12").size(), 2u);
  EXPECT_EQ(parse_cutting("12,5").slices(), (std::vector<Rational>{R(12), R(5)}));
  EXPECT_EQ(parse_cutting("3/2").slices(), (std::vector<Rational>{R(3, 2)}));
  EXPECT_EQ(parse_cutting("7").slices(), (std::vector<Rational>{R(7)}));
  EXPECT_THROW(parse_cutting("00(1"), ParseError);
  EXPECT_THROW(parse_cutting("00a"), ParseError);
}

TEST(CuttingFormat, FormatRoundTrips) {
  for (std::uint64_t seed = 1; seed <= 50; ++seed) {
    Cutting P = random_cutting(1 + seed % 9, 7, seed);
    std::vector<Rational> s = P.slices();
    s[0] += R(1, 3);
    Cutting Q(s);
    EXPECT_EQ(parse_cutting(format_cutting(Q)).slices(), Q.slices());
  }
}

TEST(CharacteristicCycle, MatchesInterleavingForP15) {
  Cutting P = cutting_15(R(1, 2));
  auto V = characteristic_cycle(P);
  EXPECT_EQ(V.elements, interleave(P));
  std::vector<Rational> expected{R(0), R(1), R(1), R(0), R(0), R(0), R(2), R(2),
                                 R(0), R(0), R(0), R(3, 2), R(3, 2), R(0), R(0)};
  EXPECT_EQ(V.elements, expected);
  for (std::size_t k = 0; k < 15; ++k) EXPECT_EQ(V.origin[k], (2 * k) % 15);
}

TEST(CharacteristicCycle, PizzaNeighboursAreFarApartOnTheCycle) {
  // p_i and p_{i+1} sit at cycle distance m = (n-1)/2 or m + 1.
  for (std::size_t n : {3u, 5u, 9u, 15u, 23u}) {
    CycleIndexMap map(n);
    std::size_t m = (n - 1) / 2;
    for (std::size_t i = 0; i < n; ++i) {
      std::size_t a = map.to_cycle(i), b = map.to_cycle((i + 1) % n);
      std::size_t d = (b + n - a) % n;
      EXPECT_TRUE(d == m || d == m + 1) << n << " " << i;
    }
  }
}

TEST(CharacteristicCycle, RoundTripAndTotals) {
  for (std::uint64_t seed = 1; seed <= 200; ++seed) {
    std::size_t n = 1 + 2 * (seed % 12);
    Cutting P = random_cutting(n, 9, seed);
    auto V = characteristic_cycle(P);
    Rational sum = 0;
    for (const auto& x : V.elements) sum += x;
    EXPECT_EQ(sum, P.total());
    EXPECT_EQ(pizza_from_cycle(V).slices(), P.slices());
    CycleIndexMap map(n);
    for (std::size_t k = 0; k < n; ++k) EXPECT_EQ(map.to_cycle(map.to_pizza(k)), k);
  }
}

TEST(CharacteristicCycle, UndefinedForEvenN) {
  EXPECT_THROW(characteristic_cycle(Cutting::from({1, 2})), std::invalid_argument);
  EXPECT_THROW(CycleIndexMap(4), std::invalid_argument);
}

TEST(Scaling, IntegerRescaleIsExact) {
  Cutting P = parse_cutting("1/2, 1/3, 0.25, 2");
  auto s = scale_to_integers(P);
  EXPECT_EQ(s.denominator, Integer(12));
  EXPECT_EQ(s.values, (std::vector<Integer>{6, 4, 3, 24}));
  EXPECT_EQ(s.unscale(Integer(37)), P.total());
}

TEST(Scaling, HugeSizesFallBackToBigIntegers) {
  Integer big = Integer(1) << 70;
  std::vector<Rational> s{Rational(big), Rational(0), Rational(big + 1), Rational(3), Rational(big / 2)};
  Cutting P(s);
  bool used_big = with_scaled_sizes(P, [](const auto& sc) {
    return std::is_same_v<typename std::decay_t<decltype(sc.values)>::value_type, Integer>;
  });
  EXPECT_TRUE(used_big);
  EXPECT_EQ(solve_optimal(P).alice_value(), brute_force_value(P));
}
