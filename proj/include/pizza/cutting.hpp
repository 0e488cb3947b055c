// cutting.hpp
// The pizza: a circular sequence of nonnegative exact slice sizes, its text
// formats, and the odd-length reindexing into the characteristic cycle.

#pragma once

#include "pizza/rational.hpp"

#include <algorithm>
#include <cstdint>
#include <istream>
#include <numeric>
#include <optional>
#include <span>
#include <sstream>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace pizza {

class Cutting {
 public:
  Cutting() = default;

  explicit Cutting(std::vector<Rational> slices) : slices_(std::move(slices)) {
    if (slices_.empty()) throw std::invalid_argument("a cutting needs at least one slice");
    for (std::size_t i = 0; i < slices_.size(); ++i) {
      if (slices_[i] < 0)
        throw std::invalid_argument("slice " + std::to_string(i) + " has negative size " +
                                    to_string(slices_[i]));
      total_ += slices_[i];
    }
  }

  template <class T>
  static Cutting from(std::initializer_list<T> sizes) {
    std::vector<Rational> v;
    v.reserve(sizes.size());
    for (const auto& s : sizes) v.emplace_back(s);
    return Cutting(std::move(v));
  }

  std::size_t size() const { return slices_.size(); }
  const Rational& total() const { return total_; }
  const std::vector<Rational>& slices() const { return slices_; }

  /// Index is reduced modulo n.
  const Rational& operator[](std::ptrdiff_t i) const { return slices_[wrap(i)]; }

  std::size_t wrap(std::ptrdiff_t i) const {
    auto n = static_cast<std::ptrdiff_t>(slices_.size());
    return static_cast<std::size_t>(((i % n) + n) % n);
  }

  friend bool operator==(const Cutting& a, const Cutting& b) { return a.slices_ == b.slices_; }

 private:
  std::vector<Rational> slices_;
  Rational total_ = 0;
};

/// Cycle position k holds pizza slice 2k mod n. Pizza slice i sits at cycle
/// position i*(n+1)/2 mod n.
class CycleIndexMap {
 public:
  explicit CycleIndexMap(std::size_t n) : n_(n) {
    if (n % 2 == 0) throw std::invalid_argument("the characteristic cycle needs an odd number of slices");
  }
  std::size_t size() const { return n_; }
  std::size_t to_pizza(std::size_t k) const { return (2 * (k % n_)) % n_; }
  std::size_t to_cycle(std::size_t i) const { return ((i % n_) * ((n_ + 1) / 2)) % n_; }

 private:
  std::size_t n_;
};

struct CharacteristicCycle {
  std::vector<Rational> elements;
  std::vector<std::size_t> origin;  // origin[k] = pizza index of element k

  std::size_t size() const { return elements.size(); }
  Rational total() const { return std::accumulate(elements.begin(), elements.end(), Rational(0)); }
};

template <class T>
std::vector<T> cycle_order(std::span<const T> pizza) {
  CycleIndexMap map(pizza.size());
  std::vector<T> v;
  v.reserve(pizza.size());
  for (std::size_t k = 0; k < pizza.size(); ++k) v.push_back(pizza[map.to_pizza(k)]);
  return v;
}

template <class T>
std::vector<T> pizza_order(std::span<const T> cycle) {
  CycleIndexMap map(cycle.size());
  std::vector<T> p(cycle.size());
  for (std::size_t k = 0; k < cycle.size(); ++k) p[map.to_pizza(k)] = cycle[k];
  return p;
}

inline CharacteristicCycle characteristic_cycle(const Cutting& P) {
  CycleIndexMap map(P.size());
  CharacteristicCycle V;
  V.elements = cycle_order(std::span<const Rational>(P.slices()));
  V.origin.resize(P.size());
  for (std::size_t k = 0; k < P.size(); ++k) V.origin[k] = map.to_pizza(k);
  return V;
}

inline Cutting pizza_from_cycle(std::span<const Rational> cycle) {
  return Cutting(pizza_order(cycle));
}

inline Cutting pizza_from_cycle(const CharacteristicCycle& V) {
  return pizza_from_cycle(std::span<const Rational>(V.elements));
}

// ---------------------------------------------------------------------------
// Integer rescaling. The algorithms run on integers: every slice is multiplied
// by the common denominator, which preserves all comparisons exactly.

template <class Int>
struct ScaledSizes {
  std::vector<Int> values;
  Integer denominator = 1;

  Rational unscale(const Int& x) const { return to_rational(x, denominator); }
};

inline ScaledSizes<Integer> scale_to_integers(const Cutting& P) {
  Integer den = 1;
  for (const auto& s : P.slices()) den = boost::multiprecision::lcm(den, denominator(s));
  ScaledSizes<Integer> out;
  out.denominator = den;
  out.values.reserve(P.size());
  for (const auto& s : P.slices()) out.values.push_back(numerator(s) * (den / denominator(s)));
  return out;
}

/// Calls f(const ScaledSizes<Int>&) with Int = std::int64_t when the scaled
/// total leaves enough headroom for the algorithms' small multiples, and with
/// Int = Integer otherwise.
template <class F>
decltype(auto) with_scaled_sizes(const Cutting& P, F&& f) {
  bool integral = std::all_of(P.slices().begin(), P.slices().end(),
                              [](const Rational& r) { return denominator(r) == 1; });
  constexpr std::int64_t kLimit = std::int64_t{1} << 56;
  if (integral && P.total() < kLimit) {
    ScaledSizes<std::int64_t> s;
    s.values.reserve(P.size());
    for (const auto& r : P.slices()) s.values.push_back(numerator(r).convert_to<std::int64_t>());
    return f(std::as_const(s));
  }
  auto big = scale_to_integers(P);
  Integer scaled_total = 0;
  for (const auto& x : big.values) scaled_total += x;
  if (scaled_total < kLimit) {
    ScaledSizes<std::int64_t> s;
    s.denominator = big.denominator;
    s.values.reserve(P.size());
    for (const auto& x : big.values) s.values.push_back(x.convert_to<std::int64_t>());
    return f(std::as_const(s));
  }
  return f(std::as_const(big));
}

// ---------------------------------------------------------------------------
// Text formats.
//
// Line format: sizes separated by commas and/or whitespace; each size is an
// integer, a fraction a/b or a decimal. '#' starts a comment line.
//
// Compact format (command line convenience): one character per slice, digits
// only, with parenthesised groups for anything longer, e.g.
// "0010100(3/2)0(3/2)00202".

namespace detail {

inline bool is_separator(char c) { return c == ',' || c == ' ' || c == '\t' || c == '\r'; }

}  // namespace detail

/// Returns nullopt for blank and comment lines.
inline std::optional<Cutting> parse_cutting_line(std::string_view line, std::size_t line_number = 1) {
  std::size_t first = line.find_first_not_of(" \t\r");
  if (first == std::string_view::npos || line[first] == '#') return std::nullopt;
  std::vector<Rational> sizes;
  std::size_t i = 0;
  while (i < line.size()) {
    if (detail::is_separator(line[i])) {
      ++i;
      continue;
    }
    std::size_t j = i;
    while (j < line.size() && !detail::is_separator(line[j])) ++j;
    Rational value;
    try {
      value = parse_rational(line.substr(i, j - i));
    } catch (const std::invalid_argument& e) {
      throw ParseError(e.what(), line_number, i + 1);
    }
    if (value < 0) throw ParseError("negative slice size", line_number, i + 1);
    sizes.push_back(std::move(value));
    i = j;
  }
  return Cutting(std::move(sizes));
}

inline bool looks_compact(std::string_view text) {
  if (text.size() < 2) return false;
  for (char c : text)
    if (detail::is_separator(c)) return false;
  return text.front() != '#';
}

inline Cutting parse_compact_cutting(std::string_view text) {
  std::vector<Rational> sizes;
  std::size_t i = 0;
  while (i < text.size()) {
    char c = text[i];
    if (c >= '0' && c <= '9') {
      sizes.emplace_back(c - '0');
      ++i;
    } else if (c == '(') {
      auto close = text.find(')', i);
      if (close == std::string_view::npos) throw ParseError("unterminated '('", 1, i + 1);
      try {
        sizes.push_back(parse_rational(text.substr(i + 1, close - i - 1)));
      } catch (const std::invalid_argument& e) {
        throw ParseError(e.what(), 1, i + 2);
      }
      if (sizes.back() < 0) throw ParseError("negative slice size", 1, i + 2);
      i = close + 1;
    } else {
      throw ParseError(std::string("unexpected character '") + c + "'", 1, i + 1);
    }
  }
  if (sizes.empty()) throw ParseError("empty cutting", 1, 1);
  return Cutting(std::move(sizes));
}

/// Accepts either format: compact ("0020(3/2)0") when the text has no
/// separators, is at least two characters long and has no bare fraction or
/// decimal; the line format otherwise.
inline Cutting parse_cutting(std::string_view text) {
  while (!text.empty() && (text.back() == '\n' || text.back() == '\r')) text.remove_suffix(1);
  if (looks_compact(text) &&
      (text.find('(') != std::string_view::npos || text.find_first_of("./") == std::string_view::npos))
    return parse_compact_cutting(text);
  auto c = parse_cutting_line(text);
  if (!c) throw ParseError("no slices", 1, 1);
  return *c;
}

inline std::vector<Cutting> read_cuttings(std::istream& in) {
  std::vector<Cutting> out;
  std::string line;
  std::size_t number = 0;
  while (std::getline(in, line)) {
    ++number;
    if (auto c = parse_cutting_line(line, number)) out.push_back(std::move(*c));
  }
  return out;
}

/// Comma-separated line format.
inline std::string format_cutting(const Cutting& P) {
  std::string out;
  for (std::size_t i = 0; i < P.size(); ++i) {
    if (i) out += ',';
    out += to_string(P.slices()[i]);
  }
  return out;
}

}  // namespace pizza
