// rational.hpp
// Exact number types used throughout the library, plus parsing and printing.

#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <cstdint>
#include <limits>
#include <stdexcept>
#include <string>
#include <string_view>
#include <type_traits>

namespace pizza {

using Integer = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

class ParseError : public std::runtime_error {
 public:
  ParseError(const std::string& what, std::size_t line, std::size_t column)
      : std::runtime_error("line " + std::to_string(line) + ", column " + std::to_string(column) +
                           ": " + what),
        line_(line),
        column_(column) {}

  std::size_t line() const { return line_; }
  std::size_t column() const { return column_; }

 private:
  std::size_t line_;
  std::size_t column_;
};

namespace detail {

inline bool all_digits(std::string_view s) {
  if (s.empty()) return false;
  for (char c : s)
    if (c < '0' || c > '9') return false;
  return true;
}

/// Base-10 digits to an Integer (a leading 0 would otherwise select octal).
inline Integer decimal(std::string_view digits) {
  auto first = digits.find_first_not_of('0');
  if (first == std::string_view::npos) return 0;
  return Integer{std::string(digits.substr(first))};
}

}  // namespace detail

/// Parses "7", "-3", "3/2" or "1.25" into an exact rational. Decimals are read
/// exactly (1.1 is 11/10). Throws std::invalid_argument on malformed input.
inline Rational parse_rational(std::string_view text) {
  if (text.empty()) throw std::invalid_argument("empty number");
  bool negative = false;
  if (text.front() == '+' || text.front() == '-') {
    negative = text.front() == '-';
    text.remove_prefix(1);
  }
  Rational result;
  if (auto slash = text.find('/'); slash != std::string_view::npos) {
    auto num = text.substr(0, slash);
    auto den = text.substr(slash + 1);
    if (!detail::all_digits(num) || !detail::all_digits(den))
      throw std::invalid_argument("malformed fraction '" + std::string(text) + "'");
    Integer d = detail::decimal(den);
    if (d == 0) throw std::invalid_argument("zero denominator in '" + std::string(text) + "'");
    result = Rational(detail::decimal(num), d);
  } else if (auto dot = text.find('.'); dot != std::string_view::npos) {
    auto whole = text.substr(0, dot);
    auto frac = text.substr(dot + 1);
    if ((!whole.empty() && !detail::all_digits(whole)) || (!frac.empty() && !detail::all_digits(frac)) ||
        (whole.empty() && frac.empty()))
      throw std::invalid_argument("malformed decimal '" + std::string(text) + "'");
    Integer scale = 1;
    for (std::size_t i = 0; i < frac.size(); ++i) scale *= 10;
    Integer digits = detail::decimal(std::string(whole) + std::string(frac));
    result = Rational(digits, scale);
  } else {
    if (!detail::all_digits(text))
      throw std::invalid_argument("malformed number '" + std::string(text) + "'");
    result = Rational(detail::decimal(text));
  }
  return negative ? Rational(-result) : result;
}

/// "num/den", or just "num" when the denominator is 1.
inline std::string to_string(const Rational& r) { return r.str(); }

inline double to_double(const Rational& r) { return r.convert_to<double>(); }

/// Lifts the integer-like types the algorithms run on into a Rational.
template <class T>
Rational to_rational(const T& x) {
  if constexpr (std::is_same_v<T, Rational>)
    return x;
  else
    return Rational(Integer(x));
}

template <class T>
Rational to_rational(const T& x, const Integer& denominator) {
  if constexpr (std::is_same_v<T, Rational>)
    return x / denominator;
  else
    return Rational(Integer(x), denominator);
}

}  // namespace pizza
