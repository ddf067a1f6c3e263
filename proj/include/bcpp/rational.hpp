#ifndef BCPP_RATIONAL_HPP
#define BCPP_RATIONAL_HPP

#include <boost/multiprecision/cpp_int.hpp>

#include <cctype>
#include <stdexcept>
#include <string>
#include <string_view>

namespace bcpp {

using BigInt = boost::multiprecision::cpp_int;

/// Exact rational number, always kept in lowest terms with a positive
/// denominator.
using Rational = boost::multiprecision::cpp_rational;

class ParseError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

namespace detail {

inline bool all_digits(std::string_view s) {
  if (s.empty()) return false;
  for (char c : s)
    if (!std::isdigit(static_cast<unsigned char>(c))) return false;
  return true;
}

// cpp_int treats a leading 0 as an octal prefix, so digits are stripped of
// leading zeros first.
inline BigInt decimal_digits(std::string_view digits) {
  while (digits.size() > 1 && digits.front() == '0') digits.remove_prefix(1);
  if (digits.empty()) return BigInt(0);
  return BigInt{std::string(digits)};
}

inline BigInt parse_integer(std::string_view s, std::string_view whole) {
  bool negative = false;
  if (!s.empty() && (s.front() == '-' || s.front() == '+')) {
    negative = s.front() == '-';
    s.remove_prefix(1);
  }
  if (!all_digits(s))
    throw ParseError("malformed rational '" + std::string(whole) + "'");
  BigInt v = decimal_digits(s);
  return negative ? BigInt(-v) : v;
}

}  // namespace detail

/// Parses "p", "p/q", or a plain decimal such as "0.625". Decimals are
/// converted exactly (no exponent notation).
inline Rational parse_rational(std::string_view text) {
  std::string_view s = text;
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front())))
    s.remove_prefix(1);
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back())))
    s.remove_suffix(1);
  if (s.empty()) throw ParseError("empty rational");

  if (auto slash = s.find('/'); slash != std::string_view::npos) {
    BigInt num = detail::parse_integer(s.substr(0, slash), text);
    std::string_view den_text = s.substr(slash + 1);
    if (!detail::all_digits(den_text))
      throw ParseError("malformed rational '" + std::string(text) + "'");
    BigInt den = detail::decimal_digits(den_text);
    if (den == 0) throw ParseError("zero denominator in '" + std::string(text) + "'");
    return Rational(num, den);
  }

  if (auto dot = s.find('.'); dot != std::string_view::npos) {
    std::string_view int_part = s.substr(0, dot);
    std::string_view frac_part = s.substr(dot + 1);
    bool negative = false;
    if (!int_part.empty() && (int_part.front() == '-' || int_part.front() == '+')) {
      negative = int_part.front() == '-';
      int_part.remove_prefix(1);
    }
    if (int_part.empty() && frac_part.empty())
      throw ParseError("malformed rational '" + std::string(text) + "'");
    if ((!int_part.empty() && !detail::all_digits(int_part)) ||
        (!frac_part.empty() && !detail::all_digits(frac_part)))
      throw ParseError("malformed rational '" + std::string(text) + "'");
    std::string digits = std::string(int_part) + std::string(frac_part);
    BigInt num = detail::decimal_digits(digits);
    BigInt den = boost::multiprecision::pow(BigInt(10), static_cast<unsigned>(frac_part.size()));
    Rational r(num, den);
    return negative ? Rational(-r) : r;
  }

  return Rational(detail::parse_integer(s, text));
}

/// "p" when the denominator is 1, otherwise "p/q".
inline std::string to_string(const Rational& r) {
  const BigInt num = boost::multiprecision::numerator(r);
  const BigInt den = boost::multiprecision::denominator(r);
  if (den == 1) return num.str();
  return num.str() + "/" + den.str();
}

inline const Rational& one_half() {
  static const Rational half(1, 2);
  return half;
}

}  // namespace bcpp

#endif  // BCPP_RATIONAL_HPP
