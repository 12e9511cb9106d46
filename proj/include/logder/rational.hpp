#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <cctype>
#include <stdexcept>
#include <string>
#include <string_view>

namespace logder {

using BigInt = boost::multiprecision::cpp_int;

/// Exact rational scalar. cpp_rational keeps gcd(|num|, den) = 1 and
/// den > 0; the canonical zero is 0/1.
using Rational = boost::multiprecision::cpp_rational;

/// Builds num/den in canonical form. Unlike the raw two-argument
/// cpp_rational constructor this accepts negative denominators.
inline Rational make_rational(const BigInt& num, const BigInt& den) {
  if (den == 0) throw std::invalid_argument("make_rational: zero denominator");
  return Rational(num) / Rational(den);
}

/// Serializes as "p" or "p/q" with no decimal point.
inline std::string rational_to_string(const Rational& r) { return r.str(); }

/// Parses the exact formats produced by rational_to_string.
inline Rational rational_from_string(std::string_view s) {
  const auto bad = [&] {
    throw std::invalid_argument("rational_from_string: malformed value '" + std::string(s) + "'");
  };
  if (s.empty()) bad();
  std::size_t i = (s[0] == '-') ? 1 : 0;
  std::size_t digits = 0;
  while (i < s.size() && std::isdigit(static_cast<unsigned char>(s[i]))) ++i, ++digits;
  if (digits == 0) bad();
  BigInt num(std::string(s.substr(0, i)));
  if (i == s.size()) return Rational(num);
  if (s[i] != '/') bad();
  const std::string_view den_part = s.substr(i + 1);
  if (den_part.empty()) bad();
  for (char c : den_part)
    if (!std::isdigit(static_cast<unsigned char>(c))) bad();
  BigInt den{std::string(den_part)};
  if (den == 0) bad();
  return make_rational(num, den);
}

}  // namespace logder
