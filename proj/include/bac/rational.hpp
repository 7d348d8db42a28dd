#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <stdexcept>
#include <string>
#include <string_view>
#include <utility>

namespace bac {

// All decision-making arithmetic is exact.  Floats appear only as display
// values; nothing downstream ever branches on one.
using Int = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

// Three-way result of an exact comparison.
enum class Cmp : int { less = -1, equal = 0, greater = 1 };

inline Cmp cmp(const Rational& x, const Rational& y) {
  if (x < y) return Cmp::less;
  if (y < x) return Cmp::greater;
  return Cmp::equal;
}

inline Cmp cmp(const Int& x, const Int& y) {
  if (x < y) return Cmp::less;
  if (y < x) return Cmp::greater;
  return Cmp::equal;
}

inline Cmp reverse(Cmp c) { return static_cast<Cmp>(-static_cast<int>(c)); }

inline Int ipow(Int base, unsigned e) {
  Int acc = 1;
  while (e) {
    if (e & 1u) acc *= base;
    base *= base;
    e >>= 1u;
  }
  return acc;
}

namespace detail {

inline Int parse_digits(std::string_view s, std::string_view whole) {
  if (s.empty()) throw std::invalid_argument("not a rational: '" + std::string(whole) + "'");
  Int v = 0;
  for (char c : s) {
    if (c < '0' || c > '9') throw std::invalid_argument("not a rational: '" + std::string(whole) + "'");
    v = v * 10 + (c - '0');
  }
  return v;
}

}  // namespace detail

// Accepts "a/b", plain integers, and decimal strings ("0.25" == "1/4"),
// with an optional leading sign.  Everything lands on the same exact value.
inline Rational parse_rational(std::string_view text) {
  std::string_view s = text;
  while (!s.empty() && (s.front() == ' ' || s.front() == '\t')) s.remove_prefix(1);
  while (!s.empty() && (s.back() == ' ' || s.back() == '\t')) s.remove_suffix(1);
  bool neg = false;
  if (!s.empty() && (s.front() == '+' || s.front() == '-')) {
    neg = s.front() == '-';
    s.remove_prefix(1);
  }
  if (s.empty()) throw std::invalid_argument("not a rational: '" + std::string(text) + "'");

  Rational r;
  if (auto slash = s.find('/'); slash != std::string_view::npos) {
    Int num = detail::parse_digits(s.substr(0, slash), text);
    Int den = detail::parse_digits(s.substr(slash + 1), text);
    if (den == 0) throw std::invalid_argument("zero denominator: '" + std::string(text) + "'");
    r = Rational(num, den);
  } else if (auto dot = s.find('.'); dot != std::string_view::npos) {
    std::string_view ip = s.substr(0, dot), fp = s.substr(dot + 1);
    if (ip.empty() && fp.empty())
      throw std::invalid_argument("not a rational: '" + std::string(text) + "'");
    Int num = ip.empty() ? Int(0) : detail::parse_digits(ip, text);
    Int den = 1;
    if (!fp.empty()) {
      num = num * ipow(10, static_cast<unsigned>(fp.size())) + detail::parse_digits(fp, text);
      den = ipow(10, static_cast<unsigned>(fp.size()));
    }
    r = Rational(num, den);
  } else {
    r = Rational(detail::parse_digits(s, text));
  }
  return neg ? Rational(-r) : r;
}

inline std::string format_rational(const Rational& r) {
  return numerator(r).str() + "/" + denominator(r).str();
}

inline long double to_long_double(const Rational& r) {
  return r.convert_to<long double>();
}

inline double to_double(const Rational& r) { return r.convert_to<double>(); }

}  // namespace bac
