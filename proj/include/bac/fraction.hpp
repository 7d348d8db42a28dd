#pragma once

#include "bac/rational.hpp"

#include <algorithm>
#include <numeric>
#include <vector>

namespace bac {

// Small reduced fraction in [0,1]; the weight num+den is what bounds which
// block lengths a critical value matters for.  Kept separate from Rational:
// these are combinatorial labels (criteria boundaries), not channel
// parameters, and their arithmetic must stay overflow-checked-by-design
// (cross products fit __int128 for any realistic n).
struct Fraction {
  long long num = 0;
  long long den = 1;

  static Fraction make(long long n, long long d) {
    if (d == 0) throw std::domain_error("zero denominator");
    if (d < 0) {
      n = -n;
      d = -d;
    }
    long long g = std::gcd(n < 0 ? -n : n, d);
    if (g > 1) {
      n /= g;
      d /= g;
    }
    return Fraction{n, d};
  }

  long long weight() const { return num + den; }

  std::string str() const { return std::to_string(num) + "/" + std::to_string(den); }

  Rational to_rational() const { return Rational(num, den); }
  double to_double() const { return static_cast<double>(num) / static_cast<double>(den); }

  friend bool operator==(const Fraction& a, const Fraction& b) {
    return a.num == b.num && a.den == b.den;
  }
  friend bool operator<(const Fraction& a, const Fraction& b) {
    return static_cast<__int128>(a.num) * b.den < static_cast<__int128>(b.num) * a.den;
  }
  friend bool operator<=(const Fraction& a, const Fraction& b) { return !(b < a); }
};

inline Fraction parse_fraction(std::string_view text) {
  Rational r = parse_rational(text);
  Int n = numerator(r), d = denominator(r);
  if (n < -(Int(1) << 62) || n > (Int(1) << 62) || d > (Int(1) << 62))
    throw std::invalid_argument("fraction out of range: '" + std::string(text) + "'");
  return Fraction{n.convert_to<long long>(), d.convert_to<long long>()};
}

// The n-critical values D_n: reduced fractions in [0,1] of weight <= n.
// 0 = 0/1 has weight 1 and 1 = 1/1 weight 2, so D_2 = {0, 1}; each further n
// adds the level curves that can first separate codes of that block length.
class CriticalSet {
 public:
  explicit CriticalSet(int n) : n_(n) {
    if (n < 2) throw std::domain_error("critical sets start at block length 2");
    values_.push_back(Fraction{0, 1});
    for (long long den = 2; den <= n - 1; ++den)
      for (long long num = 1; num <= std::min(den - 1, n - den); ++num)
        if (std::gcd(num, den) == 1) values_.push_back(Fraction{num, den});
    values_.push_back(Fraction{1, 1});
    std::sort(values_.begin(), values_.end());
  }

  int n() const { return n_; }
  std::size_t size() const { return values_.size(); }
  const std::vector<Fraction>& values() const { return values_; }
  const Fraction& operator[](std::size_t i) const { return values_[i]; }

 private:
  int n_;
  std::vector<Fraction> values_;
};

inline std::vector<Fraction> critical_set(int n) { return CriticalSet(n).values(); }

// t_n = 1 + (1/2) * sum_{k=3..n} phi(k), the number of stable criteria.
// Equivalently |D_n| - 1, which the tests cross-check.
inline long long stable_count(int n) {
  if (n < 2) throw std::domain_error("block lengths start at 2");
  std::vector<int> phi(n + 1);
  std::iota(phi.begin(), phi.end(), 0);
  for (int k = 2; k <= n; ++k)
    if (phi[k] == k)  // k prime
      for (int j = k; j <= n; j += k) phi[j] -= phi[j] / k;
  long long sum = 0;
  for (int k = 3; k <= n; ++k) sum += phi[k];
  return 1 + sum / 2;
}

// Lower boundary r_n of the quasi-symmetric region, the stable criterion
// hugging the BSC curve: r_n = (2n-3-(-1)^n) / (2n+1-(-1)^n), i.e. the
// largest critical value below 1.
inline Fraction quasi_symmetric_boundary(int n) {
  if (n < 3) throw std::domain_error("quasi-symmetric region needs n >= 3");
  const long long sgn = (n % 2 == 0) ? 1 : -1;
  return Fraction::make(2LL * n - 3 - sgn, 2LL * n + 1 - sgn);
}

}  // namespace bac
