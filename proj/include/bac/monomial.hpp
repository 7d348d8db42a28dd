#pragma once

#include "bac/channel.hpp"

#include <bit>
#include <compare>
#include <cstdint>
#include <string_view>
#include <vector>

namespace bac {

// Words are n-bit strings read MSB-first, so word w <-> the integer w.
using Word = std::uint64_t;

// Transition probabilities of the n-fold channel are monomials
//
//   Pr(x | y) = p^a (1-p)^b q^c (1-q)^d,
//
// where (a,b,c,d) count the positions i with (x_i,y_i) equal to
// (1,0), (0,0), (0,1), (1,1) respectively.  a+b+c+d = n and the weight
// a+d is the Hamming weight of the received word x, which is why all
// entries of one matrix row share it.
struct Monomial {
  int a = 0, b = 0, c = 0, d = 0;

  int weight() const { return a + d; }
  int degree() const { return a + b + c + d; }

  friend auto operator<=>(const Monomial&, const Monomial&) = default;
};

inline Monomial exponents(Word x, Word y, int n) {
  if (n < 1 || n > 62) throw std::domain_error("block length out of range");
  const Word mask = (Word(1) << n) - 1;
  if (x > mask || y > mask) throw std::domain_error("word does not fit in n bits");
  Monomial m;
  m.a = std::popcount(x & ~y & mask);
  m.d = std::popcount(x & y);
  m.c = std::popcount(~x & y & mask);
  m.b = n - m.a - m.c - m.d;
  return m;
}

// Bit-string overload; the two words must have equal length.
inline Monomial exponents(std::string_view x, std::string_view y) {
  if (x.size() != y.size()) throw std::domain_error("word length mismatch");
  if (x.empty()) throw std::domain_error("empty words");
  Word wx = 0, wy = 0;
  for (std::size_t i = 0; i < x.size(); ++i) {
    if ((x[i] != '0' && x[i] != '1') || (y[i] != '0' && y[i] != '1'))
      throw std::domain_error("words must be binary strings");
    wx = wx << 1 | Word(x[i] - '0');
    wy = wy << 1 | Word(y[i] - '0');
  }
  return exponents(wx, wy, static_cast<int>(x.size()));
}

inline Rational eval_monomial(const Monomial& m, const ChannelParams& ch) {
  const Int pn = numerator(ch.p()), pd = denominator(ch.p());
  const Int qn = numerator(ch.q()), qd = denominator(ch.q());
  Int num = ipow(pn, m.a) * ipow(pd - pn, m.b) * ipow(qn, m.c) * ipow(qd - qn, m.d);
  Int den = ipow(pd, m.a + m.b) * ipow(qd, m.c + m.d);
  return Rational(num, den);
}

// true when the monomial vanishes at ch (some factor is exactly zero)
inline bool vanishes(const Monomial& m, const ChannelParams& ch) {
  return (m.a > 0 && ch.p() == 0) || (m.b > 0 && ch.p() == 1) ||
         (m.c > 0 && ch.q() == 0) || (m.d > 0 && ch.q() == 1);
}

// All monomials of degree n and weight k, i.e. the candidate transition
// probabilities for received words of Hamming weight k.  There are
// (k+1)(n-k+1) of them.
inline std::vector<Monomial> monomial_family(int n, int k) {
  if (n < 1) throw std::domain_error("block length out of range");
  if (k < 0 || k > n) throw std::domain_error("weight out of range");
  std::vector<Monomial> fam;
  fam.reserve(static_cast<std::size_t>(k + 1) * (n - k + 1));
  for (int a = 0; a <= k; ++a)
    for (int b = 0; b <= n - k; ++b)
      fam.push_back(Monomial{a, b, n - k - b, k - a});
  return fam;
}

}  // namespace bac
