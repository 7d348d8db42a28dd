#pragma once

#include "bac/channel.hpp"
#include "bac/fraction.hpp"

#include <cmath>
#include <limits>
#include <optional>
#include <string>

namespace bac {

// S(p,q) = (ln(1-p) - ln q) / (ln(1-q) - ln p) on the triangle T, with the
// conventions S(0,q) = 0 and S(p,p) = 1.  Display value only; decisions use
// compare_s_to_fraction below.
inline long double s_value(const ChannelParams& ch) {
  if (ch.region() != Region::triangle_t)
    throw std::domain_error("S is defined on the triangle p <= q, p+q < 1");
  if (ch.p() == 0) return 0.0L;
  if (ch.is_bsc()) return 1.0L;
  const long double p = to_long_double(ch.p());
  const long double q = to_long_double(ch.q());
  return (std::log1p(-p) - std::log(q)) / (std::log1p(-q) - std::log(p));
}

// Exact three-way comparison of S(p,q) against a/b via the equivalence
//
//   S(p,q) >= a/b   <=>   p^a (1-p)^b >= q^b (1-q)^a        (p > 0),
//
// cross-multiplied into integers.  At p = 0 the convention S = 0 wins: the
// monomial relation degenerates there (1-p > q strictly while S equals 0/1),
// so the axis is answered directly.
inline Cmp compare_s_to_fraction(const ChannelParams& ch, const Fraction& r) {
  if (ch.region() != Region::triangle_t)
    throw std::domain_error("S-comparisons are defined on the triangle p <= q, p+q < 1");
  if (r.num < 0 || r.num > r.den) throw std::domain_error("fraction outside [0,1]");
  if (ch.p() == 0) return r.num == 0 ? Cmp::equal : Cmp::less;

  const unsigned a = static_cast<unsigned>(r.num), b = static_cast<unsigned>(r.den);
  const Int pn = numerator(ch.p()), pd = denominator(ch.p());
  const Int qn = numerator(ch.q()), qd = denominator(ch.q());
  Int lhs = ipow(pn, a) * ipow(pd - pn, b) * ipow(qd, a + b);
  Int rhs = ipow(qn, b) * ipow(qd - qn, a) * ipow(pd, a + b);
  return cmp(lhs, rhs);
}

// A decision criterion at block length n: either the i-th stable region
// (the open interval between consecutive critical values) or the i-th
// critical curve.  Indices follow the sorted order of D_n, so unstable 0 is
// the Z-channel axis and unstable t_n the BSC curve.
struct Criterion {
  enum class Kind { stable, unstable };
  Kind kind = Kind::stable;
  int index = 0;

  friend bool operator==(const Criterion&, const Criterion&) = default;

  std::string str() const {
    return (kind == Kind::stable ? "stable " : "unstable ") + std::to_string(index);
  }
};

inline Criterion classify(const ChannelParams& ch, const CriticalSet& cs) {
  // S lands in [0,1] = [cs[0], cs[last]]; binary search by exact comparison
  const auto& v = cs.values();
  std::size_t lo = 0, hi = v.size() - 1;
  Cmp c = compare_s_to_fraction(ch, v[lo]);
  if (c == Cmp::equal) return {Criterion::Kind::unstable, 0};
  c = compare_s_to_fraction(ch, v[hi]);
  if (c == Cmp::equal) return {Criterion::Kind::unstable, static_cast<int>(hi)};
  // invariant: v[lo] < S < v[hi]
  while (hi - lo > 1) {
    std::size_t mid = lo + (hi - lo) / 2;
    c = compare_s_to_fraction(ch, v[mid]);
    if (c == Cmp::equal) return {Criterion::Kind::unstable, static_cast<int>(mid)};
    (c == Cmp::greater ? lo : hi) = mid;
  }
  return {Criterion::Kind::stable, static_cast<int>(lo)};
}

inline Criterion classify(const ChannelParams& ch, int n) {
  return classify(ch, CriticalSet(n));
}

// S with its exact position: either a critical value hit exactly, or the
// bracketing pair of adjacent critical values at the requested weight bound.
struct SValue {
  long double value = 0.0L;
  std::optional<Fraction> hit;
  std::optional<std::pair<Fraction, Fraction>> bracket;
};

inline SValue bac_s(const ChannelParams& ch, int bracket_order = 16) {
  CriticalSet cs(bracket_order);
  Criterion c = classify(ch, cs);
  SValue out;
  out.value = s_value(ch);
  if (c.kind == Criterion::Kind::unstable)
    out.hit = cs[static_cast<std::size_t>(c.index)];
  else
    out.bracket = std::pair{cs[static_cast<std::size_t>(c.index)],
                            cs[static_cast<std::size_t>(c.index) + 1]};
  return out;
}

// n-equivalence through the criteria theorem: same cell of the D_n partition.
inline bool equivalent_by_s(const ChannelParams& c1, const ChannelParams& c2, int n) {
  CriticalSet cs(n);
  return classify(c1, cs) == classify(c2, cs);
}

// Equivalence for every block length simultaneously cannot be decided in
// finite time when both S values are irrational and equal; the scan below
// bounds the search by fraction weight and reports the least block length
// that separates the channels, if one exists up to the horizon.
struct Separation {
  int horizon = 0;
  std::optional<int> separated_at;  // least n with distinct criteria
};

inline Separation separate(const ChannelParams& c1, const ChannelParams& c2,
                           int horizon = 64) {
  if (horizon < 2) throw std::domain_error("horizon starts at 2");
  Separation out{horizon, std::nullopt};
  long long best = horizon + 1;
  const CriticalSet cs(horizon);
  for (const Fraction& r : cs.values()) {
    if (std::max(r.weight(), 2LL) >= best) continue;
    if (compare_s_to_fraction(c1, r) != compare_s_to_fraction(c2, r))
      best = std::max(r.weight(), 2LL);
  }
  if (best <= horizon) out.separated_at = static_cast<int>(best);
  return out;
}

// S extended to both lower triangles by the swap symmetry: on T' the value
// is 1/S(q,p), so the extension ranges through (0, +inf] with the BSC curve
// at 1 and the q=0 axis at +infinity.
inline long double extended_s(const ChannelParams& ch) {
  switch (ch.region()) {
    case Region::triangle_t:
      return s_value(ch);
    case Region::triangle_t_prime: {
      if (ch.q() == 0) return std::numeric_limits<long double>::infinity();
      return 1.0L / s_value(ch.swapped());
    }
    default:
      throw std::domain_error("extended S is defined below the noisy line");
  }
}

// log-scale distance between criteria positions; needs S in (0, inf), which
// excludes the two Z-axes.
inline long double channel_distance(const ChannelParams& c1, const ChannelParams& c2) {
  for (const ChannelParams* ch : {&c1, &c2}) {
    if (reasonableness(*ch) != Reasonableness::reasonable)
      throw std::domain_error("distance is defined below the noisy line");
    if (ch->p() == 0 || ch->q() == 0)
      throw std::domain_error("distance is undefined on the Z-axes");
  }
  return std::fabs(std::log(extended_s(c1)) - std::log(extended_s(c2)));
}

}  // namespace bac
