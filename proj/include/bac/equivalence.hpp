#pragma once

#include "bac/ordered_form.hpp"

#include <map>
#include <tuple>

namespace bac {

// Two channels are n-equivalent when maximum-likelihood decoding coincides
// on every n-block code; by the ordered-form characterization this is just
// equality of M*.  This is the brute-force route.
inline bool equivalent(const ChannelParams& c1, const ChannelParams& c2, int n,
                       int cap) {
  if (c1 == c2) return true;
  return ordered_form(build_matrix(n, c1, cap)) == ordered_form(build_matrix(n, c2, cap));
}

inline bool equivalent(const ChannelParams& c1, const ChannelParams& c2, int n) {
  return equivalent(c1, c2, n, matrix_cap());
}

// Memoized exact comparator of two equal-weight monomials at one channel.
// For f = (a1,b1,c1,d1) and g = (a2,b2,c2,d2) in one family the differences
// satisfy c1-c2 = -(b1-b2) and d1-d2 = -(a1-a2), so after cancelling common
// factors the comparison depends only on alpha = a1-a2 and beta = b1-b2:
//
//   f ? g   <=>   p^alpha (1-p)^beta ? q^beta (1-q)^alpha .
//
// Cancellation is invalid when a monomial vanishes (a zero factor on the
// boundary of the square), so vanishing is resolved first and recorded in
// the memo key.
class FamilyOrder {
 public:
  explicit FamilyOrder(const ChannelParams& ch) : ch_(ch) {}

  Cmp compare(const Monomial& f, const Monomial& g) {
    const bool z1 = vanishes(f, ch_), z2 = vanishes(g, ch_);
    if (z1 && z2) return Cmp::equal;
    if (z1) return Cmp::less;
    if (z2) return Cmp::greater;
    return compare_key(f.a - g.a, f.b - g.b);
  }

  // compare p^alpha (1-p)^beta against q^beta (1-q)^alpha, neither side zero
  Cmp compare_key(int alpha, int beta) {
    if (alpha == 0 && beta == 0) return Cmp::equal;
    auto it = memo_.find({alpha, beta});
    if (it != memo_.end()) return it->second;
    const auto pos = [](int v) { return v > 0 ? v : 0; };
    Monomial lhs{pos(alpha), pos(beta), pos(-beta), pos(-alpha)};
    Monomial rhs{pos(-alpha), pos(-beta), pos(beta), pos(alpha)};
    Cmp c = cmp(eval_monomial(lhs, ch_), eval_monomial(rhs, ch_));
    memo_.emplace(std::pair{alpha, beta}, c);
    return c;
  }

  const ChannelParams& channel() const { return ch_; }

 private:
  ChannelParams ch_;
  std::map<std::pair<int, int>, Cmp> memo_;
};

namespace detail {

// For channels off the square's boundary no monomial vanishes, so agreement
// of all within-family comparisons reduces to agreement on every difference
// key (alpha, beta) with |alpha|+|beta| <= n; keys and their negatives give
// reversed comparisons, so half the grid suffices.
template <typename Visit>
bool all_family_keys(int n, Visit&& visit) {
  for (int beta = 1; beta <= n; ++beta)
    if (!visit(0, beta)) return false;
  for (int alpha = 1; alpha <= n; ++alpha)
    for (int beta = -(n - alpha); beta <= n - alpha; ++beta)
      if (!visit(alpha, beta)) return false;
  return true;
}

template <typename Check>
bool all_family_pairs(int n, Check&& check) {
  for (int k = 0; k <= n; ++k) {
    std::vector<Monomial> fam = monomial_family(n, k);
    for (std::size_t i = 0; i < fam.size(); ++i)
      for (std::size_t j = i + 1; j < fam.size(); ++j)
        if (!check(fam[i], fam[j])) return false;
  }
  return true;
}

}  // namespace detail

// Family route to n-equivalence: the matrices never get built; instead every
// pair of same-weight candidate probabilities must compare identically at
// the two channels.  Exact, and usable far beyond the dense-matrix cap.
inline bool equivalent_by_families(const ChannelParams& c1, const ChannelParams& c2,
                                   int n) {
  if (n < 1) throw std::domain_error("block length out of range");
  FamilyOrder o1(c1), o2(c2);
  if (c1.interior() && c2.interior())
    return detail::all_family_keys(n, [&](int alpha, int beta) {
      return o1.compare_key(alpha, beta) == o2.compare_key(alpha, beta);
    });
  return detail::all_family_pairs(n, [&](const Monomial& f, const Monomial& g) {
    return o1.compare(f, g) == o2.compare(f, g);
  });
}

// A channel is a stable point at block length n when no two distinct
// same-weight monomials collide there; stability means a whole neighbourhood
// decodes identically.
inline bool is_stable_point(const ChannelParams& ch, int n) {
  if (n < 1) throw std::domain_error("block length out of range");
  FamilyOrder o(ch);
  if (ch.interior())
    return detail::all_family_keys(n, [&](int alpha, int beta) {
      return o.compare_key(alpha, beta) != Cmp::equal;
    });
  return detail::all_family_pairs(n, [&](const Monomial& f, const Monomial& g) {
    return o.compare(f, g) != Cmp::equal;
  });
}

}  // namespace bac
