#pragma once

#include "bac/bac_function.hpp"
#include "bac/equivalence.hpp"

#include <random>
#include <string>
#include <vector>

namespace bac {

// Deterministic rational points inside a stable region: walk the
// anti-diagonal p + q = 1/2, where S(p, 1/2-p) increases strictly from 0
// (Z-axis) to 1 (BSC), and bisect with exact comparisons until S lands
// strictly inside (lo, hi).  Each found point becomes the new upper end, so
// repeated calls yield distinct representatives of the same region.
inline std::vector<ChannelParams> stable_representatives(const Fraction& lo,
                                                         const Fraction& hi,
                                                         int count) {
  std::vector<ChannelParams> reps;
  Rational a(0), b(1, 4);
  while (static_cast<int>(reps.size()) < count) {
    const Rational mid = (a + b) / 2;
    ChannelParams ch(mid, Rational(1, 2) - mid);
    if (compare_s_to_fraction(ch, lo) != Cmp::greater)
      a = mid;
    else if (compare_s_to_fraction(ch, hi) != Cmp::less)
      b = mid;
    else {
      reps.push_back(ch);
      b = mid;
    }
  }
  return reps;
}

// Brute-force check of the classification theorem at block length n: ordered
// forms must be constant on each of the t_n stable regions, pairwise
// distinct across regions, and the two rational points available on critical
// curves (the Z-channel on gamma_0 and the BSC on gamma_1) must differ from
// every stable form and from each other.  Mismatches are reported, not
// thrown, so a failing run still prints its evidence.
struct TheoremReport {
  int n = 0;
  long long expected_regions = 0;
  int regions_found = 0;
  int curves_found = 0;
  std::vector<std::string> mismatches;

  bool ok() const { return mismatches.empty(); }
};

inline TheoremReport verify_theorem(int n, int reps_per_region = 3,
                                    int cap = matrix_cap()) {
  TheoremReport rep;
  rep.n = n;
  rep.expected_regions = stable_count(n);
  CriticalSet cs(n);

  std::vector<OrderedForm> region_forms;
  for (std::size_t i = 0; i + 1 < cs.size(); ++i) {
    std::vector<ChannelParams> reps =
        stable_representatives(cs[i], cs[i + 1], reps_per_region);
    std::vector<OrderedForm> forms;
    for (const ChannelParams& ch : reps) {
      forms.push_back(ordered_form(build_matrix(n, ch, cap)));
      Criterion c = classify(ch, cs);
      if (c != Criterion{Criterion::Kind::stable, static_cast<int>(i)})
        rep.mismatches.push_back("region " + std::to_string(i) +
                                 ": representative classifies as " + c.str());
      if (!is_stable_point(ch, n))
        rep.mismatches.push_back("region " + std::to_string(i) +
                                 ": representative is not a stable point");
    }
    for (std::size_t j = 1; j < forms.size(); ++j)
      if (!(forms[j] == forms[0]))
        rep.mismatches.push_back("region " + std::to_string(i) +
                                 ": ordered form not constant across representatives");
    region_forms.push_back(forms[0]);
  }

  for (std::size_t i = 0; i < region_forms.size(); ++i)
    for (std::size_t j = i + 1; j < region_forms.size(); ++j)
      if (region_forms[i] == region_forms[j])
        rep.mismatches.push_back("regions " + std::to_string(i) + " and " +
                                 std::to_string(j) + " share an ordered form");

  int distinct = 0;
  for (std::size_t i = 0; i < region_forms.size(); ++i) {
    bool fresh = true;
    for (std::size_t j = 0; j < i; ++j)
      if (region_forms[i] == region_forms[j]) fresh = false;
    if (fresh) ++distinct;
  }
  rep.regions_found = distinct;

  const OrderedForm z_form =
      ordered_form(build_matrix(n, ChannelParams(Rational(0), Rational(1, 2)), cap));
  const OrderedForm bsc_form =
      ordered_form(build_matrix(n, ChannelParams(Rational(1, 4), Rational(1, 4)), cap));
  rep.curves_found = 2;
  if (z_form == bsc_form) {
    rep.mismatches.push_back("Z-channel and BSC share an ordered form");
    rep.curves_found = 1;
  }
  for (std::size_t i = 0; i < region_forms.size(); ++i) {
    if (region_forms[i] == z_form)
      rep.mismatches.push_back("region " + std::to_string(i) +
                               " shares its ordered form with the Z-channel");
    if (region_forms[i] == bsc_form)
      rep.mismatches.push_back("region " + std::to_string(i) +
                               " shares its ordered form with the BSC");
  }
  return rep;
}

// Witness words for the separation lemma.  For r = a/b of weight <= n put
// eta = n - a - b and
//   x = 1^(a+eta) 0^b ,   y = 0^n ,   z = 0^eta 1^(a+b) ;
// then Pr(x|y) = p^(a+eta) (1-p)^b and Pr(x|z) = p^eta q^b (1-q)^a, and for
// p > 0 the order of the two likelihoods mirrors the order of S against a/b
// exactly.  On the p = 0 axis both sides vanish when eta > 0, so only the
// inequality direction survives there.
inline bool verify_witness_word(const ChannelParams& ch, int n, const Fraction& r,
                                std::string* why = nullptr) {
  const int a = static_cast<int>(r.num), b = static_cast<int>(r.den);
  const int eta = n - a - b;
  if (eta < 0 || n > 62) throw std::domain_error("weight exceeds block length");
  const Word x = ((Word(1) << (a + eta)) - 1) << b;
  const Word y = 0;
  const Word z = (Word(1) << (a + b)) - 1;
  const Rational pr_y = eval_monomial(exponents(x, y, n), ch);
  const Rational pr_z = eval_monomial(exponents(x, z, n), ch);
  const Cmp s_side = compare_s_to_fraction(ch, r);
  bool ok;
  if (ch.p() == 0)
    ok = s_side != Cmp::greater && pr_y <= pr_z;
  else
    ok = s_side == cmp(pr_y, pr_z);
  if (!ok && why)
    *why = "witness words disagree at r = " + r.str() + ": Pr(x|y) = " +
           format_rational(pr_y) + ", Pr(x|z) = " + format_rational(pr_z);
  return ok;
}

inline bool verify_witness_words(const ChannelParams& ch, int n,
                                 std::vector<std::string>* mismatches = nullptr) {
  bool all = true;
  const CriticalSet cs(n);
  for (const Fraction& r : cs.values()) {
    std::string why;
    if (!verify_witness_word(ch, n, r, &why)) {
      all = false;
      if (mismatches) mismatches->push_back(why);
    }
  }
  return all;
}

// Uniform random rational channel strictly inside the lower triangle
// (p, q > 0, p < q, p + q < 1), with denominator 2*den_grid.
inline ChannelParams random_channel(std::mt19937_64& rng, long long den_grid = 4096) {
  for (;;) {
    const long long i = static_cast<long long>(rng() % den_grid);
    const long long j = static_cast<long long>(rng() % den_grid);
    // (s,t) uniform on the simplex s+t<1 -> (p,q) = (t/2, s + t/2)
    long long s = i, t = j;
    if (s + t >= den_grid) {
      s = den_grid - s;
      t = den_grid - t;
    }
    Rational p(t, 2 * den_grid), q = Rational(s, den_grid) + p;
    if (p == 0 || p == q || p + q >= 1) continue;
    return ChannelParams(p, q);
  }
}

// Brute-force check of the two reflection identities on random channels:
// swapping (p,q) complements both words, phi complements the sent word only.
inline bool verify_symmetries(int n, int trials, std::uint64_t seed = 20240923,
                              std::vector<std::string>* mismatches = nullptr) {
  std::mt19937_64 rng(seed);
  bool all = true;
  for (int trial = 0; trial < trials; ++trial) {
    const ChannelParams ch = random_channel(rng);
    const TransitionMatrix m = build_matrix(n, ch);
    const TransitionMatrix m_swap = build_matrix(n, ch.swapped());
    const TransitionMatrix m_phi = build_matrix(n, ch.involuted());
    const Word mask = (Word(1) << n) - 1;
    for (Word x = 0; x <= mask && all; ++x)
      for (Word y = 0; y <= mask; ++y) {
        if (m.value_at(x, y) != m_swap.value_at(~x & mask, ~y & mask)) {
          all = false;
          if (mismatches)
            mismatches->push_back("swap identity fails at trial " +
                                  std::to_string(trial));
          break;
        }
        if (m.value_at(x, y) != m_phi.value_at(x, ~y & mask)) {
          all = false;
          if (mismatches)
            mismatches->push_back("involution identity fails at trial " +
                                  std::to_string(trial));
          break;
        }
      }
    if (!all && !mismatches) return false;
  }
  return all;
}

}  // namespace bac
