#pragma once

#include "bac/bac_function.hpp"
#include "bac/quadrature.hpp"

#include <array>
#include <cmath>
#include <vector>

namespace bac {

// The area of { S < a/b } inside the triangle T reduces to one proper
// integral over [0,1]:
//
//   A(a/b) = Int_0^1  b (x^a - 1)^2 x^(b-1) / ( 2 (x^(a+b) - 1)^2 ) dx ,
//
// whose integrand has a removable singularity at x=1 with limit
// a^2 b / (2 (a+b)^2).  A(1) = 1/4 is the whole triangle.
inline double area_integrand(long long a, long long b, double x) {
  if (x <= 0.0) return b == 1 ? 0.5 : 0.0;
  if (x >= 1.0) return static_cast<double>(a) * a * b / (2.0 * (a + b) * (a + b));
  // log1p keeps x^k - 1 accurate when x is close to 1
  const double lx = std::log1p(x - 1.0);
  const double t1 = std::expm1(a * lx);
  const double t2 = std::expm1((a + b) * lx);
  return b * t1 * t1 * std::exp((b - 1) * lx) / (2.0 * t2 * t2);
}

inline double area(const Fraction& r, double tol = 1e-12) {
  if (r.num == 0 && r.den == 1) return 0.0;  // empty region by convention
  if (r.num < 0 || r.num > r.den) throw std::domain_error("level must lie in (0,1]");
  return adaptive_simpson(
      [a = r.num, b = r.den](double x) { return area_integrand(a, b, x); }, 0.0, 1.0,
      tol);
}

// Measure of each stable criterion at block length n, as a share of the
// triangle (percent).  boundaries[i], boundaries[i+1] delimit share i;
// cumulative[i] = A(boundaries[i]).
struct AreaTable {
  int n = 0;
  std::vector<Fraction> boundaries;
  std::vector<double> cumulative;
  std::vector<double> shares;
};

inline AreaTable percentages(int n, double tol = 1e-12) {
  if (n < 3) throw std::domain_error("percentage tables start at n = 3");
  AreaTable t;
  t.n = n;
  t.boundaries = critical_set(n);
  t.cumulative.reserve(t.boundaries.size());
  for (const Fraction& r : t.boundaries) t.cumulative.push_back(area(r, tol));
  t.shares.reserve(t.boundaries.size() - 1);
  for (std::size_t i = 0; i + 1 < t.boundaries.size(); ++i)
    t.shares.push_back(400.0 * (t.cumulative[i + 1] - t.cumulative[i]));
  return t;
}

inline std::vector<long long> rounded_shares(const AreaTable& t) {
  std::vector<long long> out;
  out.reserve(t.shares.size());
  for (double s : t.shares) out.push_back(std::llround(s));
  return out;
}

// How uneven the partition into stable regions is:
//   R(n) = share of the quasi-symmetric region  / the average share 1/t_n,
//   r(n) = share of the region at the Z-axis    / the average share.
// R grows linearly while r hovers near 1.
struct Ratios {
  int n = 0;
  long long regions = 0;        // t_n
  Fraction boundary;            // r_n, lower edge of the quasi-symmetric region
  double quasi_symmetric = 0.0; // R(n)
  double z_region = 0.0;        // r(n)
};

inline Ratios ratios(int n, double tol = 1e-12) {
  if (n < 4) throw std::domain_error("ratio sequence starts at n = 4");
  Ratios out;
  out.n = n;
  out.regions = stable_count(n);
  out.boundary = quasi_symmetric_boundary(n);
  out.quasi_symmetric = 4.0 * out.regions * (0.25 - area(out.boundary, tol));
  out.z_region = 4.0 * out.regions * area(Fraction{1, n - 1}, tol);
  return out;
}

// |p^a (1-p)^b - q^b (1-q)^a|, the defining residual of the level curve
inline double curve_residual(const Fraction& r, double p, double q) {
  return std::fabs(std::pow(p, double(r.num)) * std::pow(1.0 - p, double(r.den)) -
                   std::pow(q, double(r.den)) * std::pow(1.0 - q, double(r.num)));
}

struct LevelCurve {
  Fraction r;
  std::vector<std::array<double, 2>> points;  // (p,q), ordered by p+q
};

// Traces gamma_{a/b} inside T.  Along each anti-diagonal p+q = tau the
// function g(p) = S(p, tau-p) increases strictly from 0 to 1, so the curve
// crosses it exactly once; the crossing is bisected in log form (robust for
// large exponents) to within p_tol.  For r = 1 the root is exactly tau/2,
// i.e. the BSC diagonal.
inline LevelCurve trace_level_curve(const Fraction& r, int samples,
                                    double tau_eps = 1e-4, double p_tol = 1e-12) {
  if (r.num <= 0 || r.num > r.den) throw std::domain_error("level must lie in (0,1]");
  if (samples < 2) throw std::domain_error("need at least two samples");
  const double a = static_cast<double>(r.num), b = static_cast<double>(r.den);
  LevelCurve curve{r, {}};
  curve.points.reserve(samples);
  for (int i = 0; i < samples; ++i) {
    const double tau = tau_eps + (1.0 - 2.0 * tau_eps) * i / (samples - 1);
    // g < 0 left of the curve, g >= 0 at tau/2
    const auto g = [&](double p) {
      const double q = tau - p;
      return a * std::log(p) + b * std::log1p(-p) - b * std::log(q) -
             a * std::log1p(-q);
    };
    double lo = 0.0, hi = 0.5 * tau;
    while (hi - lo > p_tol) {
      const double mid = 0.5 * (lo + hi);
      (g(mid) < 0.0 ? lo : hi) = mid;
    }
    const double p = 0.5 * (lo + hi);
    curve.points.push_back({p, tau - p});
  }
  return curve;
}

// One curve drawn on the unit square: a critical level curve in T, its
// mirror in T' (swap), either of their phi-images in the upper square, or
// the noisy line itself.  r = 0/1 denotes the p = 0 axis segment.
struct SquareCurve {
  Fraction r;
  bool mirrored = false;
  bool involuted = false;
  bool noisy = false;
  std::vector<std::array<double, 2>> points;

  std::string label() const {
    if (noisy) return "noisy-line";
    std::string s = r.str();
    if (mirrored) s += "-mirror";
    if (involuted) s += "-phi";
    return s;
  }
};

// Every critical curve of weight <= n, its mirror, and both phi-images; the
// level p^a(1-p)^b = q^b(1-q)^a is preserved by phi(p,q) = (1-q,1-p), so the
// images are again pieces of the same algebraic curve, now filling the
// square.  The r=1 curve is its own mirror and the noisy line is dashed by
// the SVG emitter; counting curves with and without the two axis segments
// gives 2 t_n + 1 and 2 t_n - 1 per square.
inline std::vector<SquareCurve> square_curves(int n, int samples,
                                              double tau_eps = 1e-4,
                                              double p_tol = 1e-12) {
  CriticalSet cs(n);
  std::vector<SquareCurve> out;
  out.reserve(4 * cs.size() + 1);
  for (const Fraction& r : cs.values()) {
    std::vector<std::array<double, 2>> base;
    if (r.num == 0) {
      base.reserve(samples);
      for (int i = 0; i < samples; ++i) {
        const double tau = tau_eps + (1.0 - 2.0 * tau_eps) * i / (samples - 1);
        base.push_back({0.0, tau});
      }
    } else {
      base = trace_level_curve(r, samples, tau_eps, p_tol).points;
    }
    std::vector<std::array<double, 2>> mirror(base), invol(base), mirror_invol(base);
    for (auto& pt : mirror) std::swap(pt[0], pt[1]);
    for (auto& pt : invol) pt = {1.0 - pt[1], 1.0 - pt[0]};
    for (auto& pt : mirror_invol) pt = {1.0 - pt[0], 1.0 - pt[1]};
    out.push_back({r, false, false, false, std::move(base)});
    out.push_back({r, true, false, false, std::move(mirror)});
    out.push_back({r, false, true, false, std::move(invol)});
    out.push_back({r, true, true, false, std::move(mirror_invol)});
  }
  SquareCurve noisy{Fraction{1, 1}, false, false, true, {}};
  noisy.points.reserve(samples);
  for (int i = 0; i < samples; ++i) {
    const double t = static_cast<double>(i) / (samples - 1);
    noisy.points.push_back({t, 1.0 - t});
  }
  out.push_back(std::move(noisy));
  return out;
}

}  // namespace bac
