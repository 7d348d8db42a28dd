#pragma once

#include "bac/monomial.hpp"

#include <cstdlib>
#include <string>
#include <vector>

namespace bac {

inline constexpr int kDefaultMatrixCap = 10;

// Cap on the block length for dense matrix construction (2^n x 2^n cells).
// Overridable through the BAC_MATRIX_CAP environment variable.
inline int matrix_cap() {
  if (const char* e = std::getenv("BAC_MATRIX_CAP")) {
    char* end = nullptr;
    long v = std::strtol(e, &end, 10);
    if (end && *end == '\0' && v >= 1 && v <= 62) return static_cast<int>(v);
  }
  return kDefaultMatrixCap;
}

// Dense n-fold transition matrix.  Rows are indexed by the received word x,
// columns by the sent word y, so entry (x,y) = Pr(x|y).  Only the distinct
// monomials (at most C(n+3,3) of them) are evaluated; each cell stores an
// index into that table.
class TransitionMatrix {
 public:
  TransitionMatrix(int n, const ChannelParams& ch, int cap) : n_(n), ch_(ch) {
    if (n < 1) throw std::domain_error("block length out of range");
    if (n > cap)
      throw std::length_error("block length " + std::to_string(n) + " exceeds matrix cap " +
                              std::to_string(cap) + " (set BAC_MATRIX_CAP to raise)");

    // dense ids for all quadruples a+b+c+d = n
    const int s = n + 1;
    std::vector<std::uint16_t> lookup(static_cast<std::size_t>(s) * s * s);
    for (int a = 0; a <= n; ++a)
      for (int b = 0; b <= n - a; ++b)
        for (int c = 0; c <= n - a - b; ++c) {
          lookup[(static_cast<std::size_t>(a) * s + b) * s + c] =
              static_cast<std::uint16_t>(monomials_.size());
          monomials_.push_back(Monomial{a, b, c, n - a - b - c});
        }
    values_.reserve(monomials_.size());
    for (const Monomial& m : monomials_) values_.push_back(eval_monomial(m, ch_));

    const std::size_t dim = std::size_t(1) << n;
    cells_.resize(dim * dim);
    for (Word x = 0; x < dim; ++x)
      for (Word y = 0; y < dim; ++y) {
        Monomial m = exponents(x, y, n);
        cells_[x * dim + y] =
            lookup[(static_cast<std::size_t>(m.a) * s + m.b) * s + m.c];
      }
  }

  int n() const { return n_; }
  std::size_t dim() const { return std::size_t(1) << n_; }
  const ChannelParams& channel() const { return ch_; }

  std::uint16_t cell_id(Word x, Word y) const { return cells_[x * dim() + y]; }
  const Monomial& monomial_at(Word x, Word y) const { return monomials_[cell_id(x, y)]; }
  const Rational& value_at(Word x, Word y) const { return values_[cell_id(x, y)]; }

  std::size_t distinct_monomials() const { return monomials_.size(); }
  const std::vector<Monomial>& monomials() const { return monomials_; }
  const std::vector<Rational>& values() const { return values_; }

  Rational column_sum(Word y) const {
    Rational s = 0;
    for (Word x = 0; x < dim(); ++x) s += value_at(x, y);
    return s;
  }

 private:
  int n_;
  ChannelParams ch_;
  std::vector<Monomial> monomials_;
  std::vector<Rational> values_;
  std::vector<std::uint16_t> cells_;
};

inline TransitionMatrix build_matrix(int n, const ChannelParams& ch) {
  return TransitionMatrix(n, ch, matrix_cap());
}

inline TransitionMatrix build_matrix(int n, const ChannelParams& ch, int cap) {
  return TransitionMatrix(n, ch, cap);
}

}  // namespace bac
