#pragma once

#include "bac/transition_matrix.hpp"

#include <algorithm>
#include <numeric>

namespace bac {

// The ordered form M* of a matrix M replaces every entry by the number of
// entries in its own row that are strictly smaller.  It is the complete
// invariant of maximum-likelihood decoding: two channels decode every
// n-block code identically iff their n-fold matrices have equal ordered
// forms.  Ties (equal transition probabilities) produce equal counts, which
// is what makes the form collapse on the noisy line and on critical curves.
class OrderedForm {
 public:
  OrderedForm(int n, std::vector<std::uint32_t> counts)
      : n_(n), counts_(std::move(counts)) {}

  int n() const { return n_; }
  std::size_t dim() const { return std::size_t(1) << n_; }
  std::uint32_t at(std::size_t row, std::size_t col) const {
    return counts_[row * dim() + col];
  }

  std::vector<std::vector<std::uint32_t>> rows() const {
    std::vector<std::vector<std::uint32_t>> out(dim());
    for (std::size_t i = 0; i < dim(); ++i)
      out[i].assign(counts_.begin() + i * dim(), counts_.begin() + (i + 1) * dim());
    return out;
  }

  friend bool operator==(const OrderedForm&, const OrderedForm&) = default;

 private:
  int n_;
  std::vector<std::uint32_t> counts_;
};

namespace detail {

// counts[j] = #{ k : row[k] < row[j] }, computed by sorting a copy once
template <typename T>
void strict_rank_row(const std::vector<T>& row, std::uint32_t* out) {
  std::vector<T> sorted(row);
  std::sort(sorted.begin(), sorted.end());
  for (std::size_t j = 0; j < row.size(); ++j)
    out[j] = static_cast<std::uint32_t>(
        std::lower_bound(sorted.begin(), sorted.end(), row[j]) - sorted.begin());
}

}  // namespace detail

inline OrderedForm ordered_form(const TransitionMatrix& m) {
  // Rank the distinct cell values once, globally and exactly; ties share a
  // rank.  Row-local counts then reduce to integer comparisons.
  const std::size_t k = m.distinct_monomials();
  std::vector<std::uint32_t> order(k);
  std::iota(order.begin(), order.end(), 0u);
  const std::vector<Rational>& vals = m.values();
  std::sort(order.begin(), order.end(),
            [&](std::uint32_t i, std::uint32_t j) { return vals[i] < vals[j]; });
  std::vector<std::uint32_t> rank(k);
  std::uint32_t r = 0;
  for (std::size_t i = 0; i < k; ++i) {
    if (i > 0 && vals[order[i - 1]] != vals[order[i]]) ++r;
    rank[order[i]] = r;
  }

  const std::size_t dim = m.dim();
  std::vector<std::uint32_t> counts(dim * dim);
  std::vector<std::uint32_t> row(dim);
  for (Word x = 0; x < dim; ++x) {
    for (Word y = 0; y < dim; ++y) row[y] = rank[m.cell_id(x, y)];
    detail::strict_rank_row(row, counts.data() + x * dim);
  }
  return OrderedForm(m.n(), std::move(counts));
}

// Re-ranking an ordered form must reproduce it (M** = M*).
inline OrderedForm ordered_form(const OrderedForm& m) {
  const std::size_t dim = m.dim();
  std::vector<std::uint32_t> counts(dim * dim);
  std::vector<std::uint32_t> row(dim);
  for (std::size_t x = 0; x < dim; ++x) {
    for (std::size_t y = 0; y < dim; ++y) row[y] = m.at(x, y);
    detail::strict_rank_row(row, counts.data() + x * dim);
  }
  return OrderedForm(m.n(), std::move(counts));
}

}  // namespace bac
