#pragma once

#include <cstddef>
#include <utility>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

#include "lrb/field.hpp"

namespace lrb {

using Int = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

// Integer matrix with sparse row storage. Boundary and coboundary matrices,
// idempotent change-of-basis matrices and path-algebra embeddings are all
// integral, so ranks over the rationals or over F_p are computed from the
// same integer data.
class ExactMatrix {
 public:
  ExactMatrix() = default;
  ExactMatrix(std::size_t rows, std::size_t cols)
      : rows_(rows), cols_(cols), data_(rows) {}

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }

  // Total (dense) entry count; used for size budgets.
  std::size_t entry_count() const { return rows_ * cols_; }

  std::size_t nonzero_count() const;

  // Accumulates `value` into entry (r, c).
  void add(std::size_t r, std::size_t c, const Int& value);

  Int get(std::size_t r, std::size_t c) const;

  const std::vector<std::pair<std::size_t, Int>>& row(std::size_t r) const {
    return data_[r];
  }

  // Exact rank over the given field. Over the rationals this is a
  // fraction-free integer elimination (unit pivots preferred, rows reduced
  // by their gcd); over F_p a standard sparse elimination.
  std::size_t rank(const Field& field) const;

  bool is_zero() const { return nonzero_count() == 0; }

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  // Each row holds (column, value) pairs sorted by column, values nonzero.
  std::vector<std::vector<std::pair<std::size_t, Int>>> data_;
};

ExactMatrix multiply(const ExactMatrix& a, const ExactMatrix& b);

}  // namespace lrb
