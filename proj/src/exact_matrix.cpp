#include "lrb/exact_matrix.hpp"

#include <algorithm>
#include <cstdint>
#include <limits>

namespace lrb {

namespace {

// Row scaling/combination policies for the shared sparse elimination below.
// Over the integers: r <- pv*r - rc*pivot, then reduce by the row gcd, so no
// fractions ever appear. Over F_p: r <- r - (rc/pv)*pivot.

struct IntOps {
  using Value = Int;

  static Value combine_self(const Value& pv, const Value& a) { return pv * a; }
  static Value combine_pivot(const Value& rc, const Value& a) { return rc * a; }

  static void normalize(std::vector<std::pair<std::size_t, Value>>& row) {
    Int g = 0;
    for (const auto& [c, v] : row) {
      g = boost::multiprecision::gcd(g, v);
      if (g == 1) return;
    }
    if (g > 1) {
      for (auto& [c, v] : row) v /= g;
    }
  }
};

struct ModOps {
  using Value = std::uint64_t;
  std::uint64_t p;

  static std::uint64_t inverse(std::uint64_t a, std::uint64_t p) {
    // extended Euclid; p prime, a != 0 mod p
    std::int64_t t = 0, new_t = 1;
    std::int64_t r = static_cast<std::int64_t>(p), new_r = static_cast<std::int64_t>(a);
    while (new_r != 0) {
      std::int64_t q = r / new_r;
      t -= q * new_t;
      std::swap(t, new_t);
      r -= q * new_r;
      std::swap(r, new_r);
    }
    if (t < 0) t += static_cast<std::int64_t>(p);
    return static_cast<std::uint64_t>(t);
  }
};

// Eliminates with the row `pivot` (pivot value pv at column pc) every row in
// `targets` that has a nonzero entry at pc. Rows stay sorted by column.
std::vector<std::pair<std::size_t, Int>> eliminate_int(
    const std::vector<std::pair<std::size_t, Int>>& row, const Int& rc,
    const std::vector<std::pair<std::size_t, Int>>& pivot, const Int& pv,
    std::size_t pc) {
  std::vector<std::pair<std::size_t, Int>> out;
  out.reserve(row.size() + pivot.size());
  std::size_t i = 0, j = 0;
  while (i < row.size() || j < pivot.size()) {
    if (j == pivot.size() || (i < row.size() && row[i].first < pivot[j].first)) {
      out.emplace_back(row[i].first, pv * row[i].second);
      ++i;
    } else if (i == row.size() || pivot[j].first < row[i].first) {
      out.emplace_back(pivot[j].first, -rc * pivot[j].second);
      ++j;
    } else {
      Int v = pv * row[i].second - rc * pivot[j].second;
      if (v != 0) out.emplace_back(row[i].first, std::move(v));
      ++i;
      ++j;
    }
  }
  (void)pc;
  IntOps::normalize(out);
  return out;
}

std::vector<std::pair<std::size_t, std::uint64_t>> eliminate_mod(
    const std::vector<std::pair<std::size_t, std::uint64_t>>& row,
    std::uint64_t factor,
    const std::vector<std::pair<std::size_t, std::uint64_t>>& pivot,
    std::uint64_t p) {
  // r <- r - factor * pivot (mod p)
  std::vector<std::pair<std::size_t, std::uint64_t>> out;
  out.reserve(row.size() + pivot.size());
  std::size_t i = 0, j = 0;
  while (i < row.size() || j < pivot.size()) {
    if (j == pivot.size() || (i < row.size() && row[i].first < pivot[j].first)) {
      out.push_back(row[i]);
      ++i;
    } else if (i == row.size() || pivot[j].first < row[i].first) {
      std::uint64_t v = (p - factor * pivot[j].second % p) % p;
      if (v != 0) out.emplace_back(pivot[j].first, v);
      ++j;
    } else {
      std::uint64_t v = (row[i].second + p - factor * pivot[j].second % p) % p;
      if (v != 0) out.emplace_back(row[i].first, v);
      ++i;
      ++j;
    }
  }
  return out;
}

template <class Row>
std::size_t sparse_rank_impl(std::vector<Row>& rows, std::size_t cols,
                             auto find_value, auto do_eliminate) {
  std::vector<std::size_t> col_count(cols, 0);
  std::vector<char> active(rows.size(), 1);
  for (const auto& r : rows) {
    for (const auto& [c, v] : r) ++col_count[c];
  }

  std::size_t rank = 0;
  for (;;) {
    // pivot column: fewest active nonzeros
    std::size_t pc = cols;
    for (std::size_t c = 0; c < cols; ++c) {
      if (col_count[c] > 0 && (pc == cols || col_count[c] < col_count[pc])) pc = c;
    }
    if (pc == cols) break;

    // candidate rows with an entry at pc; prefer unit values, then short rows
    std::size_t pr = rows.size();
    bool pr_unit = false;
    for (std::size_t r = 0; r < rows.size(); ++r) {
      if (!active[r]) continue;
      if (!find_value(rows[r], pc)) continue;
      bool unit = find_value(rows[r], pc) == 2;
      if (pr == rows.size() || (unit && !pr_unit) ||
          (unit == pr_unit && rows[r].size() < rows[pr].size())) {
        pr = r;
        pr_unit = unit;
      }
    }

    for (std::size_t r = 0; r < rows.size(); ++r) {
      if (!active[r] || r == pr) continue;
      if (!find_value(rows[r], pc)) continue;
      for (const auto& [c, v] : rows[r]) --col_count[c];
      rows[r] = do_eliminate(rows[r], rows[pr], pc);
      for (const auto& [c, v] : rows[r]) ++col_count[c];
    }

    for (const auto& [c, v] : rows[pr]) --col_count[c];
    active[pr] = 0;
    Row().swap(rows[pr]);
    ++rank;
  }
  return rank;
}

}  // namespace

void ExactMatrix::add(std::size_t r, std::size_t c, const Int& value) {
  if (value == 0) return;
  auto& row = data_[r];
  auto it = std::lower_bound(
      row.begin(), row.end(), c,
      [](const std::pair<std::size_t, Int>& e, std::size_t col) { return e.first < col; });
  if (it != row.end() && it->first == c) {
    it->second += value;
    if (it->second == 0) row.erase(it);
  } else {
    row.insert(it, {c, value});
  }
}

Int ExactMatrix::get(std::size_t r, std::size_t c) const {
  const auto& row = data_[r];
  auto it = std::lower_bound(
      row.begin(), row.end(), c,
      [](const std::pair<std::size_t, Int>& e, std::size_t col) { return e.first < col; });
  if (it != row.end() && it->first == c) return it->second;
  return 0;
}

std::size_t ExactMatrix::nonzero_count() const {
  std::size_t n = 0;
  for (const auto& r : data_) n += r.size();
  return n;
}

std::size_t ExactMatrix::rank(const Field& field) const {
  if (rows_ == 0 || cols_ == 0) return 0;

  if (field.is_rational()) {
    auto rows = data_;
    auto find = [](const std::vector<std::pair<std::size_t, Int>>& row,
                   std::size_t c) -> int {
      auto it = std::lower_bound(
          row.begin(), row.end(), c,
          [](const std::pair<std::size_t, Int>& e, std::size_t col) { return e.first < col; });
      if (it == row.end() || it->first != c) return 0;
      Int a = boost::multiprecision::abs(it->second);
      return a == 1 ? 2 : 1;
    };
    auto elim = [&](const std::vector<std::pair<std::size_t, Int>>& row,
                    const std::vector<std::pair<std::size_t, Int>>& pivot,
                    std::size_t pc) {
      Int pv, rc;
      for (const auto& [c, v] : pivot) {
        if (c == pc) pv = v;
      }
      for (const auto& [c, v] : row) {
        if (c == pc) rc = v;
      }
      return eliminate_int(row, rc, pivot, pv, pc);
    };
    return sparse_rank_impl(rows, cols_, find, elim);
  }

  const std::uint64_t p = field.characteristic();
  std::vector<std::vector<std::pair<std::size_t, std::uint64_t>>> rows(rows_);
  for (std::size_t r = 0; r < rows_; ++r) {
    for (const auto& [c, v] : data_[r]) {
      Int m = v % static_cast<long>(p);
      if (m < 0) m += static_cast<long>(p);
      std::uint64_t mv = m.convert_to<std::uint64_t>();
      if (mv != 0) rows[r].emplace_back(c, mv);
    }
  }
  auto find = [](const std::vector<std::pair<std::size_t, std::uint64_t>>& row,
                 std::size_t c) -> int {
    auto it = std::lower_bound(
        row.begin(), row.end(), c,
        [](const std::pair<std::size_t, std::uint64_t>& e, std::size_t col) {
          return e.first < col;
        });
    if (it == row.end() || it->first != c) return 0;
    return it->second == 1 ? 2 : 1;
  };
  auto elim = [&](const std::vector<std::pair<std::size_t, std::uint64_t>>& row,
                  const std::vector<std::pair<std::size_t, std::uint64_t>>& pivot,
                  std::size_t pc) {
    std::uint64_t pv = 0, rc = 0;
    for (const auto& [c, v] : pivot) {
      if (c == pc) pv = v;
    }
    for (const auto& [c, v] : row) {
      if (c == pc) rc = v;
    }
    std::uint64_t factor = rc * ModOps::inverse(pv, p) % p;
    return eliminate_mod(row, factor, pivot, p);
  };
  return sparse_rank_impl(rows, cols_, find, elim);
}

ExactMatrix multiply(const ExactMatrix& a, const ExactMatrix& b) {
  if (a.cols() != b.rows()) {
    throw InvalidInput("ShapeMismatch", "matrix product shape mismatch");
  }
  ExactMatrix out(a.rows(), b.cols());
  for (std::size_t r = 0; r < a.rows(); ++r) {
    for (const auto& [k, av] : a.row(r)) {
      for (const auto& [c, bv] : b.row(k)) {
        out.add(r, c, av * bv);
      }
    }
  }
  return out;
}

}  // namespace lrb
