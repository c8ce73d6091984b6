#include "lrb/algebra.hpp"

#include <algorithm>
#include <numeric>

#include "lrb/homological.hpp"

namespace lrb {

AlgebraElement AlgebraElement::basis(int size, int element) {
  AlgebraElement x = zero(size);
  x.coeff[static_cast<std::size_t>(element)] = 1;
  return x;
}

AlgebraElement algebra_mul(const Lrb& b, const AlgebraElement& x, const AlgebraElement& y) {
  AlgebraElement out = AlgebraElement::zero(b.size());
  for (int i = 0; i < b.size(); ++i) {
    if (x.coeff[i] == 0) continue;
    for (int j = 0; j < b.size(); ++j) {
      if (y.coeff[j] == 0) continue;
      out.coeff[b.mul(i, j)] += x.coeff[i] * y.coeff[j];
    }
  }
  return out;
}

AlgebraElement algebra_add(const AlgebraElement& x, const AlgebraElement& y) {
  AlgebraElement out = x;
  for (std::size_t i = 0; i < out.coeff.size(); ++i) out.coeff[i] += y.coeff[i];
  return out;
}

AlgebraElement algebra_sub(const AlgebraElement& x, const AlgebraElement& y) {
  AlgebraElement out = x;
  for (std::size_t i = 0; i < out.coeff.size(); ++i) out.coeff[i] -= y.coeff[i];
  return out;
}

bool algebra_is_zero(const AlgebraElement& x, const Field& field) {
  if (field.is_rational()) {
    return std::all_of(x.coeff.begin(), x.coeff.end(), [](const Int& v) { return v == 0; });
  }
  const long p = static_cast<long>(field.characteristic());
  return std::all_of(x.coeff.begin(), x.coeff.end(),
                     [&](const Int& v) { return v % p == 0; });
}

bool algebra_equal(const AlgebraElement& x, const AlgebraElement& y, const Field& field) {
  return algebra_is_zero(algebra_sub(x, y), field);
}

IdempotentSystem idempotents(const Lrb& b, const SupportLattice& lat, const Field& field,
                             std::vector<int> representatives) {
  if (representatives.empty()) {
    representatives = lat.rep;
  } else {
    if (static_cast<int>(representatives.size()) != lat.count) {
      throw InvalidInput("BadElement", "one representative per lattice element required");
    }
    for (int X = 0; X < lat.count; ++X) {
      if (representatives[X] < 0 || representatives[X] >= b.size() ||
          lat.sigma[representatives[X]] != X) {
        throw InvalidInput("BadElement", "representative has the wrong support");
      }
    }
  }

  IdempotentSystem sys;
  sys.rep = representatives;
  sys.e.assign(static_cast<std::size_t>(lat.count), AlgebraElement::zero(b.size()));

  // process lattice elements bottom-up (any linear extension works; the
  // result is verified below)
  std::vector<int> order(lat.count);
  std::iota(order.begin(), order.end(), 0);
  std::sort(order.begin(), order.end(), [&](int x, int y) {
    const auto sx = lat.witness[x].size(), sy = lat.witness[y].size();
    return sx != sy ? sx < sy : x < y;
  });
  for (int X : order) {
    AlgebraElement rest = AlgebraElement::basis(b.size(), b.identity);
    for (int Y = 0; Y < lat.count; ++Y) {
      if (lat.less(Y, X)) rest = algebra_sub(rest, sys.e[Y]);
    }
    sys.e[X] = algebra_mul(b, AlgebraElement::basis(b.size(), representatives[X]), rest);
  }

  // verify the defining identities over the requested field
  AlgebraElement total = AlgebraElement::zero(b.size());
  for (int X = 0; X < lat.count; ++X) {
    total = algebra_add(total, sys.e[X]);
    if (!algebra_equal(algebra_mul(b, sys.e[X], sys.e[X]), sys.e[X], field)) {
      throw VerificationFailed("e_X^2 != e_X at lattice index " + std::to_string(X));
    }
    for (int Y = 0; Y < lat.count; ++Y) {
      if (Y != X &&
          !algebra_is_zero(algebra_mul(b, sys.e[X], sys.e[Y]), field)) {
        throw VerificationFailed("e_X e_Y != 0 at lattice indices " + std::to_string(X) +
                                 ", " + std::to_string(Y));
      }
    }
    for (int x = 0; x < b.size(); ++x) {
      if (!lat.leq(X, lat.sigma[x]) &&
          !algebra_is_zero(algebra_mul(b, AlgebraElement::basis(b.size(), x), sys.e[X]),
                           field)) {
        throw VerificationFailed("b e_X != 0 for " + b.label(x) + " outside B_{>=X}");
      }
    }
  }
  if (!algebra_equal(total, AlgebraElement::basis(b.size(), b.identity), field)) {
    throw VerificationFailed("sum of e_X is not 1");
  }
  return sys;
}

BasisCheckResult idempotent_basis_check(const Lrb& b, const SupportLattice& lat,
                                        const Field& field) {
  const IdempotentSystem sys = idempotents(b, lat, field);
  const int n = b.size();
  ExactMatrix change(n, n);
  for (int x = 0; x < n; ++x) {
    const AlgebraElement image =
        algebra_mul(b, AlgebraElement::basis(n, x), sys.e[lat.sigma[x]]);
    if (!algebra_equal(algebra_mul(b, image, image), image, field)) {
      return {false, "b e_sigma(b) is not idempotent at " + b.label(x)};
    }
    for (int y = 0; y < n; ++y) change.add(y, x, image.coeff[y]);
  }
  if (change.rank(field) != static_cast<std::size_t>(n)) {
    return {false, "change of basis is singular"};
  }
  return {true, ""};
}

SchutzenbergerReport schutzenberger_check(const Lrb& b, const SupportLattice& lat,
                                          const Field& field) {
  const IdempotentSystem sys = idempotents(b, lat, field);
  SchutzenbergerReport report;
  report.fiber_sizes.assign(static_cast<std::size_t>(lat.count), 0);
  for (int x = 0; x < b.size(); ++x) ++report.fiber_sizes[lat.sigma[x]];
  const long total = std::accumulate(report.fiber_sizes.begin(), report.fiber_sizes.end(), 0L);
  if (total != b.size()) {
    report.detail = "fiber sizes do not add up to |B|";
    return report;
  }

  // phi(c) = c e_X on the fiber L_X intertwines the contracted action with
  // left multiplication: phi(a . c) = a phi(c) for all a in B, c in L_X
  for (int X = 0; X < lat.count; ++X) {
    std::vector<int> fiber;
    for (int x = 0; x < b.size(); ++x) {
      if (lat.sigma[x] == X) fiber.push_back(x);
    }
    std::vector<AlgebraElement> phi;
    for (int c : fiber) {
      phi.push_back(algebra_mul(b, AlgebraElement::basis(b.size(), c), sys.e[X]));
    }
    for (int a = 0; a < b.size(); ++a) {
      const bool acts = lat.leq(X, lat.sigma[a]);
      for (std::size_t ci = 0; ci < fiber.size(); ++ci) {
        const AlgebraElement lhs =
            algebra_mul(b, AlgebraElement::basis(b.size(), a), phi[ci]);
        if (acts) {
          const int ac = b.mul(a, fiber[ci]);
          const auto pos = std::lower_bound(fiber.begin(), fiber.end(), ac);
          const AlgebraElement& rhs = phi[static_cast<std::size_t>(pos - fiber.begin())];
          if (!algebra_equal(lhs, rhs, field)) {
            report.detail = "action mismatch at (" + b.label(a) + ", " + b.label(fiber[ci]) + ")";
            return report;
          }
        } else if (!algebra_is_zero(lhs, field)) {
          report.detail = "killed action is nonzero at (" + b.label(a) + ", " +
                          b.label(fiber[ci]) + ")";
          return report;
        }
      }
    }
  }
  report.ok = true;
  return report;
}

// ---------------------------------------------------------------------------
// bar resolution

namespace {

// mixed-radix odometer over tuples in S^n
bool next_tuple(std::vector<int>& t, int radix) {
  for (std::size_t i = t.size(); i-- > 0;) {
    if (++t[i] < radix) return true;
    t[i] = 0;
  }
  return false;
}

}  // namespace

std::vector<long> bar_ext(const Lrb& b, const SupportLattice& lat, int X, int Y,
                          const Field& field, int max_degree, std::size_t budget) {
  if (max_degree < 0) max_degree = lambda_chain_length(lat);
  std::vector<long> dims(static_cast<std::size_t>(max_degree) + 1, 0);
  if (!lat.leq(X, Y)) return dims;  // coefficient module is killed: all zero

  // the non-identity elements of B_{>=X}
  std::vector<int> s;
  for (int x = 0; x < b.size(); ++x) {
    if (x != b.identity && lat.leq(X, lat.sigma[x])) s.push_back(x);
  }
  const int m = static_cast<int>(s.size());
  std::vector<int> pos_in_s(b.size(), -1);
  for (int i = 0; i < m; ++i) pos_in_s[s[i]] = i;

  // products of non-identity elements never hit the identity (the group of
  // units of a band is trivial); normalization therefore never degenerates
  std::vector<std::vector<int>> prod(m, std::vector<int>(m));
  for (int i = 0; i < m; ++i) {
    for (int j = 0; j < m; ++j) {
      const int p = b.mul(s[i], s[j]);
      if (p == b.identity) {
        throw VerificationFailed("product of non-identity elements is the identity");
      }
      prod[i][j] = pos_in_s[p];
    }
  }
  std::vector<char> covers_y(m, 0);
  for (int i = 0; i < m; ++i) covers_y[i] = lat.leq(Y, lat.sigma[s[i]]) ? 1 : 0;

  // sizes |T_n| = m^n, capped by the budget per coboundary
  std::vector<std::size_t> tuples(static_cast<std::size_t>(max_degree) + 2, 1);
  for (std::size_t n = 1; n < tuples.size(); ++n) {
    if (m == 0) {
      tuples[n] = 0;
      continue;
    }
    if (tuples[n - 1] > budget / static_cast<std::size_t>(m)) {
      tuples[n] = budget + 1;  // sentinel: too big
    } else {
      tuples[n] = tuples[n - 1] * static_cast<std::size_t>(m);
    }
  }
  for (int n = 0; n <= max_degree; ++n) {
    const std::size_t rows = tuples[static_cast<std::size_t>(n) + 1];
    const std::size_t cols = tuples[static_cast<std::size_t>(n)];
    if (rows > budget || cols > budget || (cols != 0 && rows > budget / std::max<std::size_t>(cols, 1))) {
      throw ResourceLimit("TooLarge", "coboundary in degree " + std::to_string(n) +
                                          " exceeds the entry budget");
    }
  }

  // coboundary of degree n maps functions on T_n to functions on T_{n+1}
  auto coboundary = [&](int n) {
    ExactMatrix delta(tuples[static_cast<std::size_t>(n) + 1],
                      tuples[static_cast<std::size_t>(n)]);
    if (m == 0) return delta;
    std::vector<int> t(static_cast<std::size_t>(n) + 1, 0);
    std::size_t row = 0;
    do {
      // t = [s_0 | ... | s_n]
      std::size_t col_tail = 0;  // index of [s_1|...|s_n]
      for (int i = 1; i <= n; ++i) col_tail = col_tail * m + static_cast<std::size_t>(t[i]);
      if (covers_y[t[0]]) delta.add(row, col_tail, 1);

      int sign = -1;
      for (int i = 1; i <= n; ++i) {
        // merge s_{i-1} s_i
        std::size_t col = 0;
        for (int k = 0; k <= n; ++k) {
          if (k == i - 1) {
            col = col * m + static_cast<std::size_t>(prod[t[i - 1]][t[i]]);
          } else if (k != i) {
            col = col * m + static_cast<std::size_t>(t[k]);
          }
        }
        delta.add(row, col, sign);
        sign = -sign;
      }

      std::size_t col_front = 0;  // index of [s_0|...|s_{n-1}]
      for (int i = 0; i < n; ++i) col_front = col_front * m + static_cast<std::size_t>(t[i]);
      delta.add(row, col_front, sign);
      ++row;
    } while (next_tuple(t, m));
    return delta;
  };

  std::size_t prev_rank = 0;
  for (int n = 0; n <= max_degree; ++n) {
    const ExactMatrix delta_n = coboundary(n);
    const std::size_t rank_n = delta_n.rank(field);
    const long kernel = static_cast<long>(tuples[static_cast<std::size_t>(n)]) -
                        static_cast<long>(rank_n);
    dims[static_cast<std::size_t>(n)] = kernel - static_cast<long>(prev_rank);
    prev_rank = rank_n;
  }
  return dims;
}

OracleReport oracle_crosscheck(const Lrb& b, const Field& field, int max_degree,
                               std::size_t budget) {
  const SupportLattice lat = support_lattice(b);
  if (max_degree < 0) max_degree = lambda_chain_length(lat);

  HomologyContext ctx(b);

  OracleReport report;
  report.field = field;
  report.max_degree = max_degree;
  report.budget = budget;

  // pairs ordered by the size of B_{>=X}
  std::vector<long> upset_size(lat.count, 0);
  for (int x = 0; x < b.size(); ++x) {
    for (int X = 0; X < lat.count; ++X) {
      if (lat.leq(X, lat.sigma[x])) ++upset_size[X];
    }
  }
  std::vector<int> xs(lat.count);
  std::iota(xs.begin(), xs.end(), 0);
  std::sort(xs.begin(), xs.end(),
            [&](int a, int c) { return upset_size[a] != upset_size[c] ? upset_size[a] < upset_size[c] : a < c; });

  for (int X : xs) {
    for (int Y = 0; Y < lat.count; ++Y) {
      OracleCell cell;
      cell.X = X;
      cell.Y = Y;
      cell.requested_degree = max_degree;

      // largest degree whose coboundary fits the budget
      const long m = lat.leq(X, Y) ? upset_size[X] - 1 : 0;
      int degree = max_degree;
      if (m > 1) {
        double entries = static_cast<double>(m);  // |T_1| x |T_0|
        degree = 0;
        while (degree < max_degree) {
          entries *= static_cast<double>(m) * static_cast<double>(m);
          if (entries > static_cast<double>(budget)) break;
          ++degree;
        }
      }
      cell.checked_degree = degree;
      cell.truncated = degree < max_degree;

      cell.bar = bar_ext(b, lat, X, Y, field, degree, budget);
      cell.simplicial = ctx.ext_dims(X, Y, field, degree);
      cell.agree = cell.bar == cell.simplicial;
      if (!cell.agree) ++report.mismatches;
      if (cell.truncated) ++report.truncated;
      report.cells.push_back(std::move(cell));
    }
  }
  return report;
}

bool quiver_embedding_independent(const Quiver& q, const Field& field) {
  const std::vector<int> order = q.checked_order();
  const int n = static_cast<int>(q.vertices.size());
  std::vector<int> pos(n);
  for (int i = 0; i < n; ++i) pos[order[i]] = i;

  // enumerate paths exactly as quiver_lrb does
  struct Path {
    int start;
    std::vector<int> arrows;
    int end;
  };
  std::vector<Path> paths;
  std::map<std::pair<int, std::vector<int>>, int> index;
  for (int i = 0; i < n; ++i) {
    index[{order[i], {}}] = static_cast<int>(paths.size());
    paths.push_back({order[i], {}, order[i]});
  }
  for (std::size_t p = 0; p < paths.size(); ++p) {
    for (std::size_t a = 0; a < q.arrows.size(); ++a) {
      if (q.arrows[a].source != paths[p].end) continue;
      Path next = paths[p];
      next.arrows.push_back(static_cast<int>(a));
      next.end = q.arrows[a].target;
      index[{next.start, next.arrows}] = static_cast<int>(paths.size());
      paths.push_back(std::move(next));
    }
  }

  // image of a path: sum of stationary paths at vertices >= its target plus
  // all of its suffixes
  const std::size_t count = paths.size();
  ExactMatrix images(count, count);
  for (std::size_t j = 0; j < count; ++j) {
    const Path& path = paths[j];
    for (int v = 0; v < n; ++v) {
      if (pos[v] >= pos[path.end]) {
        images.add(static_cast<std::size_t>(index.at({v, {}})), j, 1);
      }
    }
    for (std::size_t i = 0; i < path.arrows.size(); ++i) {
      std::vector<int> suffix(path.arrows.begin() + static_cast<long>(i), path.arrows.end());
      const int start = q.arrows[suffix[0]].source;
      images.add(static_cast<std::size_t>(index.at({start, suffix})), j, 1);
    }
  }
  return images.rank(field) == count;
}

}  // namespace lrb
