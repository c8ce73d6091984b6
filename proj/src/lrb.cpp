#include "lrb/lrb.hpp"

#include <algorithm>
#include <cstdint>
#include <map>
#include <numeric>

namespace lrb {

namespace {

std::string witness3(const Lrb& b, int x, int y, int z) {
  return "(" + b.label(x) + ", " + b.label(y) + ", " + b.label(z) + ")";
}

}  // namespace

Lrb validate_lrb(std::vector<std::vector<int>> table, int identity,
                 std::vector<std::string> names) {
  const int n = static_cast<int>(table.size());
  if (n == 0) throw InvalidInput("BadIdentity", "empty multiplication table");
  for (const auto& row : table) {
    if (static_cast<int>(row.size()) != n) {
      throw InvalidInput("BadIdentity", "multiplication table is not square");
    }
    for (int v : row) {
      if (v < 0 || v >= n) {
        throw InvalidInput("BadIdentity", "table entry out of range");
      }
    }
  }
  if (identity < 0 || identity >= n) {
    throw InvalidInput("BadIdentity", "identity index out of range");
  }
  if (!names.empty() && static_cast<int>(names.size()) != n) {
    throw InvalidInput("BadIdentity", "name count does not match table size");
  }

  Lrb b;
  b.identity = identity;
  b.table = std::move(table);
  b.names = std::move(names);
  check_lrb(b);
  return b;
}

void check_lrb(const Lrb& b) {
  const int n = b.size();
  const int e = b.identity;
  for (int x = 0; x < n; ++x) {
    if (b.mul(e, x) != x || b.mul(x, e) != x) {
      throw InvalidInput("BadIdentity", b.label(e) + " is not an identity at " + b.label(x));
    }
  }
  for (int x = 0; x < n; ++x) {
    if (b.mul(x, x) != x) {
      throw InvalidInput("NotIdempotent", b.label(x) + "^2 != " + b.label(x));
    }
  }
  for (int x = 0; x < n; ++x) {
    for (int y = 0; y < n; ++y) {
      const int xy = b.mul(x, y);
      if (b.mul(xy, x) != xy) {
        throw InvalidInput("NotLeftRegular", witness3(b, x, y, x) + " violates xyx = xy");
      }
    }
  }
  for (int x = 0; x < n; ++x) {
    for (int y = 0; y < n; ++y) {
      const int xy = b.mul(x, y);
      for (int z = 0; z < n; ++z) {
        if (b.mul(xy, z) != b.mul(x, b.mul(y, z))) {
          throw InvalidInput("NotAssociative", witness3(b, x, y, z) + " violates (xy)z = x(yz)");
        }
      }
    }
  }
}

std::vector<int> FinitePoset::upper_covers(int x) const {
  std::vector<int> out;
  for (const auto& [lo, hi] : hasse) {
    if (lo == x) out.push_back(hi);
  }
  return out;
}

std::vector<int> FinitePoset::lower_covers(int x) const {
  std::vector<int> out;
  for (const auto& [lo, hi] : hasse) {
    if (hi == x) out.push_back(lo);
  }
  return out;
}

std::vector<int> FinitePoset::maximal_elements() const {
  std::vector<int> out;
  for (int x = 0; x < count; ++x) {
    bool maximal = true;
    for (int y = 0; y < count && maximal; ++y) {
      if (x != y && leq[x][y]) maximal = false;
    }
    if (maximal) out.push_back(x);
  }
  return out;
}

FinitePoset make_poset(std::vector<std::vector<bool>> leq) {
  const int n = static_cast<int>(leq.size());
  for (int x = 0; x < n; ++x) {
    if (!leq[x][x]) throw InvalidInput("BadPoset", "order is not reflexive");
    for (int y = 0; y < n; ++y) {
      if (x != y && leq[x][y] && leq[y][x]) {
        throw InvalidInput("BadPoset", "order is not antisymmetric");
      }
      if (!leq[x][y]) continue;
      for (int z = 0; z < n; ++z) {
        if (leq[y][z] && !leq[x][z]) {
          throw InvalidInput("BadPoset", "order is not transitive");
        }
      }
    }
  }

  FinitePoset p;
  p.count = n;
  p.leq = std::move(leq);
  for (int x = 0; x < n; ++x) {
    for (int y = 0; y < n; ++y) {
      if (x == y || !p.leq[x][y]) continue;
      bool cover = true;
      for (int z = 0; z < n && cover; ++z) {
        if (z != x && z != y && p.leq[x][z] && p.leq[z][y]) cover = false;
      }
      if (cover) p.hasse.emplace_back(x, y);
    }
  }
  return p;
}

FinitePoset r_order(const Lrb& b) {
  const int n = b.size();
  std::vector<std::vector<bool>> leq(n, std::vector<bool>(n, false));
  for (int x = 0; x < n; ++x) {
    for (int y = 0; y < n; ++y) {
      leq[x][y] = (b.mul(y, x) == x);
    }
  }
  return make_poset(std::move(leq));
}

FinitePoset SupportLattice::poset() const {
  return make_poset(leq_);
}

SupportLattice support_lattice(const Lrb& b) {
  const int n = b.size();

  // principal left ideals Ba as sorted element lists
  std::map<std::vector<int>, int> ideal_index;
  std::vector<std::vector<int>> ideals;
  std::vector<int> sigma_raw(n);
  for (int a = 0; a < n; ++a) {
    std::vector<char> in(n, 0);
    for (int x = 0; x < n; ++x) in[b.mul(x, a)] = 1;
    std::vector<int> ideal;
    for (int x = 0; x < n; ++x) {
      if (in[x]) ideal.push_back(x);
    }
    auto [it, inserted] = ideal_index.try_emplace(ideal, static_cast<int>(ideals.size()));
    if (inserted) ideals.push_back(std::move(ideal));
    sigma_raw[a] = it->second;
  }

  // deterministic index order: big ideals first, ties lexicographic
  const int m = static_cast<int>(ideals.size());
  std::vector<int> order(m);
  std::iota(order.begin(), order.end(), 0);
  std::sort(order.begin(), order.end(), [&](int i, int j) {
    if (ideals[i].size() != ideals[j].size()) return ideals[i].size() > ideals[j].size();
    return ideals[i] < ideals[j];
  });
  std::vector<int> rank_of(m);
  for (int i = 0; i < m; ++i) rank_of[order[i]] = i;

  SupportLattice lat;
  lat.count = m;
  lat.witness.resize(m);
  for (int i = 0; i < m; ++i) lat.witness[rank_of[i]] = ideals[i];
  lat.sigma.resize(n);
  for (int a = 0; a < n; ++a) lat.sigma[a] = rank_of[sigma_raw[a]];
  lat.rep.assign(m, -1);
  for (int a = 0; a < n; ++a) {
    int& r = lat.rep[lat.sigma[a]];
    if (r < 0) r = a;
  }

  lat.leq_.assign(m, std::vector<bool>(m, false));
  for (int x = 0; x < m; ++x) {
    for (int y = 0; y < m; ++y) {
      lat.leq_[x][y] = std::includes(lat.witness[y].begin(), lat.witness[y].end(),
                                     lat.witness[x].begin(), lat.witness[x].end());
    }
  }

  lat.meet.assign(m, std::vector<int>(m, 0));
  for (int x = 0; x < m; ++x) {
    for (int y = 0; y < m; ++y) {
      lat.meet[x][y] = lat.sigma[b.mul(lat.rep[x], lat.rep[y])];
    }
  }

  lat.top = lat.sigma[b.identity];
  int bot = 0;
  for (int x = 1; x < m; ++x) {
    if (lat.witness[x].size() < lat.witness[bot].size()) bot = x;
  }
  lat.bottom = bot;

  // sigma is the universal lattice morphism; check it on the whole table
  for (int x = 0; x < n; ++x) {
    for (int y = 0; y < n; ++y) {
      if (lat.sigma[b.mul(x, y)] != lat.meet[lat.sigma[x]][lat.sigma[y]]) {
        throw VerificationFailed("sigma(xy) != sigma(x) ^ sigma(y) at (" +
                                 b.label(x) + ", " + b.label(y) + ")");
      }
      const bool absorbs = (b.mul(x, y) == x);
      const bool dominates = lat.leq_[lat.sigma[x]][lat.sigma[y]];
      if (absorbs != dominates) {
        throw VerificationFailed("xy = x fails to match sigma(y) >= sigma(x) at (" +
                                 b.label(x) + ", " + b.label(y) + ")");
      }
    }
  }
  return lat;
}

int lambda_chain_length(const SupportLattice& lat) {
  // longest path in the comparability DAG, by height recursion
  std::vector<int> height(lat.count, -1);
  int best = 0;
  auto rec = [&](auto&& self, int x) -> int {
    if (height[x] >= 0) return height[x];
    int h = 0;
    for (int y = 0; y < lat.count; ++y) {
      if (lat.less(y, x)) h = std::max(h, self(self, y) + 1);
    }
    return height[x] = h;
  };
  for (int x = 0; x < lat.count; ++x) best = std::max(best, rec(rec, x));
  return best;
}

namespace {

SubmonoidMap submonoid_from_elements(const Lrb& b, std::vector<int> elements,
                                     int local_identity) {
  std::sort(elements.begin(), elements.end());
  elements.erase(std::unique(elements.begin(), elements.end()), elements.end());
  const int k = static_cast<int>(elements.size());
  std::vector<int> position(b.size(), -1);
  for (int i = 0; i < k; ++i) position[elements[i]] = i;

  SubmonoidMap sm;
  sm.embed = elements;
  sm.sub.identity = position[local_identity];
  sm.sub.table.assign(k, std::vector<int>(k, 0));
  for (int i = 0; i < k; ++i) {
    for (int j = 0; j < k; ++j) {
      const int p = b.mul(elements[i], elements[j]);
      if (position[p] < 0) {
        throw VerificationFailed("element set is not closed under the product");
      }
      sm.sub.table[i][j] = position[p];
    }
  }
  if (!b.names.empty()) {
    for (int i = 0; i < k; ++i) sm.sub.names.push_back(b.label(elements[i]));
  }
  return sm;
}

}  // namespace

SubmonoidMap interval_submonoid(const Lrb& b, const SupportLattice& lat, int X, int Y) {
  if (X < 0 || Y < 0 || X >= lat.count || Y >= lat.count || !lat.leq(X, Y)) {
    throw InvalidInput("NotComparable", "interval requires X <= Y in the support lattice");
  }
  const int a = lat.rep[Y];
  std::vector<int> elements;
  for (int x = 0; x < b.size(); ++x) {
    const int ax = b.mul(a, x);
    if (lat.leq(X, lat.sigma[ax])) elements.push_back(ax);
  }
  return submonoid_from_elements(b, std::move(elements), a);
}

SubmonoidMap submonoid_generated(const Lrb& b, const std::vector<int>& gens) {
  std::vector<char> in(b.size(), 0);
  std::vector<int> frontier{b.identity};
  in[b.identity] = 1;
  for (int g : gens) {
    if (g < 0 || g >= b.size()) throw InvalidInput("BadElement", "generator index out of range");
    if (!in[g]) {
      in[g] = 1;
      frontier.push_back(g);
    }
  }
  std::vector<int> members = frontier;
  while (!frontier.empty()) {
    std::vector<int> next;
    for (int x : frontier) {
      for (int y : members) {
        for (int p : {b.mul(x, y), b.mul(y, x)}) {
          if (!in[p]) {
            in[p] = 1;
            next.push_back(p);
          }
        }
      }
    }
    for (int x : next) members.push_back(x);
    // products among newly added elements are covered in later rounds
    frontier = std::move(next);
  }
  return submonoid_from_elements(b, std::move(members), b.identity);
}

GeometricCheck is_geometric(const Lrb& b) {
  const int n = b.size();
  for (int a = 0; a < n; ++a) {
    std::vector<int> up;
    for (int x = 0; x < n; ++x) {
      if (b.mul(x, a) == a) up.push_back(x);
    }
    for (std::size_t i = 0; i < up.size(); ++i) {
      for (std::size_t j = i + 1; j < up.size(); ++j) {
        if (b.mul(up[i], up[j]) != b.mul(up[j], up[i])) {
          return {false, std::array<int, 3>{a, up[i], up[j]}};
        }
      }
    }
  }
  return {true, std::nullopt};
}

bool is_right_hereditary(const Lrb& b) {
  const FinitePoset order = r_order(b);
  std::vector<int> parents(b.size(), 0);
  for (const auto& [lo, hi] : order.hasse) ++parents[lo];
  for (int x = 0; x < b.size(); ++x) {
    if (x != b.identity && parents[x] != 1) return false;
  }
  return true;
}

Graph commutation_graph(const Lrb& b) {
  if (b.size() == 1) {
    throw InvalidInput("TrivialMonoid", "the trivial monoid has no maximal elements below 1");
  }
  const FinitePoset order = r_order(b);
  std::vector<int> maximal;
  for (int x = 0; x < b.size(); ++x) {
    if (x == b.identity) continue;
    bool is_max = true;
    for (int y = 0; y < b.size() && is_max; ++y) {
      if (y != b.identity && y != x && order.leq[x][y]) is_max = false;
    }
    if (is_max) maximal.push_back(x);
  }
  std::vector<std::string> labels;
  for (int x : maximal) labels.push_back(b.label(x));
  Graph g(static_cast<int>(maximal.size()), std::move(labels));
  for (std::size_t i = 0; i < maximal.size(); ++i) {
    for (std::size_t j = i + 1; j < maximal.size(); ++j) {
      if (b.mul(maximal[i], maximal[j]) == b.mul(maximal[j], maximal[i])) {
        g.add_edge(static_cast<int>(i), static_cast<int>(j));
      }
    }
  }
  return g;
}

Lrb canonicalize(const Lrb& b) {
  const int n = b.size();
  const FinitePoset order = r_order(b);

  // rank = longest chain from the element up to the identity
  std::vector<int> rank(n, -1);
  auto depth = [&](auto&& self, int x) -> int {
    if (rank[x] >= 0) return rank[x];
    int d = 0;
    for (int y = 0; y < n; ++y) {
      if (y != x && order.leq[x][y]) d = std::max(d, self(self, y) + 1);
    }
    return rank[x] = d;
  };
  for (int x = 0; x < n; ++x) depth(depth, x);

  std::vector<int> perm(n);
  std::iota(perm.begin(), perm.end(), 0);
  std::sort(perm.begin(), perm.end(), [&](int x, int y) {
    if (rank[x] != rank[y]) return rank[x] < rank[y];
    const std::string lx = b.label(x), ly = b.label(y);
    if (lx != ly) return lx < ly;
    return x < y;
  });

  std::vector<int> position(n);
  for (int i = 0; i < n; ++i) position[perm[i]] = i;

  Lrb out;
  out.identity = position[b.identity];
  out.table.assign(n, std::vector<int>(n, 0));
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < n; ++j) {
      out.table[i][j] = position[b.mul(perm[i], perm[j])];
    }
  }
  out.names.reserve(n);
  for (int i = 0; i < n; ++i) out.names.push_back(b.label(perm[i]));
  return out;
}

bool equal_as_labeled(const Lrb& a, const Lrb& b) {
  if (a.size() != b.size()) return false;
  std::map<std::string, int> where;
  for (int i = 0; i < b.size(); ++i) {
    if (!where.try_emplace(b.label(i), i).second) return false;
  }
  std::vector<int> to_b(a.size());
  for (int i = 0; i < a.size(); ++i) {
    auto it = where.find(a.label(i));
    if (it == where.end()) return false;
    to_b[i] = it->second;
  }
  if (to_b[a.identity] != b.identity) return false;
  for (int i = 0; i < a.size(); ++i) {
    for (int j = 0; j < a.size(); ++j) {
      if (to_b[a.mul(i, j)] != b.mul(to_b[i], to_b[j])) return false;
    }
  }
  return true;
}

namespace {

std::vector<std::array<int, 4>> iso_signatures(const Lrb& m) {
  const int n = m.size();
  std::vector<std::array<int, 4>> sig(n);
  for (int x = 0; x < n; ++x) {
    int below = 0, above = 0, left_fix = 0, right_fix = 0;
    for (int y = 0; y < n; ++y) {
      if (m.mul(x, y) == y) ++below;   // y with xy = y
      if (m.mul(y, x) == x) ++above;   // y above x in the R-order
      if (m.mul(x, y) == x) ++left_fix;
      if (m.mul(y, x) == y) ++right_fix;
    }
    sig[x] = {below, above, left_fix, right_fix};
  }
  return sig;
}

bool extend_isomorphism(const Lrb& a, const Lrb& b,
                        const std::vector<std::array<int, 4>>& sig_a,
                        const std::vector<std::array<int, 4>>& sig_b,
                        std::vector<int>& map, std::vector<char>& used, int next) {
  const int n = a.size();
  while (next < n && map[next] >= 0) ++next;
  if (next == n) return true;
  for (int candidate = 0; candidate < n; ++candidate) {
    if (used[candidate] || sig_a[next] != sig_b[candidate]) continue;
    map[next] = candidate;
    used[candidate] = 1;
    bool ok = true;
    for (int x = 0; x < n && ok; ++x) {
      if (map[x] < 0) continue;
      const int p1 = a.mul(next, x), p2 = a.mul(x, next);
      if (map[p1] >= 0 && map[p1] != b.mul(candidate, map[x])) ok = false;
      if (ok && map[p2] >= 0 && map[p2] != b.mul(map[x], candidate)) ok = false;
    }
    if (ok && extend_isomorphism(a, b, sig_a, sig_b, map, used, next + 1)) return true;
    map[next] = -1;
    used[candidate] = 0;
  }
  return false;
}

}  // namespace

bool is_isomorphic(const Lrb& a, const Lrb& b) {
  if (a.size() != b.size()) return false;
  const auto sig_a = iso_signatures(a);
  const auto sig_b = iso_signatures(b);
  std::vector<int> map(a.size(), -1);
  std::vector<char> used(a.size(), 0);
  map[a.identity] = b.identity;
  used[b.identity] = 1;
  if (sig_a[a.identity] != sig_b[b.identity]) return false;
  return extend_isomorphism(a, b, sig_a, sig_b, map, used, 0);
}

}  // namespace lrb
