#include "lrb/constructions.hpp"

#include <algorithm>
#include <cstdint>
#include <map>
#include <numeric>
#include <queue>
#include <set>

namespace lrb {

// ---------------------------------------------------------------------------
// FiniteLattice

std::string FiniteLattice::label(int x) const {
  if (x < static_cast<int>(names.size()) && !names[x].empty()) return names[x];
  return "x" + std::to_string(x);
}

void FiniteLattice::check() const {
  if (count <= 0) throw InvalidInput("BadLattice", "lattice must be nonempty");
  if (static_cast<int>(leq.size()) != count ||
      static_cast<int>(meet.size()) != count) {
    throw InvalidInput("BadLattice", "relation sizes do not match count");
  }
  try {
    make_poset(leq);
  } catch (const InvalidInput& e) {
    throw InvalidInput("BadLattice", e.what());
  }
  for (int x = 0; x < count; ++x) {
    if (!leq[x][top]) throw InvalidInput("BadLattice", "top is not the maximum");
    for (int y = 0; y < count; ++y) {
      const int m = meet[x][y];
      if (m < 0 || m >= count || !leq[m][x] || !leq[m][y]) {
        throw InvalidInput("BadLattice", "meet entry is not a lower bound");
      }
      for (int z = 0; z < count; ++z) {
        if (leq[z][x] && leq[z][y] && !leq[z][m]) {
          throw InvalidInput("BadLattice", "meet entry is not the greatest lower bound");
        }
      }
    }
  }
}

FiniteLattice FiniteLattice::chain(int k) {
  if (k <= 0) throw InvalidInput("BadLattice", "chain needs at least one element");
  FiniteLattice l;
  l.count = k;
  l.top = 0;
  l.leq.assign(k, std::vector<bool>(k, false));
  l.meet.assign(k, std::vector<int>(k, 0));
  for (int x = 0; x < k; ++x) {
    l.names.push_back("c" + std::to_string(x));
    for (int y = 0; y < k; ++y) {
      l.leq[x][y] = (x >= y);
      l.meet[x][y] = std::max(x, y);
    }
  }
  return l;
}

FiniteLattice FiniteLattice::power_set(const std::vector<std::string>& names) {
  const int n = static_cast<int>(names.size());
  if (n > 10) throw ResourceLimit("TooLarge", "power-set lattice limited to 10 atoms");
  const int count = 1 << n;
  FiniteLattice l;
  l.count = count;
  l.top = 0;  // empty set; order is reverse inclusion
  l.leq.assign(count, std::vector<bool>(count, false));
  l.meet.assign(count, std::vector<int>(count, 0));
  for (int x = 0; x < count; ++x) {
    std::string name = "{";
    for (int i = 0; i < n; ++i) {
      if ((x >> i) & 1) {
        if (name.size() > 1) name += ",";
        name += names[i];
      }
    }
    name += "}";
    l.names.push_back(name);
    for (int y = 0; y < count; ++y) {
      l.leq[x][y] = ((x & y) == y);  // x <= y iff y is a subset of x
      l.meet[x][y] = x | y;
    }
  }
  return l;
}

FiniteLattice FiniteLattice::glued_boolean(int n) {
  if (n < 2 || n > 10) throw InvalidInput("BadLattice", "glued_boolean expects 2 <= n <= 10");
  std::vector<int> masks;
  for (int m = 0; m < (1 << n); ++m) {
    if (__builtin_popcount(m) <= n - 2) masks.push_back(m);
  }
  const int count = static_cast<int>(masks.size()) + 1;
  const int bottom = count - 1;
  std::map<int, int> index;
  for (int i = 0; i < static_cast<int>(masks.size()); ++i) index[masks[i]] = i;

  FiniteLattice l;
  l.count = count;
  l.top = 0;
  l.leq.assign(count, std::vector<bool>(count, false));
  l.meet.assign(count, std::vector<int>(count, bottom));
  for (int i = 0; i < static_cast<int>(masks.size()); ++i) {
    std::string name = "{";
    for (int b = 0; b < n; ++b) {
      if ((masks[i] >> b) & 1) {
        if (name.size() > 1) name += ",";
        name += std::to_string(b + 1);
      }
    }
    l.names.push_back(name + "}");
  }
  l.names.push_back("bot");
  for (int i = 0; i < count; ++i) l.leq[bottom][i] = true;
  l.leq[bottom][bottom] = true;
  for (std::size_t i = 0; i < masks.size(); ++i) {
    for (std::size_t j = 0; j < masks.size(); ++j) {
      l.leq[i][j] = ((masks[i] & masks[j]) == masks[j]);
      const int u = masks[i] | masks[j];
      auto it = index.find(u);
      l.meet[i][j] = (it == index.end()) ? bottom : it->second;
    }
  }
  for (int i = 0; i < count; ++i) {
    l.meet[bottom][i] = bottom;
    l.meet[i][bottom] = bottom;
  }
  return l;
}

// ---------------------------------------------------------------------------
// Quiver

std::vector<int> Quiver::checked_order() const {
  const int n = static_cast<int>(vertices.size());
  for (const auto& a : arrows) {
    if (a.source < 0 || a.source >= n || a.target < 0 || a.target >= n) {
      throw InvalidInput("BadQuiver", "arrow endpoint out of range");
    }
  }
  if (!order.empty()) {
    if (static_cast<int>(order.size()) != n) {
      throw InvalidInput("BadOrder", "order must list every vertex once");
    }
    std::vector<int> pos(n, -1);
    for (int i = 0; i < n; ++i) {
      if (order[i] < 0 || order[i] >= n || pos[order[i]] >= 0) {
        throw InvalidInput("BadOrder", "order must list every vertex once");
      }
      pos[order[i]] = i;
    }
    for (const auto& a : arrows) {
      if (pos[a.source] >= pos[a.target]) {
        throw InvalidInput("BadOrder", "arrow " + vertices[a.source] + "->" +
                                           vertices[a.target] +
                                           " violates the vertex order");
      }
    }
    return order;
  }
  // Kahn topological sort, smallest index first
  std::vector<int> indeg(n, 0);
  for (const auto& a : arrows) ++indeg[a.target];
  std::set<int> ready;
  for (int v = 0; v < n; ++v) {
    if (indeg[v] == 0) ready.insert(v);
  }
  std::vector<int> out;
  while (!ready.empty()) {
    const int v = *ready.begin();
    ready.erase(ready.begin());
    out.push_back(v);
    for (const auto& a : arrows) {
      if (a.source == v && --indeg[a.target] == 0) ready.insert(a.target);
    }
  }
  if (static_cast<int>(out.size()) != n) {
    throw InvalidInput("NotAcyclic", "quiver has a directed cycle");
  }
  return out;
}

// ---------------------------------------------------------------------------
// free left regular band

Lrb free_lrb(const std::vector<std::string>& alphabet, std::size_t max_elements) {
  const int n = static_cast<int>(alphabet.size());
  if (n == 0) throw InvalidInput("BadAlphabet", "alphabet must be nonempty");
  {
    std::set<std::string> distinct(alphabet.begin(), alphabet.end());
    if (static_cast<int>(distinct.size()) != n) {
      throw InvalidInput("BadAlphabet", "alphabet letters must be distinct");
    }
  }
  std::size_t total = 1, layer = 1;
  for (int k = 1; k <= n; ++k) {
    layer *= static_cast<std::size_t>(n - k + 1);
    total += layer;
    if (total > max_elements) {
      throw ResourceLimit("AlphabetTooLarge",
                          "free band on " + std::to_string(n) + " letters exceeds " +
                              std::to_string(max_elements) + " elements");
    }
  }

  // injective words listed by length, then lexicographically by letter index
  std::vector<std::vector<int>> words{{}};
  std::map<std::vector<int>, int> index{{{}, 0}};
  std::size_t begin = 0;
  for (int len = 1; len <= n; ++len) {
    const std::size_t end = words.size();
    for (std::size_t w = begin; w < end; ++w) {
      for (int a = 0; a < n; ++a) {
        if (std::find(words[w].begin(), words[w].end(), a) != words[w].end()) continue;
        std::vector<int> next = words[w];
        next.push_back(a);
        index[next] = static_cast<int>(words.size());
        words.push_back(std::move(next));
      }
    }
    begin = end;
  }

  const int size = static_cast<int>(words.size());
  Lrb b;
  b.identity = 0;
  b.table.assign(size, std::vector<int>(size, 0));
  for (int i = 0; i < size; ++i) {
    for (int j = 0; j < size; ++j) {
      std::vector<int> w = words[i];
      for (int a : words[j]) {
        if (std::find(w.begin(), w.end(), a) == w.end()) w.push_back(a);
      }
      b.table[i][j] = index.at(w);
    }
  }
  for (int i = 0; i < size; ++i) {
    if (words[i].empty()) {
      b.names.push_back("1");
      continue;
    }
    std::string name;
    for (int a : words[i]) name += alphabet[a];
    b.names.push_back(name);
  }
  return b;
}

// ---------------------------------------------------------------------------
// free partially commutative left regular band

namespace {

// All acyclic orientations of g, each as an edge-direction bitmask over the
// given edge list (bit set = directed low->high endpoint).
void enumerate_acyclic_orientations(const Graph& g,
                                    const std::vector<std::pair<int, int>>& edge_list,
                                    std::size_t e, std::uint64_t chosen,
                                    std::vector<std::uint64_t>& reach,
                                    std::vector<std::uint64_t>& out) {
  if (e == edge_list.size()) {
    out.push_back(chosen);
    return;
  }
  const auto [u, v] = edge_list[e];
  for (int dir = 1; dir >= 0; --dir) {
    const int from = dir ? u : v;
    const int to = dir ? v : u;
    if ((reach[to] >> from) & 1ULL) continue;  // would close a cycle
    std::vector<std::uint64_t> saved = reach;
    // from now reaches everything `to` reaches
    const std::uint64_t gained = reach[to] | (1ULL << to);
    for (int w = 0; w < g.n; ++w) {
      if ((reach[w] >> from) & 1ULL || w == from) reach[w] |= gained;
    }
    enumerate_acyclic_orientations(g, edge_list, e + 1,
                                   dir ? (chosen | (1ULL << e)) : chosen, reach, out);
    reach = saved;
  }
}

std::vector<std::uint64_t> acyclic_orientations(const Graph& g) {
  const auto edge_list = g.edges();
  if (edge_list.size() > 63) {
    throw ResourceLimit("TooLarge", "too many edges for orientation enumeration");
  }
  std::vector<std::uint64_t> reach(g.n, 0), out;
  enumerate_acyclic_orientations(g, edge_list, 0, 0, reach, out);
  std::sort(out.begin(), out.end());
  return out;
}

}  // namespace

std::size_t count_acyclic_orientations(const Graph& g) {
  if (g.n == 0) return 1;
  return acyclic_orientations(g).size();
}

Lrb free_partially_commutative(const Graph& g, std::size_t max_elements) {
  const int n = g.n;
  if (n == 0) throw InvalidInput("BadGraph", "graph must have at least one vertex");
  if (n > 20) throw ResourceLimit("TooLarge", "free partially commutative bands limited to 20 vertices");
  const Graph comp = g.complement();
  const auto comp_edges = comp.edges();  // global edge order
  std::map<std::pair<int, int>, int> edge_pos;
  for (std::size_t i = 0; i < comp_edges.size(); ++i) edge_pos[comp_edges[i]] = static_cast<int>(i);

  struct Element {
    std::uint64_t support;
    std::uint64_t orient;  // bits over comp_edges, only edges inside support
  };
  std::vector<Element> elements;
  std::map<std::pair<std::uint64_t, std::uint64_t>, int> index;

  // supports by size, then mask value; orientations in enumeration order
  std::vector<std::uint64_t> supports;
  for (std::uint64_t w = 0; w < (1ULL << n); ++w) supports.push_back(w);
  std::sort(supports.begin(), supports.end(), [](std::uint64_t a, std::uint64_t b) {
    const int pa = __builtin_popcountll(a), pb = __builtin_popcountll(b);
    return pa != pb ? pa < pb : a < b;
  });

  for (std::uint64_t w : supports) {
    const Graph h = comp.induced(w);
    std::vector<int> verts;
    for (int v = 0; v < n; ++v) {
      if ((w >> v) & 1ULL) verts.push_back(v);
    }
    const auto h_edges = h.edges();
    for (std::uint64_t local : acyclic_orientations(h)) {
      std::uint64_t orient = 0;
      for (std::size_t e = 0; e < h_edges.size(); ++e) {
        const int u = verts[h_edges[e].first];
        const int v = verts[h_edges[e].second];
        if ((local >> e) & 1ULL) orient |= 1ULL << edge_pos.at({u, v});
      }
      index[{w, orient}] = static_cast<int>(elements.size());
      elements.push_back({w, orient});
      if (elements.size() > max_elements) {
        throw ResourceLimit("TooLarge", "element count exceeds " + std::to_string(max_elements));
      }
    }
  }

  // direction of comp edge (u,v) inside an element; true = u->v
  auto directed_forward = [&](const Element& x, int u, int v) {
    const auto [lo, hi] = std::minmax(u, v);
    const bool bit = (x.orient >> edge_pos.at({lo, hi})) & 1ULL;
    return (u == lo) ? bit : !bit;
  };

  const int size = static_cast<int>(elements.size());
  Lrb b;
  b.identity = 0;
  b.table.assign(size, std::vector<int>(size, 0));
  for (int i = 0; i < size; ++i) {
    for (int j = 0; j < size; ++j) {
      const Element& x = elements[i];
      const Element& y = elements[j];
      const std::uint64_t support = x.support | y.support;
      std::uint64_t orient = 0;
      for (const auto& [u, v] : comp_edges) {
        if (!((support >> u) & 1ULL) || !((support >> v) & 1ULL)) continue;
        const bool xu = (x.support >> u) & 1ULL;
        const bool xv = (x.support >> v) & 1ULL;
        bool forward;  // u -> v?
        if (xu && xv) {
          forward = directed_forward(x, u, v);
        } else if (xu) {
          forward = true;
        } else if (xv) {
          forward = false;
        } else {
          forward = directed_forward(y, u, v);
        }
        if (forward) orient |= 1ULL << edge_pos.at({u, v});
      }
      b.table[i][j] = index.at({support, orient});
    }
  }

  // name = least topological word of the oriented complement graph
  for (const Element& x : elements) {
    if (x.support == 0) {
      b.names.push_back("1");
      continue;
    }
    std::string name;
    std::uint64_t remaining = x.support;
    while (remaining) {
      for (int v = 0; v < n; ++v) {
        if (!((remaining >> v) & 1ULL)) continue;
        bool source = true;
        for (int u = 0; u < n && source; ++u) {
          if (u != v && ((remaining >> u) & 1ULL) && comp.has_edge(u, v) &&
              directed_forward(x, u, v)) {
            source = false;  // u -> v still pending
          }
        }
        if (source) {
          name += g.label(v);
          remaining &= ~(1ULL << v);
          break;
        }
      }
    }
    b.names.push_back(name);
  }
  return b;
}

// ---------------------------------------------------------------------------
// sign-vector monoids

namespace {

constexpr const char* kRealAlphabet = "0+-";
constexpr const char* kComplexAlphabet = "0+-ij";

char compose_real(char a, char b) { return a == '0' ? b : a; }

// entrywise product of the five-element band {0,+,-,i,j}
char compose_complex(char a, char b) {
  if (a == '0') return b;
  if (a == 'i' || a == 'j') return a;
  return (b == 'i' || b == 'j') ? b : a;
}

Lrb monoid_from_sign_strings(const std::vector<std::string>& rows, bool complex_alphabet) {
  const std::string alphabet = complex_alphabet ? kComplexAlphabet : kRealAlphabet;
  if (rows.empty()) throw InvalidInput("MissingIdentity", "no covectors given");
  const std::size_t len = rows[0].size();
  std::vector<std::string> elems;
  std::map<std::string, int> index;
  for (const auto& r : rows) {
    if (r.size() != len) throw InvalidInput("BadCovector", "covectors must have equal length");
    for (char c : r) {
      if (alphabet.find(c) == std::string::npos) {
        throw InvalidInput("BadCovector", std::string("bad sign character '") + c + "'");
      }
    }
    if (index.try_emplace(r, static_cast<int>(elems.size())).second) elems.push_back(r);
  }
  const std::string zero(len, '0');
  auto zit = index.find(zero);
  if (zit == index.end()) {
    throw InvalidInput("MissingIdentity", "the all-zero covector is missing");
  }

  const int size = static_cast<int>(elems.size());
  Lrb b;
  b.identity = zit->second;
  b.table.assign(size, std::vector<int>(size, 0));
  for (int i = 0; i < size; ++i) {
    for (int j = 0; j < size; ++j) {
      std::string prod(len, '0');
      for (std::size_t k = 0; k < len; ++k) {
        prod[k] = complex_alphabet ? compose_complex(elems[i][k], elems[j][k])
                                   : compose_real(elems[i][k], elems[j][k]);
      }
      auto it = index.find(prod);
      if (it == index.end()) {
        throw InvalidInput("NotClosed", "composite of " + elems[i] + " and " + elems[j] +
                                            " = " + prod + " is not in the list");
      }
      b.table[i][j] = it->second;
    }
  }
  b.names = elems;
  return b;
}

}  // namespace

Lrb face_monoid_from_covectors(const std::vector<std::string>& covectors,
                               bool complex_alphabet) {
  return monoid_from_sign_strings(covectors, complex_alphabet);
}

Lrb complex_sign_monoid(int n, std::size_t max_elements) {
  if (n < 1) throw InvalidInput("BadCovector", "n must be at least 1");
  std::size_t total = 1;
  for (int i = 0; i < n; ++i) {
    total *= 5;
    if (total > max_elements) {
      throw ResourceLimit("TooLarge", "5^" + std::to_string(n) + " exceeds the element cap");
    }
  }
  std::vector<std::string> rows;
  std::string current(n, '0');
  auto rec = [&](auto&& self, int pos) -> void {
    if (pos == n) {
      rows.push_back(current);
      return;
    }
    for (char c : std::string(kComplexAlphabet)) {
      current[pos] = c;
      self(self, pos + 1);
    }
  };
  rec(rec, 0);
  return monoid_from_sign_strings(rows, true);
}

// ---------------------------------------------------------------------------
// hyperplane arrangements over the rationals

bool sign_vector_feasible(const std::vector<std::vector<Rational>>& normals,
                          const std::string& signs) {
  const std::size_t n = normals.size();
  const std::size_t d = n ? normals[0].size() : 0;

  // equalities first: row-reduce, then substitute into the strict rows
  std::vector<std::vector<Rational>> eqs, strict;
  for (std::size_t i = 0; i < n; ++i) {
    if (signs[i] == '0') {
      eqs.push_back(normals[i]);
    } else {
      std::vector<Rational> row = normals[i];
      if (signs[i] == '-') {
        for (auto& v : row) v = -v;
      }
      strict.push_back(std::move(row));
    }
  }

  std::vector<std::size_t> pivot_col;
  std::size_t r = 0;
  for (std::size_t c = 0; c < d && r < eqs.size(); ++c) {
    std::size_t pr = r;
    while (pr < eqs.size() && eqs[pr][c] == 0) ++pr;
    if (pr == eqs.size()) continue;
    std::swap(eqs[r], eqs[pr]);
    const Rational pivot = eqs[r][c];
    for (auto& v : eqs[r]) v /= pivot;
    for (std::size_t i = 0; i < eqs.size(); ++i) {
      if (i != r && eqs[i][c] != 0) {
        const Rational f = eqs[i][c];
        for (std::size_t k = 0; k < d; ++k) eqs[i][k] -= f * eqs[r][k];
      }
    }
    pivot_col.push_back(c);
    ++r;
  }
  eqs.resize(r);
  for (auto& row : strict) {
    for (std::size_t i = 0; i < eqs.size(); ++i) {
      const Rational f = row[pivot_col[i]];
      if (f != 0) {
        for (std::size_t k = 0; k < d; ++k) row[k] -= f * eqs[i][k];
      }
    }
  }

  // Fourier-Motzkin on the homogeneous strict system
  auto all_zero = [](const std::vector<Rational>& row) {
    return std::all_of(row.begin(), row.end(), [](const Rational& v) { return v == 0; });
  };
  for (const auto& row : strict) {
    if (all_zero(row)) return false;  // 0 > 0
  }
  for (std::size_t c = 0; c < d; ++c) {
    std::vector<std::vector<Rational>> pos, neg, zero;
    for (auto& row : strict) {
      if (row[c] > 0) {
        pos.push_back(std::move(row));
      } else if (row[c] < 0) {
        neg.push_back(std::move(row));
      } else {
        zero.push_back(std::move(row));
      }
    }
    strict = std::move(zero);
    if (!pos.empty() && !neg.empty()) {
      for (const auto& p : pos) {
        for (const auto& q : neg) {
          std::vector<Rational> combined(d, 0);
          const Rational a = p[c], b = -q[c];  // a, b > 0
          for (std::size_t k = 0; k < d; ++k) combined[k] = b * p[k] + a * q[k];
          if (all_zero(combined)) return false;
          strict.push_back(std::move(combined));
        }
      }
    }
    if (strict.empty()) return true;
  }
  return strict.empty();
}

Lrb face_monoid_from_normals(const std::vector<std::vector<Rational>>& normals,
                             int max_hyperplanes) {
  const int n = static_cast<int>(normals.size());
  if (n == 0) throw InvalidInput("BadArrangement", "no normal vectors given");
  if (n > max_hyperplanes) {
    throw ResourceLimit("TooManyHyperplanes",
                        std::to_string(n) + " hyperplanes exceed the enumeration cap of " +
                            std::to_string(max_hyperplanes));
  }
  const std::size_t d = normals[0].size();
  if (d == 0) throw InvalidInput("BadArrangement", "normal vectors must be nonzero");
  for (const auto& h : normals) {
    if (h.size() != d) throw InvalidInput("BadArrangement", "normal vectors of unequal dimension");
    if (std::all_of(h.begin(), h.end(), [](const Rational& v) { return v == 0; })) {
      throw InvalidInput("BadArrangement", "normal vectors must be nonzero");
    }
  }

  std::vector<std::string> feasible;
  std::string signs(n, '0');
  auto rec = [&](auto&& self, int pos) -> void {
    if (pos == n) {
      if (sign_vector_feasible(normals, signs)) feasible.push_back(signs);
      return;
    }
    for (char c : {'0', '+', '-'}) {
      signs[pos] = c;
      self(self, pos + 1);
    }
  };
  rec(rec, 0);
  return face_monoid_from_covectors(feasible, false);
}

// ---------------------------------------------------------------------------
// Karnofsky-Rhodes and Rhodes expansions

Lrb karnofsky_rhodes(const FiniteLattice& lattice,
                     const std::vector<std::pair<std::string, int>>& generators,
                     std::size_t max_elements) {
  lattice.check();
  if (generators.empty()) throw InvalidInput("NotGenerating", "no generators given");
  for (const auto& [name, value] : generators) {
    if (value < 0 || value >= lattice.count) {
      throw InvalidInput("NotGenerating", "generator '" + name + "' maps outside the lattice");
    }
  }
  {
    std::set<std::string> names;
    for (const auto& [name, value] : generators) {
      if (!names.insert(name).second) {
        throw InvalidInput("NotGenerating", "duplicate generator name '" + name + "'");
      }
    }
  }
  // the generators together with the top must generate L under meet
  {
    std::set<int> closure{lattice.top};
    for (const auto& [name, value] : generators) closure.insert(value);
    bool grew = true;
    while (grew) {
      grew = false;
      std::vector<int> snapshot(closure.begin(), closure.end());
      for (int x : snapshot) {
        for (int y : snapshot) {
          if (closure.insert(lattice.meet[x][y]).second) grew = true;
        }
      }
    }
    if (static_cast<int>(closure.size()) != lattice.count) {
      throw InvalidInput("NotGenerating", "generators do not generate the lattice under meet");
    }
  }

  const int g = static_cast<int>(generators.size());
  // reduced words by breadth-first search: strictly decreasing prefix values
  std::vector<std::vector<int>> words{{}};
  std::vector<int> value{lattice.top};
  std::map<std::vector<int>, int> index{{{}, 0}};
  for (std::size_t w = 0; w < words.size(); ++w) {
    for (int a = 0; a < g; ++a) {
      const int next = lattice.meet[value[w]][generators[a].second];
      if (next == value[w]) continue;  // not a transition
      std::vector<int> word = words[w];
      word.push_back(a);
      index[word] = static_cast<int>(words.size());
      words.push_back(std::move(word));
      value.push_back(next);
      if (words.size() > max_elements) {
        throw ResourceLimit("TooLarge", "expansion exceeds " + std::to_string(max_elements) +
                                            " elements");
      }
    }
  }

  auto reduce = [&](const std::vector<int>& raw) {
    std::vector<int> word;
    int v = lattice.top;
    for (int a : raw) {
      const int next = lattice.meet[v][generators[a].second];
      if (next != v) {
        word.push_back(a);
        v = next;
      }
    }
    return word;
  };

  const int size = static_cast<int>(words.size());
  Lrb b;
  b.identity = 0;
  b.table.assign(size, std::vector<int>(size, 0));
  for (int i = 0; i < size; ++i) {
    for (int j = 0; j < size; ++j) {
      std::vector<int> concat = words[i];
      concat.insert(concat.end(), words[j].begin(), words[j].end());
      b.table[i][j] = index.at(reduce(concat));
    }
  }
  for (int i = 0; i < size; ++i) {
    if (words[i].empty()) {
      b.names.push_back("1");
      continue;
    }
    std::string name;
    for (int a : words[i]) name += generators[a].first;
    b.names.push_back(name);
  }
  return b;
}

Lrb rhodes_expansion(const FiniteLattice& lattice, std::size_t max_elements) {
  lattice.check();
  // chains through the top, as strictly decreasing index sequences
  std::vector<std::vector<int>> chains{{lattice.top}};
  for (std::size_t c = 0; c < chains.size(); ++c) {
    const int last = chains[c].back();
    for (int z = 0; z < lattice.count; ++z) {
      if (z != last && lattice.leq[z][last]) {
        std::vector<int> chain = chains[c];
        chain.push_back(z);
        chains.push_back(std::move(chain));
        if (chains.size() > max_elements) {
          throw ResourceLimit("TooLarge", "expansion exceeds " + std::to_string(max_elements) +
                                              " elements");
        }
      }
    }
  }
  std::sort(chains.begin(), chains.end(), [](const auto& a, const auto& b) {
    if (a.size() != b.size()) return a.size() < b.size();
    return a < b;
  });
  std::map<std::vector<int>, int> index;
  for (std::size_t i = 0; i < chains.size(); ++i) index[chains[i]] = static_cast<int>(i);

  const int size = static_cast<int>(chains.size());
  Lrb b;
  b.identity = 0;
  b.table.assign(size, std::vector<int>(size, 0));
  for (int i = 0; i < size; ++i) {
    for (int j = 0; j < size; ++j) {
      std::vector<int> prod = chains[i];
      const int m = chains[i].back();
      for (int y : chains[j]) {
        const int my = lattice.meet[m][y];
        if (my != prod.back()) prod.push_back(my);
      }
      b.table[i][j] = index.at(prod);
    }
  }
  for (const auto& chain : chains) {
    std::string name = "[";
    for (std::size_t k = 0; k < chain.size(); ++k) {
      if (k) name += ">";
      name += lattice.label(chain[k]);
    }
    b.names.push_back(name + "]");
  }
  return b;
}

// ---------------------------------------------------------------------------
// quiver left regular band

Lrb quiver_lrb(const Quiver& q, std::size_t max_elements) {
  const int n = static_cast<int>(q.vertices.size());
  if (n == 0) throw InvalidInput("BadQuiver", "quiver must have a vertex");
  const std::vector<int> order = q.checked_order();
  std::vector<int> pos(n);
  for (int i = 0; i < n; ++i) pos[order[i]] = i;

  std::vector<std::string> arrow_label(q.arrows.size());
  {
    std::set<std::string> seen;
    for (std::size_t a = 0; a < q.arrows.size(); ++a) {
      std::string l = q.arrows[a].label;
      if (l.empty() || !seen.insert(l).second) l = "a" + std::to_string(a);
      seen.insert(l);
      arrow_label[a] = l;
    }
  }

  // paths as arrow-index sequences; stationary paths carry just a vertex
  struct Path {
    int start;
    std::vector<int> arrows;
    int end;
  };
  std::vector<Path> paths;
  std::map<std::pair<int, std::vector<int>>, int> index;
  for (int i = 0; i < n; ++i) {
    const int v = order[i];
    index[{v, {}}] = static_cast<int>(paths.size());
    paths.push_back({v, {}, v});
  }
  for (std::size_t p = 0; p < paths.size(); ++p) {
    for (std::size_t a = 0; a < q.arrows.size(); ++a) {
      if (q.arrows[a].source != paths[p].end) continue;
      Path next = paths[p];
      next.arrows.push_back(static_cast<int>(a));
      next.end = q.arrows[a].target;
      index[{next.start, next.arrows}] = static_cast<int>(paths.size());
      paths.push_back(std::move(next));
      if (paths.size() > max_elements) {
        throw ResourceLimit("TooLarge", "path count exceeds " + std::to_string(max_elements));
      }
    }
  }

  const int size = static_cast<int>(paths.size());
  Lrb b;
  b.identity = index.at({order[0], {}});
  b.table.assign(size, std::vector<int>(size, 0));
  for (int i = 0; i < size; ++i) {
    for (int j = 0; j < size; ++j) {
      const Path& x = paths[i];
      const Path& y = paths[j];
      if (pos[x.end] >= pos[y.end]) {
        b.table[i][j] = i;  // x absorbs y
        continue;
      }
      // first arrow of y whose source is >= end of x
      std::size_t r = 0;
      bool attached = false;
      while (r < y.arrows.size()) {
        const int s = q.arrows[y.arrows[r]].source;
        if (s == x.end) {
          attached = true;
          break;
        }
        if (pos[s] > pos[x.end]) break;
        ++r;
      }
      if (attached) {
        Path prod = x;
        for (std::size_t k = r; k < y.arrows.size(); ++k) prod.arrows.push_back(y.arrows[k]);
        prod.end = y.end;
        b.table[i][j] = index.at({prod.start, prod.arrows});
      } else {
        // suffix of y from arrow r (empty suffix = stationary path at end of y)
        Path suffix;
        suffix.arrows.assign(y.arrows.begin() + static_cast<long>(r), y.arrows.end());
        suffix.start = suffix.arrows.empty() ? y.end : q.arrows[suffix.arrows[0]].source;
        suffix.end = y.end;
        b.table[i][j] = index.at({suffix.start, suffix.arrows});
      }
    }
  }
  for (const Path& p : paths) {
    if (p.arrows.empty()) {
      b.names.push_back("e_" + q.vertices[p.start]);
    } else {
      std::string name;
      for (std::size_t k = 0; k < p.arrows.size(); ++k) {
        if (k) name += "*";
        name += arrow_label[p.arrows[k]];
      }
      b.names.push_back(name);
    }
  }
  return b;
}

Lrb lattice_as_lrb(const FiniteLattice& lattice) {
  lattice.check();
  Lrb b;
  b.identity = lattice.top;
  b.table = lattice.meet;
  for (int x = 0; x < lattice.count; ++x) b.names.push_back(lattice.label(x));
  return b;
}

Lrb direct_product(const Lrb& a, const Lrb& b, std::size_t max_elements) {
  const std::size_t size = static_cast<std::size_t>(a.size()) * static_cast<std::size_t>(b.size());
  if (size > max_elements) {
    throw ResourceLimit("TooLarge", "product exceeds " + std::to_string(max_elements) +
                                        " elements");
  }
  Lrb out;
  const int bn = b.size();
  out.identity = a.identity * bn + b.identity;
  out.table.assign(size, std::vector<int>(size, 0));
  for (int i = 0; i < static_cast<int>(size); ++i) {
    const int ai = i / bn, bi = i % bn;
    for (int j = 0; j < static_cast<int>(size); ++j) {
      const int aj = j / bn, bj = j % bn;
      out.table[i][j] = a.mul(ai, aj) * bn + b.mul(bi, bj);
    }
  }
  for (int i = 0; i < static_cast<int>(size); ++i) {
    out.names.push_back(a.label(i / bn) + "|" + b.label(i % bn));
  }
  return out;
}

}  // namespace lrb
