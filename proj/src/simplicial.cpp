#include "lrb/simplicial.hpp"

#include <algorithm>
#include <cstdint>
#include <map>
#include <queue>
#include <set>
#include <unordered_set>

namespace lrb {

namespace {

// lexicographic order on masks viewed as increasing vertex tuples
bool mask_lex_less(std::uint64_t a, std::uint64_t b) {
  while (a && b) {
    const int va = __builtin_ctzll(a);
    const int vb = __builtin_ctzll(b);
    if (va != vb) return va < vb;
    a &= a - 1;
    b &= b - 1;
  }
  return a == 0 && b != 0;
}

std::uint64_t to_mask(const std::vector<int>& face) {
  std::uint64_t m = 0;
  for (int v : face) m |= 1ULL << v;
  return m;
}

}  // namespace

SimplicialComplex SimplicialComplex::from_faces(std::vector<std::string> vertices,
                                                const std::vector<std::vector<int>>& faces) {
  const int n = static_cast<int>(vertices.size());
  if (n > 64) throw ResourceLimit("TooManyVertices", "complexes are limited to 64 vertices");
  std::vector<std::uint64_t> masks;
  for (const auto& f : faces) {
    std::uint64_t m = 0;
    for (int v : f) {
      if (v < 0 || v >= n) throw InvalidInput("BadComplex", "face vertex out of range");
      m |= 1ULL << v;
    }
    masks.push_back(m);
  }
  std::uint64_t covered = 0;
  for (std::uint64_t m : masks) covered |= m;
  for (int v = 0; v < n; ++v) {
    if (!((covered >> v) & 1ULL)) masks.push_back(1ULL << v);
  }
  // keep only maximal faces
  std::sort(masks.begin(), masks.end(), [](std::uint64_t a, std::uint64_t b) {
    return __builtin_popcountll(a) > __builtin_popcountll(b);
  });
  std::vector<std::uint64_t> maximal;
  for (std::uint64_t m : masks) {
    if (m == 0) continue;
    bool dominated = false;
    for (std::uint64_t big : maximal) {
      if ((m & big) == m) {
        dominated = true;
        break;
      }
    }
    if (!dominated) maximal.push_back(m);
  }
  std::sort(maximal.begin(), maximal.end(), mask_lex_less);

  SimplicialComplex k;
  k.vertices = std::move(vertices);
  for (std::uint64_t m : maximal) {
    std::vector<int> face;
    for (std::uint64_t rest = m; rest; rest &= rest - 1) {
      face.push_back(__builtin_ctzll(rest));
    }
    k.facets.push_back(std::move(face));
  }
  return k;
}

int SimplicialComplex::dim() const {
  int d = -1;
  for (const auto& f : facets) d = std::max(d, static_cast<int>(f.size()) - 1);
  return d;
}

std::vector<std::vector<std::uint64_t>> SimplicialComplex::faces_by_dim(
    std::size_t max_faces) const {
  std::unordered_set<std::uint64_t> seen;
  for (const auto& facet : facets) {
    const std::uint64_t m = to_mask(facet);
    // all nonempty subsets of the facet
    for (std::uint64_t sub = m; sub; sub = (sub - 1) & m) {
      seen.insert(sub);
      if (seen.size() > max_faces) {
        throw ResourceLimit("TooLarge", "face count exceeds " + std::to_string(max_faces));
      }
    }
  }
  std::vector<std::vector<std::uint64_t>> by_dim(static_cast<std::size_t>(dim() + 1));
  for (std::uint64_t m : seen) by_dim[__builtin_popcountll(m) - 1].push_back(m);
  for (auto& level : by_dim) std::sort(level.begin(), level.end(), mask_lex_less);
  return by_dim;
}

std::vector<long> SimplicialComplex::f_vector() const {
  std::vector<long> f;
  for (const auto& level : faces_by_dim()) f.push_back(static_cast<long>(level.size()));
  return f;
}

long SimplicialComplex::euler_characteristic() const {
  long chi = 0;
  int sign = 1;
  for (long fi : f_vector()) {
    chi += sign * fi;
    sign = -sign;
  }
  return chi;
}

SimplicialComplex SimplicialComplex::induced(std::uint64_t vertex_mask) const {
  std::vector<int> verts;
  for (int v = 0; v < vertex_count(); ++v) {
    if ((vertex_mask >> v) & 1ULL) verts.push_back(v);
  }
  std::vector<int> position(vertex_count(), -1);
  std::vector<std::string> labels;
  for (std::size_t i = 0; i < verts.size(); ++i) {
    position[verts[i]] = static_cast<int>(i);
    labels.push_back(vertices[verts[i]]);
  }
  std::vector<std::vector<int>> faces;
  for (const auto& facet : facets) {
    std::vector<int> cut;
    for (int v : facet) {
      if (position[v] >= 0) cut.push_back(position[v]);
    }
    if (!cut.empty()) faces.push_back(std::move(cut));
  }
  return from_faces(std::move(labels), faces);
}

Graph SimplicialComplex::one_skeleton() const {
  Graph g(vertex_count(), vertices);
  for (const auto& facet : facets) {
    for (std::size_t i = 0; i < facet.size(); ++i) {
      for (std::size_t j = i + 1; j < facet.size(); ++j) {
        g.add_edge(facet[i], facet[j]);
      }
    }
  }
  return g;
}

bool SimplicialComplex::is_simplex() const {
  if (vertices.empty()) return true;
  return facets.size() == 1 && static_cast<int>(facets[0].size()) == vertex_count();
}

bool SimplicialComplex::is_flag() const {
  const SimplicialComplex cliq = clique_complex(one_skeleton());
  return same_complex(cliq);
}

bool SimplicialComplex::same_complex(const SimplicialComplex& other) const {
  if (vertices != other.vertices) return false;
  return facets == other.facets;
}

int BettiVector::top_degree() const {
  for (int i = static_cast<int>(dims.size()) - 1; i >= 0; --i) {
    if (dims[i] != 0) return i - 1;
  }
  return -2;
}

std::string BettiVector::str() const {
  std::string out = "(";
  for (std::size_t i = 0; i < dims.size(); ++i) {
    if (i) out += ",";
    out += std::to_string(dims[i]);
  }
  return out + ")";
}

bool operator==(const BettiVector& a, const BettiVector& b) {
  if (a.field != b.field) return false;
  const std::size_t len = std::max(a.dims.size(), b.dims.size());
  for (std::size_t i = 0; i < len; ++i) {
    const long da = i < a.dims.size() ? a.dims[i] : 0;
    const long db = i < b.dims.size() ? b.dims[i] : 0;
    if (da != db) return false;
  }
  return true;
}

std::vector<ExactMatrix> boundary_matrices(const SimplicialComplex& k, std::size_t max_faces) {
  const auto faces = k.faces_by_dim(max_faces);
  const int d = static_cast<int>(faces.size());  // = dim + 1
  std::vector<ExactMatrix> boundary;
  if (d == 0) return boundary;

  std::vector<std::map<std::uint64_t, std::size_t>> index(d);
  for (int i = 0; i < d; ++i) {
    for (std::size_t j = 0; j < faces[i].size(); ++j) index[i][faces[i][j]] = j;
  }

  // augmentation: every vertex maps to the empty simplex
  ExactMatrix aug(1, faces[0].size());
  for (std::size_t j = 0; j < faces[0].size(); ++j) aug.add(0, j, 1);
  boundary.push_back(std::move(aug));

  for (int i = 1; i < d; ++i) {
    ExactMatrix m(faces[i - 1].size(), faces[i].size());
    for (std::size_t j = 0; j < faces[i].size(); ++j) {
      const std::uint64_t face = faces[i][j];
      int sign = 1;
      for (std::uint64_t rest = face; rest; rest &= rest - 1) {
        const std::uint64_t sub = face & ~(rest & (~rest + 1));
        m.add(index[i - 1].at(sub), j, sign);
        sign = -sign;
      }
    }
    boundary.push_back(std::move(m));
  }
  return boundary;
}

BettiVector reduced_betti(const SimplicialComplex& k, const Field& field,
                          std::size_t max_faces) {
  const auto bound = boundary_matrices(k, max_faces);
  const int d = static_cast<int>(bound.size());  // dim + 1
  std::vector<std::size_t> ranks(d + 1, 0);
  for (int i = 0; i < d; ++i) ranks[i] = bound[i].rank(field);

  BettiVector out;
  out.field = field;
  out.dims.assign(static_cast<std::size_t>(d + 1), 0);
  // degree -1: the empty simplex modulo the image of the augmentation
  out.dims[0] = 1 - static_cast<long>(ranks.empty() ? 0 : ranks[0]);
  if (d == 0) out.dims[0] = 1;
  for (int i = 0; i < d; ++i) {
    const long fi = static_cast<long>(bound[i].cols());
    const long next_rank = static_cast<long>(i + 1 < d ? ranks[i + 1] : 0);
    out.dims[static_cast<std::size_t>(i + 1)] = fi - static_cast<long>(ranks[i]) - next_rank;
  }
  return out;
}

SimplicialComplex order_complex(const FinitePoset& p, std::vector<std::string> labels) {
  if (labels.empty()) {
    for (int x = 0; x < p.count; ++x) labels.push_back("p" + std::to_string(x));
  }
  // maximal chains = paths in the Hasse diagram from minimal to maximal
  std::vector<std::vector<int>> up(p.count);
  for (const auto& [lo, hi] : p.hasse) up[lo].push_back(hi);
  std::vector<std::vector<int>> chains;
  std::vector<int> chain;
  auto dfs = [&](auto&& self, int x) -> void {
    chain.push_back(x);
    if (up[x].empty()) {
      chains.push_back(chain);
      if (chains.size() > 5'000'000) {
        throw ResourceLimit("TooLarge", "too many maximal chains");
      }
    } else {
      for (int y : up[x]) self(self, y);
    }
    chain.pop_back();
  };
  for (int x = 0; x < p.count; ++x) {
    bool minimal = true;
    for (int y = 0; y < p.count && minimal; ++y) {
      if (y != x && p.leq[y][x]) minimal = false;
    }
    if (minimal) dfs(dfs, x);
  }
  return SimplicialComplex::from_faces(std::move(labels), chains);
}

SimplicialComplex clique_complex(const Graph& g, std::size_t max_cliques) {
  std::vector<std::vector<int>> cliques;
  // Bron-Kerbosch with pivoting
  auto expand = [&](auto&& self, std::uint64_t r, std::uint64_t p, std::uint64_t x) -> void {
    if (p == 0 && x == 0) {
      std::vector<int> clique;
      for (std::uint64_t rest = r; rest; rest &= rest - 1) {
        clique.push_back(__builtin_ctzll(rest));
      }
      cliques.push_back(std::move(clique));
      if (cliques.size() > max_cliques) {
        throw ResourceLimit("TooManyCliques",
                            "clique count exceeds " + std::to_string(max_cliques));
      }
      return;
    }
    int pivot = -1, best = -1;
    for (std::uint64_t rest = p | x; rest; rest &= rest - 1) {
      const int u = __builtin_ctzll(rest);
      const int deg = __builtin_popcountll(p & g.adj[u]);
      if (deg > best) {
        best = deg;
        pivot = u;
      }
    }
    std::uint64_t candidates = p & ~(pivot >= 0 ? g.adj[pivot] : 0ULL);
    for (std::uint64_t rest = candidates; rest; rest &= rest - 1) {
      const int v = __builtin_ctzll(rest);
      self(self, r | (1ULL << v), p & g.adj[v], x & g.adj[v]);
      p &= ~(1ULL << v);
      x |= 1ULL << v;
    }
  };
  if (g.n > 0) {
    expand(expand, 0, g.n == 64 ? ~0ULL : (1ULL << g.n) - 1, 0);
  }
  std::vector<std::string> labels;
  for (int v = 0; v < g.n; ++v) labels.push_back(g.label(v));
  return SimplicialComplex::from_faces(std::move(labels), cliques);
}

ChordalResult is_chordal(const Graph& g) {
  ChordalResult result;
  std::uint64_t remaining = g.n == 64 ? ~0ULL : (1ULL << g.n) - 1;

  auto is_simplicial = [&](int v) {
    const std::uint64_t nb = g.adj[v] & remaining;
    for (std::uint64_t rest = nb; rest; rest &= rest - 1) {
      const int u = __builtin_ctzll(rest);
      if ((nb & ~g.adj[u] & ~(1ULL << u)) != 0) return false;
    }
    return true;
  };

  while (remaining) {
    int found = -1;
    for (std::uint64_t rest = remaining; rest; rest &= rest - 1) {
      const int v = __builtin_ctzll(rest);
      if (is_simplicial(v)) {
        found = v;
        break;
      }
    }
    if (found < 0) break;
    result.elimination_order.push_back(found);
    remaining &= ~(1ULL << found);
  }
  if (remaining == 0) {
    result.chordal = true;
    return result;
  }

  // No simplicial vertex left: the remainder contains an induced cycle of
  // length >= 4. Find one through a vertex with two nonadjacent neighbours.
  for (std::uint64_t rest = remaining; rest; rest &= rest - 1) {
    const int v = __builtin_ctzll(rest);
    const std::uint64_t nb = g.adj[v] & remaining;
    for (std::uint64_t r1 = nb; r1; r1 &= r1 - 1) {
      const int x = __builtin_ctzll(r1);
      for (std::uint64_t r2 = r1 & (r1 - 1); r2; r2 &= r2 - 1) {
        const int y = __builtin_ctzll(r2);
        if (g.has_edge(x, y)) continue;
        // shortest x-y path avoiding N[v] \ {x,y}
        std::uint64_t allowed = remaining & ~(g.adj[v] | (1ULL << v));
        allowed |= (1ULL << x) | (1ULL << y);
        std::vector<int> parent(g.n, -1);
        std::queue<int> queue;
        queue.push(x);
        parent[x] = x;
        while (!queue.empty() && parent[y] < 0) {
          const int u = queue.front();
          queue.pop();
          for (std::uint64_t nrest = g.adj[u] & allowed; nrest; nrest &= nrest - 1) {
            const int w = __builtin_ctzll(nrest);
            if (parent[w] < 0) {
              parent[w] = u;
              queue.push(w);
            }
          }
        }
        if (parent[y] < 0) continue;
        std::vector<int> path;
        for (int u = y; u != x; u = parent[u]) path.push_back(u);
        path.push_back(x);
        path.push_back(v);
        result.induced_cycle = path;
        return result;
      }
    }
  }
  throw VerificationFailed("stuck graph without simplicial vertex has no witness cycle");
}

SimplicialComplex cross_cut_complex(const FinitePoset& p, std::vector<std::string> labels) {
  if (labels.empty()) {
    for (int x = 0; x < p.count; ++x) labels.push_back("p" + std::to_string(x));
  }
  // every pair with a common lower bound must have a meet; by induction the
  // same then holds for arbitrary bounded subsets
  for (int x = 0; x < p.count; ++x) {
    for (int y = x + 1; y < p.count; ++y) {
      std::vector<int> lower;
      for (int z = 0; z < p.count; ++z) {
        if (p.leq[z][x] && p.leq[z][y]) lower.push_back(z);
      }
      if (lower.empty()) continue;
      bool has_meet = false;
      for (int m : lower) {
        bool greatest = true;
        for (int z : lower) {
          if (!p.leq[z][m]) {
            greatest = false;
            break;
          }
        }
        if (greatest) {
          has_meet = true;
          break;
        }
      }
      if (!has_meet) {
        throw InvalidInput("MeetHypothesisFails",
                           "{" + labels[x] + ", " + labels[y] + "} has lower bounds but no meet");
      }
    }
  }

  const std::vector<int> maximal = p.maximal_elements();
  std::vector<int> position(p.count, -1);
  std::vector<std::string> max_labels;
  for (std::size_t i = 0; i < maximal.size(); ++i) {
    position[maximal[i]] = static_cast<int>(i);
    max_labels.push_back(labels[maximal[i]]);
  }
  // simplices are the sets {m maximal : m >= z}; facets are the maximal ones
  std::vector<std::vector<int>> faces;
  for (int z = 0; z < p.count; ++z) {
    std::vector<int> face;
    for (int m : maximal) {
      if (p.leq[z][m]) face.push_back(position[m]);
    }
    faces.push_back(std::move(face));
  }
  return SimplicialComplex::from_faces(std::move(max_labels), faces);
}

namespace {

long leray_from_subsets(const SimplicialComplex& k, const Field& field, int max_vertices) {
  const int n = k.vertex_count();
  if (n > max_vertices) {
    throw ResourceLimit("TooManyVertices",
                        "Leray enumeration capped at " + std::to_string(max_vertices) +
                            " vertices");
  }
  long leray = 0;
  for (std::uint64_t w = 0; w < (1ULL << n); ++w) {
    const BettiVector betti = reduced_betti(k.induced(w), field);
    const int top = betti.top_degree();
    if (top >= 0) leray = std::max(leray, static_cast<long>(top) + 1);
  }
  return leray;
}

}  // namespace

long leray_number_brute(const SimplicialComplex& k, const Field& field, int max_vertices) {
  return leray_from_subsets(k, field, max_vertices);
}

long leray_number(const SimplicialComplex& k, const Field& field, int max_vertices) {
  if (k.is_simplex()) return 0;
  if (k.is_flag() && is_chordal(k.one_skeleton()).chordal) return 1;
  return leray_from_subsets(k, field, max_vertices);
}

}  // namespace lrb
