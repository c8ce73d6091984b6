#include "lrb/homological.hpp"

#include <algorithm>
#include <numeric>

namespace lrb {

long QuiverDescription::total() const {
  long t = 0;
  for (const auto& [key, m] : arrows) t += m;
  return t;
}

HomologyContext::HomologyContext(Lrb b)
    : b_(std::move(b)), lat_(support_lattice(b_)), rorder_(r_order(b_)) {}

int HomologyContext::chain_bound() const { return lambda_chain_length(lat_); }

std::string HomologyContext::lattice_label(int X) const {
  return "B." + b_.label(lat_.rep[X]);
}

const SimplicialComplex& HomologyContext::delta(int X, int Y) {
  if (!lat_.less(X, Y)) {
    throw InvalidInput("NotStrictlyComparable", "Delta(X,Y) needs X < Y in the lattice");
  }
  auto it = delta_cache_.find({X, Y});
  if (it != delta_cache_.end()) return it->second;

  const SubmonoidMap interval = interval_submonoid(b_, lat_, X, Y);
  // drop the local identity, keep the R-order of the rest
  std::vector<int> elements;
  for (std::size_t i = 0; i < interval.embed.size(); ++i) {
    if (static_cast<int>(i) != interval.sub.identity) elements.push_back(interval.embed[i]);
  }
  const int k = static_cast<int>(elements.size());
  std::vector<std::vector<bool>> leq(k, std::vector<bool>(k, false));
  for (int i = 0; i < k; ++i) {
    for (int j = 0; j < k; ++j) {
      leq[i][j] = rorder_.leq[elements[i]][elements[j]];
    }
  }
  std::vector<std::string> labels;
  for (int e : elements) labels.push_back(b_.label(e));
  SimplicialComplex complex = order_complex(make_poset(std::move(leq)), std::move(labels));
  return delta_cache_.emplace(std::make_pair(X, Y), std::move(complex)).first->second;
}

long HomologyContext::delta_components(int X, int Y) {
  auto it = component_cache_.find({X, Y});
  if (it != component_cache_.end()) return it->second;
  // union-find over the comparability relation of B[X,Y)
  const SimplicialComplex& complex = delta(X, Y);
  const int n = complex.vertex_count();
  std::vector<int> parent(n);
  std::iota(parent.begin(), parent.end(), 0);
  auto find = [&](int v) {
    while (parent[v] != v) v = parent[v] = parent[parent[v]];
    return v;
  };
  for (const auto& facet : complex.facets) {
    for (std::size_t i = 1; i < facet.size(); ++i) {
      parent[find(facet[i])] = find(facet[0]);
    }
  }
  long components = 0;
  for (int v = 0; v < n; ++v) {
    if (find(v) == v) ++components;
  }
  component_cache_[{X, Y}] = components;
  return components;
}

std::vector<long> HomologyContext::ext_dims(int X, int Y, const Field& field, int max_degree) {
  if (max_degree < 0) max_degree = chain_bound();
  std::vector<long> dims(static_cast<std::size_t>(max_degree) + 1, 0);
  if (X == Y) {
    dims[0] = 1;
    return dims;
  }
  if (!lat_.less(X, Y)) return dims;  // vanishes unless Y >= X
  const BettiVector betti = reduced_betti(delta(X, Y), field);
  for (int n = 1; n <= max_degree; ++n) dims[static_cast<std::size_t>(n)] = betti.dim(n - 1);
  return dims;
}

ExtTable HomologyContext::ext_table(const Field& field, int max_degree) {
  if (max_degree < 0) max_degree = chain_bound();
  ExtTable table;
  table.field = field;
  table.max_degree = max_degree;
  for (int X = 0; X < lat_.count; ++X) {
    for (int Y = 0; Y < lat_.count; ++Y) {
      const std::vector<long> dims = ext_dims(X, Y, field, max_degree);
      for (int n = 0; n <= max_degree; ++n) {
        if (dims[static_cast<std::size_t>(n)] != 0) {
          table.entries[{X, Y, n}] = dims[static_cast<std::size_t>(n)];
        }
      }
    }
  }
  return table;
}

QuiverDescription HomologyContext::quiver() {
  QuiverDescription q;
  q.vertex_count = lat_.count;
  for (int X = 0; X < lat_.count; ++X) q.labels.push_back(lattice_label(X));
  for (int X = 0; X < lat_.count; ++X) {
    for (int Y = 0; Y < lat_.count; ++Y) {
      if (!lat_.less(X, Y)) continue;
      const long arrows = delta_components(X, Y) - 1;
      if (arrows > 0) q.arrows[{X, Y}] = arrows;
    }
  }
  return q;
}

std::map<std::pair<int, int>, long> HomologyContext::relation_counts(const Field& field) {
  std::map<std::pair<int, int>, long> counts;
  for (int X = 0; X < lat_.count; ++X) {
    for (int Y = 0; Y < lat_.count; ++Y) {
      if (!lat_.less(X, Y)) continue;
      const long h1 = reduced_betti(delta(X, Y), field).dim(1);
      if (h1 != 0) counts[{X, Y}] = h1;
    }
  }
  return counts;
}

long HomologyContext::proj_dimension(int X, const Field& field) {
  long pd = 0;
  for (int Y = 0; Y < lat_.count; ++Y) {
    if (!lat_.less(X, Y)) continue;
    const int top = reduced_betti(delta(X, Y), field).top_degree();
    if (top >= 0) pd = std::max(pd, static_cast<long>(top) + 1);
  }
  return pd;
}

long HomologyContext::global_dimension(const Field& field) {
  long gd = 0;
  for (int X = 0; X < lat_.count; ++X) gd = std::max(gd, proj_dimension(X, field));
  return gd;
}

BoundsReport HomologyContext::bounds_report(const Field& field, int leray_cap) {
  BoundsReport report;
  report.global_dimension = global_dimension(field);
  report.chain_bound = chain_bound();
  report.chain_bound_ok = report.global_dimension <= report.chain_bound;
  if (b_.size() <= leray_cap) {
    std::vector<std::string> labels;
    for (int x = 0; x < b_.size(); ++x) labels.push_back(b_.label(x));
    const SimplicialComplex full = order_complex(rorder_, std::move(labels));
    report.leray_bound = leray_number(full, field, leray_cap);
    report.leray_bound_ok = report.global_dimension <= *report.leray_bound;
  }
  return report;
}

QuiverDescription HomologyContext::right_hereditary_quiver() {
  if (!is_right_hereditary(b_)) {
    throw InvalidInput("NotRightHereditary", "the R-order Hasse diagram is not a tree");
  }
  // children of an element in the R-order Hasse diagram
  std::vector<std::vector<int>> children(b_.size());
  for (const auto& [lo, hi] : rorder_.hasse) children[hi].push_back(lo);

  QuiverDescription q;
  q.vertex_count = lat_.count;
  for (int X = 0; X < lat_.count; ++X) q.labels.push_back(lattice_label(X));
  for (int Y = 0; Y < lat_.count; ++Y) {
    const int e_y = lat_.rep[Y];
    for (int X = 0; X < lat_.count; ++X) {
      if (!lat_.less(X, Y)) continue;
      long count = 0;
      for (int child : children[e_y]) {
        if (lat_.leq(X, lat_.sigma[child])) ++count;
      }
      if (count > 1) q.arrows[{X, Y}] = count - 1;
    }
  }
  return q;
}

GeometricCheckReport HomologyContext::geometric_commutation_check(const Field& field) {
  const GeometricCheck check = is_geometric(b_);
  if (!check.geometric) {
    const auto& w = *check.witness;
    throw InvalidInput("NotGeometric", "elements " + b_.label(w[1]) + ", " + b_.label(w[2]) +
                                           " above " + b_.label(w[0]) + " do not commute");
  }
  GeometricCheckReport report;
  report.delta_betti = reduced_betti(delta(lat_.bottom, lat_.top), field);
  report.clique_betti = reduced_betti(clique_complex(commutation_graph(b_)), field);
  report.equal = report.delta_betti == report.clique_betti;
  return report;
}

}  // namespace lrb
