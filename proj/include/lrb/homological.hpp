#pragma once

#include <map>
#include <optional>
#include <string>
#include <tuple>
#include <utility>
#include <vector>

#include "lrb/field.hpp"
#include "lrb/lrb.hpp"
#include "lrb/simplicial.hpp"

namespace lrb {

// Arrow multiplicities on the support lattice.
struct QuiverDescription {
  int vertex_count = 0;
  std::vector<std::string> labels;                 // lattice element labels
  std::map<std::pair<int, int>, long> arrows;      // (X, Y) -> multiplicity, X < Y

  long multiplicity(int X, int Y) const {
    auto it = arrows.find({X, Y});
    return it == arrows.end() ? 0 : it->second;
  }
  long total() const;
  friend bool operator==(const QuiverDescription& a, const QuiverDescription& b) {
    return a.vertex_count == b.vertex_count && a.arrows == b.arrows;
  }
};

// dim Ext^n between the simple modules attached to lattice elements.
struct ExtTable {
  Field field = Field::rationals();
  int max_degree = 0;
  std::map<std::tuple<int, int, int>, long> entries;  // (X, Y, n) -> dim

  long dim(int X, int Y, int n) const {
    auto it = entries.find({X, Y, n});
    return it == entries.end() ? 0 : it->second;
  }
};

struct BoundsReport {
  long global_dimension = 0;
  long chain_bound = 0;
  std::optional<long> leray_bound;  // absent when |B| exceeds the Leray cap
  bool chain_bound_ok = false;
  bool leray_bound_ok = true;
};

struct GeometricCheckReport {
  BettiVector delta_betti;       // reduced Betti of Delta(0,1)
  BettiVector clique_betti;      // reduced Betti of Cliq(commutation graph)
  bool equal = false;
};

// Caches the support lattice, the R-order and the order complexes Delta(X,Y)
// of one monoid, and derives the homological invariants of its algebra.
class HomologyContext {
 public:
  explicit HomologyContext(Lrb b);

  const Lrb& monoid() const { return b_; }
  const SupportLattice& lattice() const { return lat_; }
  const FinitePoset& rorder() const { return rorder_; }
  int chain_bound() const;

  // Order complex of the R-order on B[X,Y), for X < Y.
  const SimplicialComplex& delta(int X, int Y);

  // Degree-indexed dims of Ext^n(k_X, k_Y), n = 0..max_degree.
  // max_degree < 0 means the chain-length bound.
  std::vector<long> ext_dims(int X, int Y, const Field& field, int max_degree = -1);

  ExtTable ext_table(const Field& field, int max_degree = -1);

  // arrows(X, Y) = components of Delta(X,Y) minus one; no field needed.
  QuiverDescription quiver();

  // (X, Y) -> dim of degree-2 Ext, the relation count of a minimal
  // presentation; zero entries are omitted.
  std::map<std::pair<int, int>, long> relation_counts(const Field& field);

  long proj_dimension(int X, const Field& field);
  long global_dimension(const Field& field);

  BoundsReport bounds_report(const Field& field, int leray_cap = 16);

  // Arrow counts by the children formula for right hereditary bands; must
  // coincide with quiver(). Throws NotRightHereditary otherwise.
  QuiverDescription right_hereditary_quiver();

  // For geometric bands: Delta(0,1) and the clique complex of the commutation
  // graph have the same Betti vectors. Throws NotGeometric otherwise.
  GeometricCheckReport geometric_commutation_check(const Field& field);

  std::string lattice_label(int X) const;

 private:
  Lrb b_;
  SupportLattice lat_;
  FinitePoset rorder_;
  std::map<std::pair<int, int>, SimplicialComplex> delta_cache_;
  std::map<std::pair<int, int>, long> component_cache_;

  long delta_components(int X, int Y);
};

}  // namespace lrb
