#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "lrb/exact_matrix.hpp"
#include "lrb/field.hpp"
#include "lrb/graph.hpp"
#include "lrb/lrb.hpp"

namespace lrb {

// Finite abstract simplicial complex, kept as its maximal faces. Every listed
// vertex is a face; isolated vertices appear as singleton facets.
struct SimplicialComplex {
  std::vector<std::string> vertices;
  std::vector<std::vector<int>> facets;  // sorted vertex lists, an antichain

  // Normalizes: sorts faces, drops dominated ones, adds uncovered vertices
  // as singletons. At most 64 vertices.
  static SimplicialComplex from_faces(std::vector<std::string> vertices,
                                      const std::vector<std::vector<int>>& faces);

  int vertex_count() const { return static_cast<int>(vertices.size()); }
  int dim() const;  // -1 when there are no vertices

  // All faces as vertex bitmasks, grouped by dimension and sorted
  // lexicographically as vertex tuples. faces[d] holds the d-faces.
  std::vector<std::vector<std::uint64_t>> faces_by_dim(
      std::size_t max_faces = 2'000'000) const;

  // Number of i-faces for i = 0..dim.
  std::vector<long> f_vector() const;
  long euler_characteristic() const;

  SimplicialComplex induced(std::uint64_t vertex_mask) const;
  Graph one_skeleton() const;
  bool is_simplex() const;
  bool is_flag() const;

  // Same faces under the identity on vertex labels.
  bool same_complex(const SimplicialComplex& other) const;
};

// Dimensions of reduced cohomology, indexed from degree -1 (the augmentation
// degree; nonzero only for the empty complex).
struct BettiVector {
  Field field = Field::rationals();
  std::vector<long> dims;  // dims[i] = reduced Betti number in degree i-1

  long dim(int degree) const {
    const int i = degree + 1;
    return (i >= 0 && i < static_cast<int>(dims.size())) ? dims[i] : 0;
  }
  // Largest degree with nonzero cohomology, or -2 when everything vanishes.
  int top_degree() const;
  std::string str() const;

  friend bool operator==(const BettiVector& a, const BettiVector& b);
  friend bool operator!=(const BettiVector& a, const BettiVector& b) { return !(a == b); }
};

// Boundary matrices of the augmented chain complex; entry d is
// boundary_d : C_d -> C_{d-1}, with d = 0 the augmentation row.
std::vector<ExactMatrix> boundary_matrices(const SimplicialComplex& k,
                                           std::size_t max_faces = 2'000'000);

// Reduced (co)homology dimensions over the field; over a field these agree,
// so the ranks are computed once from the boundary matrices.
BettiVector reduced_betti(const SimplicialComplex& k, const Field& field,
                          std::size_t max_faces = 2'000'000);

// Order complex: vertices = poset elements, facets = maximal chains.
SimplicialComplex order_complex(const FinitePoset& p, std::vector<std::string> labels = {});

// Clique (flag) complex: facets = maximal cliques (Bron-Kerbosch).
SimplicialComplex clique_complex(const Graph& g, std::size_t max_cliques = 1'000'000);

struct ChordalResult {
  bool chordal = false;
  std::vector<int> elimination_order;  // perfect elimination order when chordal
  std::vector<int> induced_cycle;      // an induced cycle of length >= 4 otherwise
};

// Chordality via repeated removal of simplicial vertices; returns a perfect
// elimination ordering or an induced cycle of length at least 4.
ChordalResult is_chordal(const Graph& g);

// Cross-cut complex: vertices = maximal elements of p, simplices = subsets
// with a common lower bound. Requires every bounded subset to have a meet
// (checked on pairs; throws MeetHypothesisFails).
SimplicialComplex cross_cut_complex(const FinitePoset& p, std::vector<std::string> labels = {});

// Least d such that all induced subcomplexes have vanishing reduced
// cohomology in degrees >= d. Brute-force enumeration of the 2^|V| induced
// subcomplexes; the non-brute version short-circuits simplices (0) and flag
// complexes of chordal graphs (<= 1).
long leray_number(const SimplicialComplex& k, const Field& field, int max_vertices = 16);
long leray_number_brute(const SimplicialComplex& k, const Field& field, int max_vertices = 16);

}  // namespace lrb
