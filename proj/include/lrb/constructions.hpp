#pragma once

#include <cstddef>
#include <string>
#include <vector>

#include "lrb/exact_matrix.hpp"
#include "lrb/graph.hpp"
#include "lrb/lrb.hpp"

namespace lrb {

// ---------------------------------------------------------------------------
// auxiliary input structures

// A finite lattice given by its order and meet table, with a top element.
struct FiniteLattice {
  int count = 0;
  std::vector<std::string> names;
  std::vector<std::vector<bool>> leq;
  std::vector<std::vector<int>> meet;
  int top = 0;

  std::string label(int x) const;

  // Verifies the poset axioms, that `meet` computes greatest lower bounds and
  // that `top` is the maximum.
  void check() const;

  static FiniteLattice chain(int length_plus_one);   // k elements, top first
  // Power set of the given names ordered by reverse inclusion (meet = union);
  // the top is the empty set.
  static FiniteLattice power_set(const std::vector<std::string>& names);
  // Quotient of power_set(n names) gluing all subsets of size n-1 and n.
  static FiniteLattice glued_boolean(int n);
};

// Acyclic quiver: vertices plus labeled arrows, and an optional total order
// on the vertices with s(a) before t(a) for every arrow (computed when empty).
struct Quiver {
  std::vector<std::string> vertices;
  struct Arrow {
    int source = 0;
    int target = 0;
    std::string label;
  };
  std::vector<Arrow> arrows;
  std::vector<int> order;  // vertex indices, smallest first; may be empty

  // Returns the vertex order, validating it (BadOrder / NotAcyclic).
  std::vector<int> checked_order() const;
};

// ---------------------------------------------------------------------------
// constructions

// Free left regular band on the alphabet: all injective words, product =
// concatenate then delete repeated letters left to right.
Lrb free_lrb(const std::vector<std::string>& alphabet,
             std::size_t max_elements = kDefaultMaxElements);

// Free partially commutative left regular band B(G): generators are the
// vertices, adjacent vertices commute. Elements are pairs (support W, acyclic
// orientation of the complement graph induced on W).
Lrb free_partially_commutative(const Graph& g,
                               std::size_t max_elements = kDefaultMaxElements);

// Number of acyclic orientations of g (used for minimal-ideal checks).
std::size_t count_acyclic_orientations(const Graph& g);

// Face monoid from an explicit covector list over {0,+,-} (or over
// {0,+,-,i,j} when complex_alphabet). The list must contain the all-zero
// vector and be closed under the left-priority composition.
Lrb face_monoid_from_covectors(const std::vector<std::string>& covectors,
                               bool complex_alphabet = false);

// Face monoid of the central arrangement with the given normal vectors:
// enumerates all sign vectors whose open/closed system is feasible, by exact
// rational Fourier-Motzkin elimination.
Lrb face_monoid_from_normals(const std::vector<std::vector<Rational>>& normals,
                             int max_hyperplanes = 10);

// Decides feasibility of one sign vector for the given normals.
bool sign_vector_feasible(const std::vector<std::vector<Rational>>& normals,
                          const std::string& signs);

// The n-fold power of the five-element band {0,+,-,i,j} underlying complex
// arrangements, with its entrywise product.
Lrb complex_sign_monoid(int n, std::size_t max_elements = kDefaultMaxElements);

// Karnofsky-Rhodes expansion of the lattice L with respect to the generators:
// all reduced words (strictly decreasing prefix values) with product
// "concatenate and erase non-transitions".
Lrb karnofsky_rhodes(const FiniteLattice& lattice,
                     const std::vector<std::pair<std::string, int>>& generators,
                     std::size_t max_elements = kDefaultMaxElements);

// Rhodes expansion of the lattice: chains through the top with product
// X * Y = X union (min X)Y, repetitions removed.
Lrb rhodes_expansion(const FiniteLattice& lattice,
                     std::size_t max_elements = kDefaultMaxElements);

// The left regular band of paths of an acyclic quiver; its monoid algebra is
// the path algebra of the quiver. Identity = stationary path at the least
// vertex.
Lrb quiver_lrb(const Quiver& q, std::size_t max_elements = kDefaultMaxElements);

// Componentwise product monoid.
Lrb direct_product(const Lrb& a, const Lrb& b,
                   std::size_t max_elements = kDefaultMaxElements);

// A finite lattice viewed as a (commutative) left regular band under meet,
// with the top as identity.
Lrb lattice_as_lrb(const FiniteLattice& lattice);

}  // namespace lrb
