#pragma once

#include <array>
#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "lrb/errors.hpp"
#include "lrb/graph.hpp"

namespace lrb {

// Default bound on the number of elements of any constructed monoid; keeps
// Cayley tables at a sane memory footprint.
inline constexpr std::size_t kDefaultMaxElements = 5000;

// A finite left regular band: a monoid whose multiplication table satisfies
// x*x = x and x*y*x = x*y. Elements are dense indices 0..n-1.
struct Lrb {
  int identity = 0;
  std::vector<std::vector<int>> table;  // table[x][y] = xy
  std::vector<std::string> names;       // optional, size n when present

  int size() const { return static_cast<int>(table.size()); }
  int mul(int x, int y) const { return table[x][y]; }
  std::string label(int x) const {
    if (x < static_cast<int>(names.size()) && !names[x].empty()) return names[x];
    return "e" + std::to_string(x);
  }
};

// Checks all monoid and left-regular-band axioms; error codes name a witness.
// Throws InvalidInput with code BadIdentity / NotIdempotent / NotLeftRegular /
// NotAssociative.
Lrb validate_lrb(std::vector<std::vector<int>> table, int identity,
                 std::vector<std::string> names = {});

// Runs the validate_lrb checks on an already-built Lrb.
void check_lrb(const Lrb& b);

// Finite poset on indices 0..count-1.
struct FinitePoset {
  int count = 0;
  std::vector<std::vector<bool>> leq;          // leq[x][y] iff x <= y
  std::vector<std::pair<int, int>> hasse;      // cover pairs (lower, upper)

  bool less(int x, int y) const { return x != y && leq[x][y]; }
  std::vector<int> upper_covers(int x) const;
  std::vector<int> lower_covers(int x) const;
  std::vector<int> maximal_elements() const;
};

// Builds a poset from a reflexive order relation, checking the axioms and
// computing the transitive reduction.
FinitePoset make_poset(std::vector<std::vector<bool>> leq);

// Green's R-order on B: x <= y iff yx = x. The identity is the maximum.
FinitePoset r_order(const Lrb& b);

// The lattice of principal left ideals Ba ordered by inclusion, with the
// support map sigma(a) = Ba. Lattice elements are indexed 0..count-1 in a
// deterministic order (decreasing ideal size, then lexicographic witness).
struct SupportLattice {
  int count = 0;
  std::vector<std::vector<bool>> leq_;          // leq_[X][Y] iff X <= Y
  std::vector<std::vector<int>> meet;           // meet table
  std::vector<int> sigma;                       // element index -> lattice index
  int top = 0;                                  // sigma(identity), the ideal B
  int bottom = 0;                               // the minimal ideal
  std::vector<std::vector<int>> witness;        // sorted element sets Ba
  std::vector<int> rep;                         // least element of each sigma-fiber

  bool leq(int x, int y) const { return leq_[x][y]; }
  bool less(int x, int y) const { return x != y && leq_[x][y]; }
  FinitePoset poset() const;
};

// Computes Lambda(B). Verifies sigma(xy) = sigma(x) ^ sigma(y) and
// (xy = x iff sigma(y) >= sigma(x)) on the whole table.
SupportLattice support_lattice(const Lrb& b);

// Length of the longest chain in the lattice (|C| - 1).
int lambda_chain_length(const SupportLattice& lat);

// A submonoid together with its embedding into the ambient monoid.
struct SubmonoidMap {
  Lrb sub;
  std::vector<int> embed;  // sub element index -> ambient element index
};

// The interval submonoid B[X,Y] for X <= Y: with a the least-index element of
// support Y, the monoid { ab : sigma(ab) >= X } with identity a. Throws
// NotComparable when X is not below Y.
SubmonoidMap interval_submonoid(const Lrb& b, const SupportLattice& lat, int X, int Y);

// Closure of gens together with the identity under the product.
SubmonoidMap submonoid_generated(const Lrb& b, const std::vector<int>& gens);

struct GeometricCheck {
  bool geometric = false;
  // when !geometric: a together with b,c >= a such that bc != cb
  std::optional<std::array<int, 3>> witness;
};

// B is geometric when every up-set a^ = {b : b >= a} is commutative.
GeometricCheck is_geometric(const Lrb& b);

// B is right hereditary when the Hasse diagram of the R-order is a tree,
// i.e. every non-identity element has exactly one upper cover.
bool is_right_hereditary(const Lrb& b);

// Graph on the maximal elements of B \ {1}; edge (a,b) iff ab = ba.
// Throws InvalidInput("TrivialMonoid") when B = {1}.
Graph commutation_graph(const Lrb& b);

// Reorders elements by (longest-chain rank below the identity in the R-order,
// then name); the identity lands at index 0. Serialization uses this order.
Lrb canonicalize(const Lrb& b);

// True when the two monoids are isomorphic via a name-preserving bijection.
bool equal_as_labeled(const Lrb& a, const Lrb& b);

// Searches for an isomorphism (backtracking; intended for small monoids).
bool is_isomorphic(const Lrb& a, const Lrb& b);

}  // namespace lrb
