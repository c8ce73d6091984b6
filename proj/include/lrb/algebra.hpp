#pragma once

#include <string>
#include <utility>
#include <vector>

#include "lrb/constructions.hpp"
#include "lrb/exact_matrix.hpp"
#include "lrb/field.hpp"
#include "lrb/lrb.hpp"

namespace lrb {

// Element of the monoid algebra: integer coordinates in the basis B. The
// recursively defined idempotents have integer coefficients, and products of
// integral elements stay integral, so identities over any coefficient field
// are checked by reducing integral coordinates.
struct AlgebraElement {
  std::vector<Int> coeff;

  static AlgebraElement zero(int size) { return {std::vector<Int>(static_cast<std::size_t>(size))}; }
  static AlgebraElement basis(int size, int element);
};

AlgebraElement algebra_mul(const Lrb& b, const AlgebraElement& x, const AlgebraElement& y);
AlgebraElement algebra_add(const AlgebraElement& x, const AlgebraElement& y);
AlgebraElement algebra_sub(const AlgebraElement& x, const AlgebraElement& y);
bool algebra_is_zero(const AlgebraElement& x, const Field& field);
bool algebra_equal(const AlgebraElement& x, const AlgebraElement& y, const Field& field);

// The complete orthogonal idempotent system e_X = f_X (1 - sum_{Y<X} e_Y)
// with f_X the chosen representative of each support class.
struct IdempotentSystem {
  std::vector<int> rep;              // lattice index -> representative f_X
  std::vector<AlgebraElement> e;     // lattice index -> e_X
};

// Computes and verifies the idempotent system: e_X^2 = e_X, e_X e_Y = 0 for
// X != Y, sum e_X = 1, and b e_X = 0 whenever sigma(b) is not above X.
// Throws VerificationFailed if any identity fails (unreachable on a valid
// band). Representatives default to the least element of each fiber.
IdempotentSystem idempotents(const Lrb& b, const SupportLattice& lat, const Field& field,
                             std::vector<int> representatives = {});

struct BasisCheckResult {
  bool ok = false;
  std::string detail;
};

// {b e_sigma(b)} is a basis of idempotents: each member squares to itself and
// the change of basis from B is invertible (unitriangular in any R-order
// compatible listing).
BasisCheckResult idempotent_basis_check(const Lrb& b, const SupportLattice& lat,
                                        const Field& field);

struct SchutzenbergerReport {
  bool ok = false;
  std::vector<long> fiber_sizes;  // |L_X| per lattice index
  std::string detail;
};

// |B| = sum |L_X|, and b -> b e_X intertwines the contracted action on the
// fiber L_X with left multiplication on the algebra, checked on all pairs.
SchutzenbergerReport schutzenberger_check(const Lrb& b, const SupportLattice& lat,
                                          const Field& field);

// Cohomology of the normalized bar complex of B_{>=X} with coefficients
// twisted by Y: the independent route to the Ext dimensions. Returns dims for
// degrees 0..max_degree; all zero when Y is not above X. Throws
// ResourceLimit("TooLarge") when a needed coboundary exceeds the entry
// budget.
std::vector<long> bar_ext(const Lrb& b, const SupportLattice& lat, int X, int Y,
                          const Field& field, int max_degree,
                          std::size_t budget = 2'000'000);

struct OracleCell {
  int X = 0;
  int Y = 0;
  int requested_degree = 0;
  int checked_degree = -1;           // degrees 0..checked_degree compared
  std::vector<long> bar;             // bar-resolution route
  std::vector<long> simplicial;      // order-complex route
  bool agree = true;
  bool truncated = false;            // budget cut the requested degree
};

struct OracleReport {
  Field field = Field::rationals();
  int max_degree = 0;
  std::size_t budget = 0;
  std::vector<OracleCell> cells;
  long mismatches = 0;
  long truncated = 0;

  bool all_agree() const { return mismatches == 0; }
};

// Runs both Ext routes on every lattice pair, comparing entrywise up to
// max_degree (or as far as the budget allows, recorded per cell). A mismatch
// is reported, never reconciled.
OracleReport oracle_crosscheck(const Lrb& b, const Field& field, int max_degree = -1,
                               std::size_t budget = 2'000'000);

// The path-algebra embedding of the quiver band: the images of the paths are
// linearly independent, so the band spans the whole path algebra.
bool quiver_embedding_independent(const Quiver& q, const Field& field);

}  // namespace lrb
