// Integer-lattice linear algebra: Hermite and Smith normal forms, kernels,
// saturation, intersections, and exact rational row reduction.
//
// Conventions. Lattices are row lattices: an r x n matrix stores a basis as
// rows. The canonical representative of a sublattice is its row Hermite
// normal form with positive pivots, entries above a pivot reduced into
// [0, pivot), and zero rows dropped; equal sublattices have equal HNFs.
#pragma once

#include "qtorus/numeric.hpp"

#include <optional>
#include <vector>

namespace qtorus {

// Row Hermite normal form (zero rows removed).
MatZ hermite_normal_form(const MatZ& a);

// H = U * A with U unimodular; H in row HNF including zero rows at the
// bottom. Returns {H, U}.
std::pair<MatZ, MatZ> hermite_with_transform(const MatZ& a);

struct SmithResult {
  MatZ s;  // diagonal, d_i >= 0, d_i | d_{i+1}
  MatZ u;  // unimodular, rows(a) x rows(a)
  MatZ v;  // unimodular, cols(a) x cols(a);  u * a * v = s
};
SmithResult smith_normal_form(const MatZ& a);

// Rows spanning { x : x * a = 0 }. Always saturated.
MatZ left_kernel_lattice(const MatZ& a);

int lattice_rank(const MatZ& a);

// Smallest sublattice containing `b` whose quotient is torsion-free.
MatZ saturate(const MatZ& b, int ambient);

MatZ lattice_sum(const MatZ& a, const MatZ& b);
MatZ lattice_intersect(const MatZ& a, const MatZ& b, int ambient);

bool lattice_contains(const MatZ& basis, const VecZ& v);
bool lattice_subset(const MatZ& a, const MatZ& b);

Int det_bareiss(MatZ a);

// Solutions of x * a = b over the integers (row-vector unknowns).
struct LinSolveZ {
  bool solvable = false;
  VecZ particular;  // one solution
  MatZ kernel;      // rows span { x : x * a = 0 }
};
LinSolveZ solve_left_integer(const MatZ& a, const VecZ& b);

// Reduce v modulo the row lattice of `basis` (need not be square): the
// canonical coset representative under HNF pivot reduction.
VecZ reduce_mod_lattice(const VecZ& v, const MatZ& basis);

// ---- exact rational linear algebra ----

// Reduced row echelon form, canonical (pivots 1, pivot columns cleared,
// zero rows dropped). Row spaces are equal iff their rrefs are equal.
MatQ rref(const MatQ& a);

int rank_q(const MatQ& a);

// Rows spanning { x : a * x = 0 } (the right kernel), rref-canonical.
MatQ right_kernel_rows(const MatQ& a);

// Clear denominators row-wise and divide by content: each row becomes a
// primitive integer vector with the same span direction.
MatZ primitive_rows(const MatQ& a);
VecZ primitive_vector(const VecQ& v);

MatQ to_matq(const MatZ& a);

// A fixed deterministic family of unimodular matrices (identity plus
// elementary shears with entries in [-2, 2]); used to widen sublattice
// test sets beyond the coordinate ones.
std::vector<MatZ> unimodular_test_set(int n);

class Sublattice {
 public:
  Sublattice() = default;
  Sublattice(int ambient, const MatZ& generators)
      : ambient_(ambient), basis_(hermite_normal_form(generators)) {}

  static Sublattice full(int ambient_rank);
  static Sublattice zero(int ambient_rank);
  static Sublattice span_of(int ambient, const std::vector<VecZ>& gens);

  int ambient_rank() const { return ambient_; }
  int rank() const { return static_cast<int>(basis_.rows()); }
  const MatZ& basis() const { return basis_; }
  bool is_zero() const { return basis_.rows() == 0; }
  bool is_full() const;

  bool contains(const VecZ& v) const { return lattice_contains(basis_, v); }
  bool contains(const Sublattice& other) const;

  Sublattice saturation() const { return Sublattice(ambient_, saturate(basis_, ambient_)); }
  Sublattice sum(const Sublattice& other) const;
  Sublattice intersect(const Sublattice& other) const;

  friend bool operator==(const Sublattice& a, const Sublattice& b) {
    return a.ambient_ == b.ambient_ && a.basis_ == b.basis_;
  }
  friend bool operator!=(const Sublattice& a, const Sublattice& b) { return !(a == b); }

 private:
  int ambient_ = 0;
  MatZ basis_;  // HNF rows
};

}  // namespace qtorus
