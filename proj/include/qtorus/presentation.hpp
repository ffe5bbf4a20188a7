// A quantum torus presentation: rank n and the alternating Lambda-valued
// commutator pairing on Z^n, together with the structural algorithms that
// depend only on the pairing (center, simplicity, isotropic sublattices,
// annihilators).
#pragma once

#include "qtorus/lattice.hpp"
#include "qtorus/scalar_group.hpp"

#include <optional>
#include <vector>

namespace qtorus {

class QTorusPresentation {
 public:
  // Commutative presentation (pairing identically zero).
  QTorusPresentation(int rank, const ScalarGroup& group);

  int rank() const { return rank_; }
  const ScalarGroup& scalar_group() const { return group_; }

  // Sets lambda(e_i, e_j) and lambda(e_j, e_i) = -lambda(e_i, e_j).
  void set_pairing(int i, int j, const ScalarValue& v);

  ScalarValue pairing(int i, int j) const;

  // k-th free coordinate of the pairing as an n x n integer matrix.
  const MatZ& free_component(int k) const { return free_[k]; }
  const MatZ& torsion_component() const { return torsion_; }

  friend bool operator==(const QTorusPresentation& a, const QTorusPresentation& b) {
    return a.rank_ == b.rank_ && a.group_ == b.group_ && a.free_ == b.free_ &&
           a.torsion_ == b.torsion_;
  }
  friend bool operator!=(const QTorusPresentation& a, const QTorusPresentation& b) {
    return !(a == b);
  }

 private:
  int rank_;
  ScalarGroup group_;
  std::vector<MatZ> free_;  // one n x n skew matrix per free generator of Lambda
  MatZ torsion_;            // n x n, entries mod m (kept in [0, m))
};

// lambda(a, b) = sum_{i,j} a_i b_j lambda(e_i, e_j); bilinear and alternating.
ScalarValue pairing_eval(const QTorusPresentation& p, const ExpVec& a, const ExpVec& b);

// { a : lambda(a, b) = 0 for all b }. Monomials with exponent in the radical
// are exactly the central monomials; for m > 0 the congruence conditions are
// folded in, so the result need not be saturated.
Sublattice radical(const QTorusPresentation& p);

// Center exactly F, i.e. trivial radical.
bool is_simple(const QTorusPresentation& p);

// The subgroup of Lambda generated by all pairing values, as a canonical
// row lattice in Z^(d+1) (last coordinate = torsion, with m*e_last folded
// in) or Z^d when m = 0. Elementary divisors via elementary_divisors().
Sublattice derived_unit_subgroup(const QTorusPresentation& p);

std::vector<Int> elementary_divisors(const MatZ& basis);

bool is_isotropic(const QTorusPresentation& p, const Sublattice& b);

// Depth-first search for an isotropic sublattice of the given rank whose
// basis entries are bounded by coeff_bound. none-found is not a proof of
// nonexistence.
std::optional<Sublattice> isotropic_search(const QTorusPresentation& p, int target_rank,
                                           long coeff_bound);

// As above, but collects up to `limit` distinct isotropic sublattices.
std::vector<Sublattice> isotropic_enumerate(const QTorusPresentation& p, int target_rank,
                                            long coeff_bound, int limit);

// ann(B) = { phi in A* : <phi, B> = 0 }, a rational subspace given by
// rref-canonical rows; dim = n - rk(B).
MatQ ann_subgroup(const Sublattice& b);

// ann(V) = { a in A : <V, a> = 0 }, the saturated sublattice annihilating V.
// ann_subspace(ann_subgroup(B)) is the saturation of B.
Sublattice ann_subspace(const MatQ& v_rows, int ambient_rank);

}  // namespace qtorus
