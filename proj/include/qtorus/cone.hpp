// Rational polyhedral cones in A* with both descriptions kept consistent:
// generators (nonnegative rational span, primitive integer rows) and the
// dual half-space form { x : E x = 0, A x >= 0 }. Conversion is exact and
// intended for desk scale (ambient dimension <= 6).
#pragma once

#include "qtorus/lattice.hpp"

#include <limits>
#include <string>
#include <vector>

namespace qtorus {

class RationalCone {
 public:
  // { x : eqs * x = 0, ineqs * x >= 0 }; generator description derived.
  static RationalCone from_hrep(int ambient, const MatQ& eqs, const MatQ& ineqs);
  static RationalCone subspace(int ambient, const MatQ& span_rows);
  static RationalCone zero(int ambient);
  static RationalCone full(int ambient);

  int ambient() const { return ambient_; }
  const MatZ& generators() const { return gens_; }
  const MatZ& equalities() const { return eqs_; }
  const MatZ& inequalities() const { return ineqs_; }

  int dim() const;
  bool is_zero_cone() const { return gens_.rows() == 0; }

  bool contains(const VecQ& x) const;
  bool contains_cone(const RationalCone& o) const;

  // Row space of the generators, rref-canonical; the linear span.
  MatQ span() const;

  RationalCone intersect(const RationalCone& o) const;

  // Block product: this in the first n1 coordinates, o in the last n2.
  RationalCone product(const RationalCone& o) const;

  // `cone: gens=[(1,0);(0,1)]`
  std::string to_line() const;

  friend bool operator==(const RationalCone& a, const RationalCone& b) {
    return a.ambient_ == b.ambient_ && a.gens_ == b.gens_;
  }

 private:
  RationalCone() = default;
  void rebuild_from_hrep(const MatQ& eqs, const MatQ& ineqs);

  int ambient_ = 0;
  MatZ gens_;   // primitive integer rows, sorted; lineality appears as +/- pairs
  MatZ eqs_;    // primitive integer rows, canonical
  MatZ ineqs_;  // primitive integer rows, deduplicated
};

class RationalFan {
 public:
  explicit RationalFan(int ambient) : ambient_(ambient) {}

  int ambient() const { return ambient_; }
  const std::vector<RationalCone>& cones() const { return cones_; }
  bool empty() const { return cones_.empty(); }

  void add(RationalCone c);
  // Drop cones contained in another; sort canonically (deterministic dumps).
  void reduce();

  bool contains(const VecQ& x) const;

  friend bool operator==(const RationalFan& a, const RationalFan& b) {
    return a.ambient_ == b.ambient_ && a.cones_ == b.cones_;
  }

 private:
  int ambient_;
  std::vector<RationalCone> cones_;
};

// Max cone dimension; kEmptyFanDimension for a fan with no cones.
inline constexpr int kEmptyFanDimension = std::numeric_limits<int>::min();
int fan_dimension(const RationalFan& f);

}  // namespace qtorus
