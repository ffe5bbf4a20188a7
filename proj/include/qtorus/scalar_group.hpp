// The exponent group Lambda = Z^d (+) Z/m housing commutator scalars
// multiplicatively: a value q^(z1,...,zd) * zeta^e is stored as the integer
// vector (z1,...,zd) plus e mod m. d generators are declared multiplicatively
// independent; m = 0 means no root-of-unity part.
#pragma once

#include "qtorus/numeric.hpp"

#include <stdexcept>

namespace qtorus {

struct ScalarGroup {
  int free_rank = 0;       // d >= 0
  long torsion_modulus = 0;  // 0, or m >= 2

  ScalarGroup() = default;
  ScalarGroup(int d, long m) : free_rank(d), torsion_modulus(m) {
    if (d < 0) throw std::invalid_argument("scalar group: free rank must be >= 0");
    if (m != 0 && m < 2) throw std::invalid_argument("scalar group: torsion modulus must be 0 or >= 2");
  }

  friend bool operator==(const ScalarGroup& a, const ScalarGroup& b) {
    return a.free_rank == b.free_rank && a.torsion_modulus == b.torsion_modulus;
  }
  friend bool operator!=(const ScalarGroup& a, const ScalarGroup& b) { return !(a == b); }
};

class ScalarValue {
 public:
  ScalarValue() = default;
  explicit ScalarValue(const ScalarGroup& g)
      : group_(g), free_(VecZ::Zero(g.free_rank)), torsion_(0) {}
  ScalarValue(const ScalarGroup& g, VecZ free_part, Int torsion_part = 0)
      : group_(g), free_(std::move(free_part)), torsion_(std::move(torsion_part)) {
    if (free_.size() != group_.free_rank)
      throw std::invalid_argument("scalar value: free part has wrong length");
    normalize();
  }

  const ScalarGroup& group() const { return group_; }
  const VecZ& free_part() const { return free_; }
  const Int& torsion_part() const { return torsion_; }

  bool is_zero() const { return free_.isZero() && torsion_ == 0; }

  ScalarValue operator-() const {
    return ScalarValue(group_, -free_, -torsion_);
  }
  ScalarValue operator+(const ScalarValue& o) const {
    check(o);
    return ScalarValue(group_, free_ + o.free_, torsion_ + o.torsion_);
  }
  ScalarValue operator-(const ScalarValue& o) const { return *this + (-o); }
  ScalarValue operator*(const Int& k) const {
    return ScalarValue(group_, free_ * k, torsion_ * k);
  }

  friend bool operator==(const ScalarValue& a, const ScalarValue& b) {
    return a.group_ == b.group_ && a.free_ == b.free_ && a.torsion_ == b.torsion_;
  }
  friend bool operator!=(const ScalarValue& a, const ScalarValue& b) { return !(a == b); }

 private:
  void check(const ScalarValue& o) const {
    if (group_ != o.group_) throw std::invalid_argument("scalar values from different groups");
  }
  void normalize() {
    if (group_.torsion_modulus > 0) {
      Int m(group_.torsion_modulus);
      mpz_fdiv_r(torsion_.get_mpz_t(), torsion_.get_mpz_t(), m.get_mpz_t());
    } else {
      torsion_ = 0;
    }
  }

  ScalarGroup group_;
  VecZ free_;
  Int torsion_ = 0;
};

}  // namespace qtorus
