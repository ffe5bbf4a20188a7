// The coefficient field: reduced fractions of integer multivariate
// polynomials. nvars = 0 gives exactly Q; nvars = d gives Q(t_1, ..., t_d).
// Canonical form: gcd(num, den) = 1 including integer content, den has
// positive graded-lex leading coefficient, zero is 0/1. Equality is
// representational equality of the canonical form.
#pragma once

#include "qtorus/multipoly.hpp"

#include <string>
#include <vector>

namespace qtorus {

class RatFunc {
 public:
  explicit RatFunc(int nvars = 0)
      : num_(MultiPoly(nvars)), den_(MultiPoly::constant(nvars, 1)) {}
  RatFunc(MultiPoly num, MultiPoly den);

  static RatFunc from_rat(int nvars, const Rat& r);
  static RatFunc from_int(int nvars, const Int& k) { return from_rat(nvars, Rat(k)); }
  static RatFunc variable(int nvars, int index);

  int nvars() const { return num_.nvars(); }
  const MultiPoly& num() const { return num_; }
  const MultiPoly& den() const { return den_; }

  bool is_zero() const { return num_.is_zero(); }
  bool is_one() const;
  bool is_rational() const { return num_.is_constant() && den_.is_constant(); }
  Rat to_rat() const;  // throws unless is_rational()

  RatFunc operator-() const;
  RatFunc operator+(const RatFunc& o) const;
  RatFunc operator-(const RatFunc& o) const;
  RatFunc operator*(const RatFunc& o) const;
  RatFunc operator/(const RatFunc& o) const;
  RatFunc inverse() const;
  RatFunc pow(long e) const;

  RatFunc& operator+=(const RatFunc& o) { return *this = *this + o; }
  RatFunc& operator-=(const RatFunc& o) { return *this = *this - o; }
  RatFunc& operator*=(const RatFunc& o) { return *this = *this * o; }
  RatFunc& operator/=(const RatFunc& o) { return *this = *this / o; }

  // Substitute t_i -> lambda_i * t_i (lambda_i nonzero rationals).
  RatFunc scale_vars(const std::vector<Rat>& lambda) const;

  friend bool operator==(const RatFunc& a, const RatFunc& b) {
    return a.num_ == b.num_ && a.den_ == b.den_;
  }
  friend bool operator!=(const RatFunc& a, const RatFunc& b) { return !(a == b); }
  bool operator<(const RatFunc& o) const {
    if (num_ != o.num_) return num_ < o.num_;
    return den_ < o.den_;
  }

  std::string to_string(const std::vector<std::string>& var_names) const;

 private:
  void reduce();

  MultiPoly num_, den_;
};

}  // namespace qtorus
