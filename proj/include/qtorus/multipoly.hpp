// Sparse multivariate polynomials over Z with exact gcd (primitive PRS).
// The fixed monomial order is graded lex; leading terms, sign normalization
// and canonical fraction reduction all refer to it.
#pragma once

#include "qtorus/numeric.hpp"

#include <map>
#include <string>
#include <vector>

namespace qtorus {

class MultiPoly {
 public:
  using TermMap = std::map<ExpVec, Int, GradedLexLess>;

  explicit MultiPoly(int nvars = 0) : nvars_(nvars) {}

  static MultiPoly constant(int nvars, const Int& c);
  static MultiPoly variable(int nvars, int index, long power = 1);
  static MultiPoly monomial(int nvars, const ExpVec& e, const Int& c);

  int nvars() const { return nvars_; }
  bool is_zero() const { return terms_.empty(); }
  bool is_constant() const;
  bool is_monomial() const { return terms_.size() == 1; }
  const TermMap& terms() const { return terms_; }
  std::size_t term_count() const { return terms_.size(); }

  // Leading data in graded lex order.
  const ExpVec& leading_exponent() const;
  const Int& leading_coefficient() const;
  long total_degree() const;
  long degree_in(int var) const;

  void add_term(const ExpVec& e, const Int& c);

  MultiPoly operator-() const;
  MultiPoly operator+(const MultiPoly& o) const;
  MultiPoly operator-(const MultiPoly& o) const;
  MultiPoly operator*(const MultiPoly& o) const;
  MultiPoly operator*(const Int& c) const;

  friend bool operator==(const MultiPoly& a, const MultiPoly& b) {
    return a.nvars_ == b.nvars_ && a.terms_ == b.terms_;
  }
  friend bool operator!=(const MultiPoly& a, const MultiPoly& b) { return !(a == b); }
  bool operator<(const MultiPoly& o) const;  // arbitrary total order for maps

  Int content() const;

  std::string to_string(const std::vector<std::string>& var_names) const;

 private:
  int nvars_;
  TermMap terms_;
};

// Exact division; throws std::domain_error if the division is not exact.
MultiPoly divide_exact(const MultiPoly& a, const MultiPoly& b);

// gcd with the sign normalized so the graded-lex leading coefficient is
// positive; gcd(0, 0) = 0.
MultiPoly poly_gcd(const MultiPoly& a, const MultiPoly& b);

}  // namespace qtorus
