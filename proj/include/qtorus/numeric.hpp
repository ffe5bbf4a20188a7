// Exact scalar types and Eigen dense aliases used across the library.
//
// All arithmetic in this project is exact: integers are GMP mpz, rationals
// GMP mpq. Eigen matrices are used as containers and for expression-level
// sums/products; anything that would divide (LU, inverse, ...) is done by
// the free functions in lattice.hpp instead.
#pragma once

#include <gmpxx.h>

#include <Eigen/Core>

#include <cstdint>
#include <functional>
#include <string>

namespace Eigen {

template <> struct NumTraits<mpz_class> : GenericNumTraits<mpz_class> {
  using Real = mpz_class;
  using NonInteger = mpq_class;
  using Nested = mpz_class;
  using Literal = long;
  static inline Real epsilon() { return 0; }
  static inline Real dummy_precision() { return 0; }
  static inline int digits10() { return 0; }
  enum {
    IsInteger = 1,
    IsSigned = 1,
    IsComplex = 0,
    RequireInitialization = 1,
    ReadCost = 6,
    AddCost = 30,
    MulCost = 50
  };
};

template <> struct NumTraits<mpq_class> : GenericNumTraits<mpq_class> {
  using Real = mpq_class;
  using NonInteger = mpq_class;
  using Nested = mpq_class;
  using Literal = long;
  static inline Real epsilon() { return 0; }
  static inline Real dummy_precision() { return 0; }
  static inline int digits10() { return 0; }
  enum {
    IsInteger = 0,
    IsSigned = 1,
    IsComplex = 0,
    RequireInitialization = 1,
    ReadCost = 6,
    AddCost = 60,
    MulCost = 100
  };
};

}  // namespace Eigen

namespace qtorus {

using Int = mpz_class;
using Rat = mpq_class;

using MatZ = Eigen::Matrix<Int, Eigen::Dynamic, Eigen::Dynamic>;
using VecZ = Eigen::Matrix<Int, Eigen::Dynamic, 1>;
using MatQ = Eigen::Matrix<Rat, Eigen::Dynamic, Eigen::Dynamic>;
using VecQ = Eigen::Matrix<Rat, Eigen::Dynamic, 1>;

// Exponent vectors of monomials. Desk-scale exponents fit comfortably in
// 64 bits; lattice algorithms that can grow entries use Int instead.
using ExpVec = Eigen::Matrix<std::int64_t, Eigen::Dynamic, 1>;

struct ExpLexLess {
  bool operator()(const ExpVec& a, const ExpVec& b) const {
    if (a.size() != b.size()) return a.size() < b.size();
    for (Eigen::Index i = 0; i < a.size(); ++i)
      if (a[i] != b[i]) return a[i] < b[i];
    return false;
  }
};

// Graded lexicographic order: total degree first, then lex. Fixed monomial order
// for polynomial leading terms and canonical fraction normalization.
struct GradedLexLess {
  bool operator()(const ExpVec& a, const ExpVec& b) const {
    std::int64_t da = 0, db = 0;
    for (Eigen::Index i = 0; i < a.size(); ++i) da += a[i];
    for (Eigen::Index i = 0; i < b.size(); ++i) db += b[i];
    if (da != db) return da < db;
    return ExpLexLess{}(a, b);
  }
};

inline ExpVec exp_zero(int n) { return ExpVec::Zero(n); }

inline ExpVec exp_unit(int n, int i) {
  ExpVec e = ExpVec::Zero(n);
  e[i] = 1;
  return e;
}

inline VecZ to_vecz(const ExpVec& e) {
  VecZ v(e.size());
  for (Eigen::Index i = 0; i < e.size(); ++i) v[i] = Int(static_cast<long>(e[i]));
  return v;
}

inline ExpVec to_expvec(const VecZ& v) {
  ExpVec e(v.size());
  for (Eigen::Index i = 0; i < v.size(); ++i) e[i] = mpz_get_si(v[i].get_mpz_t());
  return e;
}

inline std::string rat_to_string(const Rat& r) {
  if (r.get_den() == 1) return r.get_num().get_str();
  return r.get_num().get_str() + "/" + r.get_den().get_str();
}

}  // namespace qtorus
