// Exact normal-form arithmetic in the quantum torus: elements are finite
// maps exponent vector -> coefficient, multiplication is the bilinear
// extension of
//     u^m * u^m' = prod_{j>i} q_ji^(m_j * m'_i) u^(m+m')
// which fixes the cocycle of the twisted group algebra concretely.
#pragma once

#include "qtorus/presentation.hpp"
#include "qtorus/ratfunc.hpp"

#include <map>
#include <memory>
#include <optional>
#include <string>
#include <vector>

namespace qtorus {

struct ScalarEmbedding {
  enum class Kind { Rational, Symbolic };

  Kind kind = Kind::Symbolic;
  std::vector<Rat> rational_images;       // distinct primes, Kind::Rational
  std::vector<std::string> symbol_names;  // Kind::Symbolic

  static ScalarEmbedding primes(const std::vector<long>& ps);
  static ScalarEmbedding symbols(const std::vector<std::string>& names);

  int free_rank() const {
    return static_cast<int>(kind == Kind::Rational ? rational_images.size()
                                                   : symbol_names.size());
  }
  int nvars() const { return kind == Kind::Symbolic ? free_rank() : 0; }

  friend bool operator==(const ScalarEmbedding& a, const ScalarEmbedding& b) {
    return a.kind == b.kind && a.rational_images == b.rational_images &&
           a.symbol_names == b.symbol_names;
  }
  friend bool operator!=(const ScalarEmbedding& a, const ScalarEmbedding& b) {
    return !(a == b);
  }
};

// Presentation plus a concrete embedding of the scalar group into the
// coefficient field. Torsion beyond a sign (m > 2) stays pairing-only and is
// rejected here.
class TorusAlgebra {
 public:
  TorusAlgebra(QTorusPresentation pres, ScalarEmbedding emb);

  const QTorusPresentation& presentation() const { return pres_; }
  const ScalarEmbedding& embedding() const { return emb_; }
  int rank() const { return pres_.rank(); }
  int nvars() const { return emb_.nvars(); }
  const std::vector<std::string>& coeff_names() const { return coeff_names_; }

  RatFunc embed(const ScalarValue& v) const;
  RatFunc coeff_one() const { return RatFunc::from_rat(nvars(), 1); }

  friend bool operator==(const TorusAlgebra& a, const TorusAlgebra& b) {
    return a.pres_ == b.pres_ && a.emb_ == b.emb_;
  }
  friend bool operator!=(const TorusAlgebra& a, const TorusAlgebra& b) { return !(a == b); }

 private:
  QTorusPresentation pres_;
  ScalarEmbedding emb_;
  std::vector<std::string> coeff_names_;
};

using AlgebraPtr = std::shared_ptr<const TorusAlgebra>;

AlgebraPtr make_algebra(QTorusPresentation pres, ScalarEmbedding emb);

class TorusElement {
 public:
  using TermMap = std::map<ExpVec, RatFunc, ExpLexLess>;

  explicit TorusElement(AlgebraPtr alg) : alg_(std::move(alg)) {}

  static TorusElement zero(AlgebraPtr alg) { return TorusElement(std::move(alg)); }
  static TorusElement one(AlgebraPtr alg);
  static TorusElement monomial(AlgebraPtr alg, const ExpVec& e, const RatFunc& c);
  static TorusElement monomial(AlgebraPtr alg, const ExpVec& e);
  static TorusElement generator(AlgebraPtr alg, int i);

  const AlgebraPtr& algebra() const { return alg_; }
  const TermMap& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  std::size_t term_count() const { return terms_.size(); }
  RatFunc coeff(const ExpVec& e) const;

  void add_term(const ExpVec& e, const RatFunc& c);

  TorusElement operator-() const;
  TorusElement operator+(const TorusElement& o) const;
  TorusElement operator-(const TorusElement& o) const;
  TorusElement operator*(const TorusElement& o) const;
  TorusElement operator*(const RatFunc& c) const;

  friend bool operator==(const TorusElement& a, const TorusElement& b) {
    return *a.alg_ == *b.alg_ && a.terms_ == b.terms_;
  }
  friend bool operator!=(const TorusElement& a, const TorusElement& b) { return !(a == b); }

  std::string to_string() const;

 private:
  void check_same(const TorusElement& o) const;

  AlgebraPtr alg_;
  TermMap terms_;
};

// (u^m)^{-1} = mu(m) u^{-m} with mu(m) = prod_{j>i} q_ji^(m_j m_i).
TorusElement monomial_inverse(const AlgebraPtr& alg, const ExpVec& m);

// The (coefficient, exponent) decomposition iff x is a single term.
std::optional<std::pair<RatFunc, ExpVec>> is_unit(const TorusElement& x);

// [u^a, u^b] as a coefficient-field value; equals the embedding of
// pairing_eval(a, b).
RatFunc monomial_commutator(const AlgebraPtr& alg, const ExpVec& a, const ExpVec& b);

std::vector<ExpVec> support(const TorusElement& x);

// Sum of the terms whose exponent minimizes phi over the support; throws on
// x = 0.
TorusElement initial_form(const TorusElement& x, const VecQ& phi);

// Verifies the 2-cocycle identity
//   tau(a1,a2) tau(a1+a2,a3) = tau(a2,a3) tau(a1,a2+a3)
// on random exponent triples with entries in [-4, 4], where tau is read off
// the normal-form product. An associativity self-test by construction.
bool cocycle_check(const AlgebraPtr& alg, int trials, unsigned seed = 12345);

// Test hook: same check against an arbitrary tau.
using TauFn = std::function<RatFunc(const AlgebraPtr&, const ExpVec&, const ExpVec&)>;
bool cocycle_check_with(const AlgebraPtr& alg, int trials, unsigned seed, const TauFn& tau);

// Block-diagonal presentation of the tensor product algebra on A1 (+) A2.
AlgebraPtr tensor_algebra(const AlgebraPtr& a1, const AlgebraPtr& a2);

// Parser for the canonical element grammar (sums of coeff*u-monomial terms;
// the coefficient grammar is the rational / rational-function one).
TorusElement parse_element(const AlgebraPtr& alg, const std::string& text);

}  // namespace qtorus
