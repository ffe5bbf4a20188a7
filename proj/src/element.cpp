#include "qtorus/element.hpp"

#include <cctype>
#include <random>
#include <sstream>
#include <stdexcept>

namespace qtorus {

namespace {

bool is_prime_long(long p) {
  if (p < 2) return false;
  Int z(p);
  return mpz_probab_prime_p(z.get_mpz_t(), 40) != 0;
}

long to_long(const Int& z) {
  if (!z.fits_slong_p()) throw std::overflow_error("exponent too large for embedding");
  return mpz_get_si(z.get_mpz_t());
}

}  // namespace

ScalarEmbedding ScalarEmbedding::primes(const std::vector<long>& ps) {
  ScalarEmbedding e;
  e.kind = Kind::Rational;
  for (std::size_t i = 0; i < ps.size(); ++i) {
    if (!is_prime_long(ps[i]))
      throw std::invalid_argument("embedding images must be distinct primes");
    for (std::size_t j = 0; j < i; ++j)
      if (ps[i] == ps[j]) throw std::invalid_argument("embedding images must be distinct primes");
    e.rational_images.emplace_back(ps[i]);
  }
  return e;
}

ScalarEmbedding ScalarEmbedding::symbols(const std::vector<std::string>& names) {
  ScalarEmbedding e;
  e.kind = Kind::Symbolic;
  for (std::size_t i = 0; i < names.size(); ++i) {
    if (names[i].empty() || !std::isalpha(static_cast<unsigned char>(names[i][0])))
      throw std::invalid_argument("coefficient symbol must start with a letter");
    if (names[i][0] == 'u')
      throw std::invalid_argument("coefficient symbols may not start with 'u'");
    for (std::size_t j = 0; j < i; ++j)
      if (names[i] == names[j]) throw std::invalid_argument("duplicate coefficient symbol");
  }
  e.symbol_names = names;
  return e;
}

TorusAlgebra::TorusAlgebra(QTorusPresentation pres, ScalarEmbedding emb)
    : pres_(std::move(pres)), emb_(std::move(emb)) {
  if (emb_.free_rank() != pres_.scalar_group().free_rank)
    throw std::invalid_argument("embedding images do not match the scalar group rank");
  long m = pres_.scalar_group().torsion_modulus;
  if (m > 2)
    throw std::invalid_argument(
        "roots of unity beyond a sign are unsupported in concrete coefficients");
  if (emb_.kind == ScalarEmbedding::Kind::Symbolic) coeff_names_ = emb_.symbol_names;
}

RatFunc TorusAlgebra::embed(const ScalarValue& v) const {
  const int nv = nvars();
  RatFunc out = RatFunc::from_rat(nv, 1);
  for (int k = 0; k < emb_.free_rank(); ++k) {
    long e = to_long(v.free_part()[k]);
    if (e == 0) continue;
    if (emb_.kind == ScalarEmbedding::Kind::Symbolic)
      out = out * RatFunc::variable(nv, k).pow(e);
    else
      out = out * RatFunc::from_rat(nv, emb_.rational_images[k]).pow(e);
  }
  if (pres_.scalar_group().torsion_modulus == 2 && v.torsion_part() % 2 != 0)
    out = -out;
  return out;
}

AlgebraPtr make_algebra(QTorusPresentation pres, ScalarEmbedding emb) {
  return std::make_shared<const TorusAlgebra>(std::move(pres), std::move(emb));
}

TorusElement TorusElement::one(AlgebraPtr alg) {
  TorusElement x(alg);
  x.add_term(exp_zero(alg->rank()), alg->coeff_one());
  return x;
}

TorusElement TorusElement::monomial(AlgebraPtr alg, const ExpVec& e, const RatFunc& c) {
  TorusElement x(alg);
  x.add_term(e, c);
  return x;
}

TorusElement TorusElement::monomial(AlgebraPtr alg, const ExpVec& e) {
  RatFunc c = alg->coeff_one();
  return monomial(std::move(alg), e, c);
}

TorusElement TorusElement::generator(AlgebraPtr alg, int i) {
  int n = alg->rank();
  if (i < 0 || i >= n) throw std::out_of_range("generator index");
  return monomial(std::move(alg), exp_unit(n, i));
}

RatFunc TorusElement::coeff(const ExpVec& e) const {
  auto it = terms_.find(e);
  if (it == terms_.end()) return RatFunc(alg_->nvars());
  return it->second;
}

void TorusElement::add_term(const ExpVec& e, const RatFunc& c) {
  if (e.size() != alg_->rank()) throw std::invalid_argument("exponent length mismatch");
  if (c.is_zero()) return;
  auto it = terms_.find(e);
  if (it == terms_.end()) {
    terms_.emplace(e, c);
  } else {
    it->second += c;
    if (it->second.is_zero()) terms_.erase(it);
  }
}

void TorusElement::check_same(const TorusElement& o) const {
  if (*alg_ != *o.alg_) throw std::invalid_argument("elements of different algebras");
}

TorusElement TorusElement::operator-() const {
  TorusElement x(alg_);
  for (const auto& [e, c] : terms_) x.terms_.emplace(e, -c);
  return x;
}

TorusElement TorusElement::operator+(const TorusElement& o) const {
  check_same(o);
  TorusElement x = *this;
  for (const auto& [e, c] : o.terms_) x.add_term(e, c);
  return x;
}

TorusElement TorusElement::operator-(const TorusElement& o) const {
  check_same(o);
  TorusElement x = *this;
  for (const auto& [e, c] : o.terms_) x.add_term(e, -c);
  return x;
}

TorusElement TorusElement::operator*(const TorusElement& o) const {
  check_same(o);
  const QTorusPresentation& p = alg_->presentation();
  const int n = p.rank();
  TorusElement x(alg_);
  for (const auto& [m1, c1] : terms_)
    for (const auto& [m2, c2] : o.terms_) {
      // prod_{j>i} q_ji^(m1_j * m2_i)
      ScalarValue w(p.scalar_group());
      for (int j = 1; j < n; ++j)
        for (int i = 0; i < j; ++i) {
          Int f = Int(m1[j]) * Int(m2[i]);
          if (f != 0) w = w + p.pairing(j, i) * f;
        }
      x.add_term(m1 + m2, c1 * c2 * alg_->embed(w));
    }
  return x;
}

TorusElement TorusElement::operator*(const RatFunc& c) const {
  TorusElement x(alg_);
  if (c.is_zero()) return x;
  for (const auto& [e, k] : terms_) x.terms_.emplace(e, k * c);
  return x;
}

TorusElement monomial_inverse(const AlgebraPtr& alg, const ExpVec& m) {
  const QTorusPresentation& p = alg->presentation();
  const int n = p.rank();
  ScalarValue w(p.scalar_group());
  for (int j = 1; j < n; ++j)
    for (int i = 0; i < j; ++i) {
      Int f = Int(m[j]) * Int(m[i]);
      if (f != 0) w = w + p.pairing(j, i) * f;
    }
  return TorusElement::monomial(alg, -m, alg->embed(w));
}

std::optional<std::pair<RatFunc, ExpVec>> is_unit(const TorusElement& x) {
  if (x.term_count() != 1) return std::nullopt;
  const auto& [e, c] = *x.terms().begin();
  return std::make_pair(c, e);
}

RatFunc monomial_commutator(const AlgebraPtr& alg, const ExpVec& a, const ExpVec& b) {
  return alg->embed(pairing_eval(alg->presentation(), a, b));
}

std::vector<ExpVec> support(const TorusElement& x) {
  std::vector<ExpVec> out;
  out.reserve(x.term_count());
  for (const auto& [e, c] : x.terms()) out.push_back(e);
  return out;
}

TorusElement initial_form(const TorusElement& x, const VecQ& phi) {
  if (x.is_zero()) throw std::invalid_argument("initial form of zero");
  if (phi.size() != x.algebra()->rank()) throw std::invalid_argument("character length mismatch");
  bool have = false;
  Rat best;
  for (const auto& [e, c] : x.terms()) {
    Rat v = 0;
    for (Eigen::Index i = 0; i < phi.size(); ++i) v += phi[i] * Rat(static_cast<long>(e[i]));
    if (!have || v < best) {
      best = v;
      have = true;
    }
  }
  TorusElement out(x.algebra());
  for (const auto& [e, c] : x.terms()) {
    Rat v = 0;
    for (Eigen::Index i = 0; i < phi.size(); ++i) v += phi[i] * Rat(static_cast<long>(e[i]));
    if (v == best) out.add_term(e, c);
  }
  return out;
}

bool cocycle_check_with(const AlgebraPtr& alg, int trials, unsigned seed, const TauFn& tau) {
  std::mt19937 rng(seed);
  std::uniform_int_distribution<long> coord(-4, 4);
  const int n = alg->rank();
  for (int t = 0; t < trials; ++t) {
    ExpVec a1(n), a2(n), a3(n);
    for (int i = 0; i < n; ++i) {
      a1[i] = coord(rng);
      a2[i] = coord(rng);
      a3[i] = coord(rng);
    }
    RatFunc lhs = tau(alg, a1, a2) * tau(alg, a1 + a2, a3);
    RatFunc rhs = tau(alg, a2, a3) * tau(alg, a1, a2 + a3);
    if (lhs != rhs) return false;
  }
  return true;
}

bool cocycle_check(const AlgebraPtr& alg, int trials, unsigned seed) {
  TauFn tau = [](const AlgebraPtr& a, const ExpVec& x, const ExpVec& y) {
    TorusElement prod = TorusElement::monomial(a, x) * TorusElement::monomial(a, y);
    return prod.coeff(x + y);
  };
  return cocycle_check_with(alg, trials, seed, tau);
}

AlgebraPtr tensor_algebra(const AlgebraPtr& a1, const AlgebraPtr& a2) {
  const QTorusPresentation& p1 = a1->presentation();
  const QTorusPresentation& p2 = a2->presentation();
  if (p1.scalar_group() != p2.scalar_group())
    throw std::invalid_argument("tensor: incompatible scalar groups");
  if (a1->embedding() != a2->embedding())
    throw std::invalid_argument("tensor: incompatible embeddings");
  const int n1 = p1.rank(), n2 = p2.rank();
  QTorusPresentation p(n1 + n2, p1.scalar_group());
  for (int i = 0; i < n1; ++i)
    for (int j = i + 1; j < n1; ++j) p.set_pairing(i, j, p1.pairing(i, j));
  for (int i = 0; i < n2; ++i)
    for (int j = i + 1; j < n2; ++j) p.set_pairing(n1 + i, n1 + j, p2.pairing(i, j));
  return make_algebra(std::move(p), a1->embedding());
}

// ---- canonical text form ----

std::string TorusElement::to_string() const {
  if (terms_.empty()) return "0";
  std::ostringstream out;
  const auto& names = alg_->coeff_names();
  bool first = true;
  for (const auto& [e, c] : terms_) {
    bool neg = c.num().leading_coefficient() < 0;
    RatFunc a = neg ? -c : c;
    if (first) {
      if (neg) out << "-";
      first = false;
    } else {
      out << (neg ? "-" : "+");
    }
    std::string cs = a.to_string(names);
    bool has_mono = !e.isZero();
    if (!has_mono) {
      out << cs;
      continue;
    }
    if (!a.is_one()) out << cs << "*";
    bool started = false;
    for (Eigen::Index i = 0; i < e.size(); ++i) {
      if (e[i] == 0) continue;
      if (started) out << "*";
      out << "u" << (i + 1);
      if (e[i] != 1) out << "^" << e[i];
      started = true;
    }
  }
  return out.str();
}

namespace {

// Small recursive-descent expression parser. Identifiers are u-generators or
// coefficient symbols; +, -, *, /, ^ and parentheses with the usual
// precedence. Division requires an invertible divisor (unit monomial).
class ElementParser {
 public:
  ElementParser(AlgebraPtr alg, const std::string& text) : alg_(std::move(alg)), s_(text) {}

  TorusElement parse() {
    TorusElement x = sum();
    skip_ws();
    if (pos_ != s_.size()) fail("trailing input");
    return x;
  }

 private:
  [[noreturn]] void fail(const std::string& msg) const {
    throw std::invalid_argument("parse error at position " + std::to_string(pos_) + ": " + msg);
  }
  void skip_ws() {
    while (pos_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[pos_]))) ++pos_;
  }
  bool eat(char c) {
    skip_ws();
    if (pos_ < s_.size() && s_[pos_] == c) {
      ++pos_;
      return true;
    }
    return false;
  }
  char peek() {
    skip_ws();
    return pos_ < s_.size() ? s_[pos_] : '\0';
  }

  TorusElement sum() {
    TorusElement x = eat('-') ? -product() : (eat('+'), product());
    for (;;) {
      if (eat('+'))
        x = x + product();
      else if (eat('-'))
        x = x - product();
      else
        return x;
    }
  }

  TorusElement product() {
    TorusElement x = factor();
    for (;;) {
      if (eat('*')) {
        x = x * factor();
      } else if (eat('/')) {
        TorusElement d = factor();
        auto u = is_unit(d);
        if (!u || u->first.is_zero()) fail("division by a non-unit");
        x = x * monomial_inverse(alg_, u->second) * u->first.inverse();
      } else {
        return x;
      }
    }
  }

  TorusElement factor() {
    TorusElement base = atom();
    if (eat('^')) {
      long e = integer();
      if (e >= 0) {
        TorusElement acc = TorusElement::one(alg_);
        for (long k = 0; k < e; ++k) acc = acc * base;
        return acc;
      }
      auto u = is_unit(base);
      if (!u) fail("negative power of a non-unit");
      TorusElement inv = monomial_inverse(alg_, u->second) * u->first.inverse();
      TorusElement acc = TorusElement::one(alg_);
      for (long k = 0; k < -e; ++k) acc = acc * inv;
      return acc;
    }
    return base;
  }

  TorusElement atom() {
    skip_ws();
    if (eat('(')) {
      TorusElement x = sum();
      if (!eat(')')) fail("expected ')'");
      return x;
    }
    if (eat('-')) return -atom();
    char c = peek();
    if (std::isdigit(static_cast<unsigned char>(c))) {
      Int n = natural();
      if (eat('/')) {
        // a rational constant; denominator must be a natural number here
        skip_ws();
        if (!std::isdigit(static_cast<unsigned char>(peek()))) {
          // oops: this '/' belongs to the product level (e.g. "2/(q)") --
          // back up one char and return the integer.
          --pos_;
          return TorusElement::one(alg_) * RatFunc::from_rat(alg_->nvars(), Rat(n));
        }
        Int d = natural();
        Rat r(n, d);
        r.canonicalize();
        return TorusElement::one(alg_) * RatFunc::from_rat(alg_->nvars(), r);
      }
      return TorusElement::one(alg_) * RatFunc::from_rat(alg_->nvars(), Rat(n));
    }
    if (std::isalpha(static_cast<unsigned char>(c))) {
      std::string id = identifier();
      if (id.size() > 1 && id[0] == 'u' && std::isdigit(static_cast<unsigned char>(id[1]))) {
        int idx = std::stoi(id.substr(1));
        if (idx < 1 || idx > alg_->rank()) fail("generator index out of range: " + id);
        return TorusElement::generator(alg_, idx - 1);
      }
      const auto& names = alg_->coeff_names();
      for (std::size_t i = 0; i < names.size(); ++i)
        if (names[i] == id)
          return TorusElement::one(alg_) * RatFunc::variable(alg_->nvars(), static_cast<int>(i));
      fail("unknown symbol: " + id);
    }
    fail("expected a term");
  }

  Int natural() {
    skip_ws();
    std::size_t start = pos_;
    while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) ++pos_;
    if (start == pos_) fail("expected a number");
    return Int(s_.substr(start, pos_ - start));
  }

  long integer() {
    skip_ws();
    bool neg = eat('-');
    Int n = natural();
    if (!n.fits_slong_p()) fail("exponent too large");
    long v = mpz_get_si(n.get_mpz_t());
    return neg ? -v : v;
  }

  std::string identifier() {
    skip_ws();
    std::size_t start = pos_;
    while (pos_ < s_.size() && (std::isalnum(static_cast<unsigned char>(s_[pos_])) ||
                                s_[pos_] == '_'))
      ++pos_;
    return s_.substr(start, pos_ - start);
  }

  AlgebraPtr alg_;
  const std::string& s_;
  std::size_t pos_ = 0;
};

}  // namespace

TorusElement parse_element(const AlgebraPtr& alg, const std::string& text) {
  return ElementParser(alg, text).parse();
}

}  // namespace qtorus
