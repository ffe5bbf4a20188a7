#include "qtorus/ratfunc.hpp"

#include <stdexcept>

namespace qtorus {

RatFunc::RatFunc(MultiPoly num, MultiPoly den) : num_(std::move(num)), den_(std::move(den)) {
  if (num_.nvars() != den_.nvars())
    throw std::invalid_argument("rational function: mixed variable counts");
  if (den_.is_zero()) throw std::domain_error("rational function: zero denominator");
  reduce();
}

RatFunc RatFunc::from_rat(int nvars, const Rat& r) {
  RatFunc f(nvars);
  f.num_ = MultiPoly::constant(nvars, Int(r.get_num()));
  f.den_ = MultiPoly::constant(nvars, Int(r.get_den()));
  return f;  // already canonical: gmp keeps p/q reduced with q > 0
}

RatFunc RatFunc::variable(int nvars, int index) {
  RatFunc f(nvars);
  f.num_ = MultiPoly::variable(nvars, index);
  return f;
}

bool RatFunc::is_one() const {
  return num_.is_constant() && den_.is_constant() && !num_.is_zero() &&
         num_.leading_coefficient() == den_.leading_coefficient();
}

Rat RatFunc::to_rat() const {
  if (!is_rational()) throw std::domain_error("rational function is not a constant");
  Int n = num_.is_zero() ? Int(0) : num_.leading_coefficient();
  Rat r(n, den_.leading_coefficient());
  r.canonicalize();
  return r;
}

void RatFunc::reduce() {
  if (num_.is_zero()) {
    den_ = MultiPoly::constant(num_.nvars(), 1);
    return;
  }
  MultiPoly g = poly_gcd(num_, den_);
  if (!(g.is_constant() && g.leading_coefficient() == 1)) {
    num_ = divide_exact(num_, g);
    den_ = divide_exact(den_, g);
  }
  if (den_.leading_coefficient() < 0) {
    num_ = -num_;
    den_ = -den_;
  }
}

RatFunc RatFunc::operator-() const {
  RatFunc f(nvars());
  f.num_ = -num_;
  f.den_ = den_;
  return f;
}

RatFunc RatFunc::operator+(const RatFunc& o) const {
  return RatFunc(num_ * o.den_ + o.num_ * den_, den_ * o.den_);
}

RatFunc RatFunc::operator-(const RatFunc& o) const {
  return RatFunc(num_ * o.den_ - o.num_ * den_, den_ * o.den_);
}

RatFunc RatFunc::operator*(const RatFunc& o) const {
  return RatFunc(num_ * o.num_, den_ * o.den_);
}

RatFunc RatFunc::operator/(const RatFunc& o) const {
  if (o.is_zero()) throw std::domain_error("division by zero");
  return RatFunc(num_ * o.den_, den_ * o.num_);
}

RatFunc RatFunc::inverse() const {
  if (is_zero()) throw std::domain_error("inverse of zero");
  return RatFunc(den_, num_);
}

RatFunc RatFunc::pow(long e) const {
  if (e == 0) return from_rat(nvars(), 1);
  RatFunc base = e < 0 ? inverse() : *this;
  long k = e < 0 ? -e : e;
  RatFunc acc = from_rat(nvars(), 1);
  while (k > 0) {
    if (k & 1) acc = acc * base;
    base = base * base;
    k >>= 1;
  }
  return acc;
}

namespace {

// p with t_i -> lambda_i t_i, returned as (integer polynomial, denominator):
// scaled = poly / den with den > 0.
std::pair<MultiPoly, Int> scale_poly(const MultiPoly& p, const std::vector<Rat>& lambda) {
  Int den = 1;
  std::vector<Rat> coeffs;
  std::vector<ExpVec> exps;
  for (const auto& [e, c] : p.terms()) {
    Rat f(c);
    for (Eigen::Index i = 0; i < e.size(); ++i) {
      if (e[i] == 0) continue;
      Rat li = lambda[i];
      if (li == 0) throw std::invalid_argument("variable scale must be nonzero");
      for (long k = 0; k < e[i]; ++k) f *= li;
    }
    coeffs.push_back(f);
    exps.push_back(e);
    den = lcm(den, Int(f.get_den()));
  }
  MultiPoly out(p.nvars());
  for (std::size_t i = 0; i < coeffs.size(); ++i) {
    Rat scaled = coeffs[i] * Rat(den);
    out.add_term(exps[i], Int(scaled.get_num()));
  }
  return {out, den};
}

}  // namespace

RatFunc RatFunc::scale_vars(const std::vector<Rat>& lambda) const {
  if (static_cast<int>(lambda.size()) != nvars())
    throw std::invalid_argument("scale_vars: wrong number of scales");
  auto [n, dn] = scale_poly(num_, lambda);
  auto [d, dd] = scale_poly(den_, lambda);
  return RatFunc(n * dd, d * dn);
}

std::string RatFunc::to_string(const std::vector<std::string>& var_names) const {
  if (is_rational()) return rat_to_string(to_rat());
  std::string n = num_.to_string(var_names);
  if (den_.is_constant() && den_.leading_coefficient() == 1) {
    if (num_.is_monomial()) return n;
    return "(" + n + ")";
  }
  return "(" + n + ")/(" + den_.to_string(var_names) + ")";
}

}  // namespace qtorus
