#include "qtorus/multipoly.hpp"

#include <sstream>
#include <stdexcept>

namespace qtorus {

MultiPoly MultiPoly::constant(int nvars, const Int& c) {
  MultiPoly p(nvars);
  if (c != 0) p.terms_[exp_zero(nvars)] = c;
  return p;
}

MultiPoly MultiPoly::variable(int nvars, int index, long power) {
  if (index < 0 || index >= nvars) throw std::out_of_range("variable index");
  if (power < 0) throw std::invalid_argument("polynomial exponent must be >= 0");
  MultiPoly p(nvars);
  ExpVec e = exp_zero(nvars);
  e[index] = power;
  p.terms_[e] = 1;
  return p;
}

MultiPoly MultiPoly::monomial(int nvars, const ExpVec& e, const Int& c) {
  MultiPoly p(nvars);
  if (e.size() != nvars) throw std::invalid_argument("monomial exponent length");
  for (Eigen::Index i = 0; i < e.size(); ++i)
    if (e[i] < 0) throw std::invalid_argument("polynomial exponent must be >= 0");
  if (c != 0) p.terms_[e] = c;
  return p;
}

bool MultiPoly::is_constant() const {
  if (terms_.empty()) return true;
  return terms_.size() == 1 && terms_.begin()->first.isZero();
}

const ExpVec& MultiPoly::leading_exponent() const {
  if (terms_.empty()) throw std::domain_error("leading term of zero polynomial");
  return terms_.rbegin()->first;
}

const Int& MultiPoly::leading_coefficient() const {
  if (terms_.empty()) throw std::domain_error("leading term of zero polynomial");
  return terms_.rbegin()->second;
}

long MultiPoly::total_degree() const {
  if (terms_.empty()) return -1;
  long d = 0;
  const ExpVec& e = leading_exponent();
  for (Eigen::Index i = 0; i < e.size(); ++i) d += e[i];
  return d;
}

long MultiPoly::degree_in(int var) const {
  long d = -1;
  for (const auto& [e, c] : terms_) d = std::max<long>(d, e[var]);
  return d;
}

void MultiPoly::add_term(const ExpVec& e, const Int& c) {
  if (c == 0) return;
  auto it = terms_.find(e);
  if (it == terms_.end()) {
    terms_.emplace(e, c);
  } else {
    it->second += c;
    if (it->second == 0) terms_.erase(it);
  }
}

MultiPoly MultiPoly::operator-() const {
  MultiPoly p(nvars_);
  for (const auto& [e, c] : terms_) p.terms_[e] = -c;
  return p;
}

MultiPoly MultiPoly::operator+(const MultiPoly& o) const {
  MultiPoly p = *this;
  for (const auto& [e, c] : o.terms_) p.add_term(e, c);
  return p;
}

MultiPoly MultiPoly::operator-(const MultiPoly& o) const {
  MultiPoly p = *this;
  for (const auto& [e, c] : o.terms_) p.add_term(e, -c);
  return p;
}

MultiPoly MultiPoly::operator*(const MultiPoly& o) const {
  MultiPoly p(nvars_);
  for (const auto& [e1, c1] : terms_)
    for (const auto& [e2, c2] : o.terms_) p.add_term(e1 + e2, c1 * c2);
  return p;
}

MultiPoly MultiPoly::operator*(const Int& c) const {
  MultiPoly p(nvars_);
  if (c == 0) return p;
  for (const auto& [e, k] : terms_) p.terms_[e] = k * c;
  return p;
}

bool MultiPoly::operator<(const MultiPoly& o) const {
  if (nvars_ != o.nvars_) return nvars_ < o.nvars_;
  auto it = terms_.begin(), jt = o.terms_.begin();
  GradedLexLess less;
  for (; it != terms_.end() && jt != o.terms_.end(); ++it, ++jt) {
    if (less(it->first, jt->first)) return true;
    if (less(jt->first, it->first)) return false;
    if (it->second != jt->second) return it->second < jt->second;
  }
  return terms_.size() < o.terms_.size();
}

Int MultiPoly::content() const {
  Int g = 0;
  for (const auto& [e, c] : terms_) g = gcd(g, c);
  return g;
}

std::string MultiPoly::to_string(const std::vector<std::string>& var_names) const {
  if (terms_.empty()) return "0";
  std::ostringstream out;
  bool first = true;
  // leading (graded-lex greatest) terms first
  for (auto it = terms_.rbegin(); it != terms_.rend(); ++it) {
    const auto& [e, c] = *it;
    Int a = c;
    if (first) {
      if (a < 0) {
        out << "-";
        a = -a;
      }
      first = false;
    } else {
      out << (a < 0 ? "-" : "+");
      if (a < 0) a = -a;
    }
    bool printed = false;
    if (a != 1 || e.isZero()) {
      out << a.get_str();
      printed = true;
    }
    for (Eigen::Index i = 0; i < e.size(); ++i) {
      if (e[i] == 0) continue;
      if (printed) out << "*";
      out << var_names[i];
      if (e[i] != 1) out << "^" << e[i];
      printed = true;
    }
  }
  return out.str();
}

MultiPoly divide_exact(const MultiPoly& a, const MultiPoly& b) {
  if (b.is_zero()) throw std::domain_error("division by zero polynomial");
  MultiPoly rem = a, quot(a.nvars());
  const ExpVec& lb = b.leading_exponent();
  const Int& cb = b.leading_coefficient();
  while (!rem.is_zero()) {
    const ExpVec la = rem.leading_exponent();
    ExpVec q = la - lb;
    bool ok = true;
    for (Eigen::Index i = 0; i < q.size(); ++i)
      if (q[i] < 0) ok = false;
    if (!ok || rem.leading_coefficient() % cb != 0)
      throw std::domain_error("polynomial division not exact");
    Int qc = rem.leading_coefficient() / cb;
    MultiPoly t = MultiPoly::monomial(a.nvars(), q, qc);
    quot = quot + t;
    rem = rem - t * b;
  }
  return quot;
}

namespace {

// Univariate view in the last variable: dense coefficient list whose entries
// are polynomials in the remaining nvars-1 variables.
std::vector<MultiPoly> to_univar(const MultiPoly& p) {
  const int n = p.nvars();
  std::vector<MultiPoly> coeffs(std::max<long>(p.degree_in(n - 1) + 1, 0), MultiPoly(n - 1));
  for (const auto& [e, c] : p.terms()) {
    ExpVec rest = e.head(n - 1);
    coeffs[e[n - 1]].add_term(rest, c);
  }
  return coeffs;
}

MultiPoly from_univar(const std::vector<MultiPoly>& coeffs, int nvars) {
  MultiPoly p(nvars);
  for (std::size_t d = 0; d < coeffs.size(); ++d)
    for (const auto& [e, c] : coeffs[d].terms()) {
      ExpVec full(nvars);
      full.head(nvars - 1) = e;
      full[nvars - 1] = static_cast<long>(d);
      p.add_term(full, c);
    }
  return p;
}

int univar_deg(const std::vector<MultiPoly>& f) {
  for (int d = static_cast<int>(f.size()) - 1; d >= 0; --d)
    if (!f[d].is_zero()) return d;
  return -1;
}

// Pseudo-remainder of f by g, univariate over the coefficient ring.
std::vector<MultiPoly> pseudo_rem(std::vector<MultiPoly> f, const std::vector<MultiPoly>& g) {
  int df = univar_deg(f), dg = univar_deg(g);
  const MultiPoly& lg = g[dg];
  while (df >= dg && df >= 0) {
    MultiPoly lf = f[df];
    for (auto& c : f) c = c * lg;
    for (int i = 0; i <= dg; ++i) f[i + df - dg] = f[i + df - dg] - g[i] * lf;
    int nd = univar_deg(f);
    if (nd >= df) throw std::logic_error("pseudo_rem: degree did not drop");
    df = nd;
  }
  return f;
}

MultiPoly univar_content(const std::vector<MultiPoly>& f, int sub_nvars) {
  MultiPoly g(sub_nvars);
  for (const auto& c : f) {
    if (c.is_zero()) continue;
    g = poly_gcd(g, c);
    if (g.is_constant() && !g.is_zero() && g.leading_coefficient() == 1) break;
  }
  return g;
}

std::vector<MultiPoly> univar_divide(const std::vector<MultiPoly>& f, const MultiPoly& c) {
  std::vector<MultiPoly> out;
  out.reserve(f.size());
  for (const auto& fc : f) out.push_back(fc.is_zero() ? fc : divide_exact(fc, c));
  return out;
}

MultiPoly normalize_sign(MultiPoly p) {
  if (!p.is_zero() && p.leading_coefficient() < 0) return -p;
  return p;
}

}  // namespace

MultiPoly poly_gcd(const MultiPoly& a, const MultiPoly& b) {
  if (a.nvars() != b.nvars()) throw std::invalid_argument("gcd of polynomials in different rings");
  if (a.is_zero()) return normalize_sign(b);
  if (b.is_zero()) return normalize_sign(a);
  const int n = a.nvars();
  if (n == 0 || a.is_constant() || b.is_constant()) {
    return MultiPoly::constant(n, gcd(a.content(), b.content()));
  }

  // Primitive PRS in the last variable.
  auto fa = to_univar(a), fb = to_univar(b);
  MultiPoly ca = univar_content(fa, n - 1), cb = univar_content(fb, n - 1);
  auto pa = univar_divide(fa, ca);
  auto pb = univar_divide(fb, cb);
  if (univar_deg(pa) < univar_deg(pb)) std::swap(pa, pb);
  while (univar_deg(pb) >= 0) {
    auto r = pseudo_rem(pa, pb);
    pa = pb;
    if (univar_deg(r) < 0) break;
    pb = univar_divide(r, univar_content(r, n - 1));
  }
  // primitive part of the last nonzero remainder, times the content gcd
  MultiPoly prim = from_univar(pa, n);
  auto fprim = to_univar(prim);
  prim = from_univar(univar_divide(fprim, univar_content(fprim, n - 1)), n);

  MultiPoly cont = poly_gcd(ca, cb);
  MultiPoly lifted_cont(n);
  for (const auto& [e, c] : cont.terms()) {
    ExpVec full(n);
    full.head(n - 1) = e;
    full[n - 1] = 0;
    lifted_cont.add_term(full, c);
  }
  return normalize_sign(prim * lifted_cont);
}

}  // namespace qtorus
