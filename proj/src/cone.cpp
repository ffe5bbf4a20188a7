#include "qtorus/cone.hpp"

#include <algorithm>
#include <functional>
#include <sstream>
#include <stdexcept>

namespace qtorus {

namespace {

bool row_lex_less(const MatZ& m, Eigen::Index a, Eigen::Index b) {
  for (Eigen::Index j = 0; j < m.cols(); ++j) {
    if (m(a, j) != m(b, j)) return m(a, j) < m(b, j);
  }
  return false;
}

MatZ sort_rows(const MatZ& m) {
  std::vector<Eigen::Index> idx(m.rows());
  for (Eigen::Index i = 0; i < m.rows(); ++i) idx[i] = i;
  std::sort(idx.begin(), idx.end(), [&](Eigen::Index a, Eigen::Index b) {
    return row_lex_less(m, a, b);
  });
  idx.erase(std::unique(idx.begin(), idx.end(),
                        [&](Eigen::Index a, Eigen::Index b) {
                          return !row_lex_less(m, a, b) && !row_lex_less(m, b, a);
                        }),
            idx.end());
  MatZ out(idx.size(), m.cols());
  for (std::size_t i = 0; i < idx.size(); ++i) out.row(i) = m.row(idx[i]);
  return out;
}

// Enumerate the extreme rays of the pointed cone { z : a z >= 0 } in
// dimension p by scanning (p-1)-subsets of constraint rows.
std::vector<VecQ> pointed_rays(const MatQ& a, int p) {
  std::vector<VecQ> rays;
  if (p == 0) return rays;
  auto feasible = [&](const VecQ& v) {
    for (Eigen::Index i = 0; i < a.rows(); ++i) {
      Rat s = 0;
      for (Eigen::Index j = 0; j < p; ++j) s += a(i, j) * v[j];
      if (s < 0) return false;
    }
    return true;
  };
  auto push_unique = [&](const VecQ& v) {
    VecZ prim = primitive_vector(v);
    VecQ canon(p);
    for (int j = 0; j < p; ++j) canon[j] = Rat(prim[j]);
    for (const VecQ& r : rays)
      if (r == canon) return;
    rays.push_back(canon);
  };
  if (p == 1) {
    VecQ v(1);
    v[0] = 1;
    if (feasible(v)) push_unique(v);
    v[0] = -1;
    if (feasible(v)) push_unique(v);
    return rays;
  }
  const int m = static_cast<int>(a.rows());
  std::vector<int> comb(p - 1);
  std::function<void(int, int)> rec = [&](int start, int k) {
    if (k == p - 1) {
      MatQ sub(p - 1, p);
      for (int i = 0; i < p - 1; ++i) sub.row(i) = a.row(comb[i]);
      MatQ ker = right_kernel_rows(sub);
      if (ker.rows() != 1) return;
      VecQ v = ker.row(0).transpose();
      if (feasible(v)) push_unique(v);
      VecQ w = -v;
      if (feasible(w)) push_unique(w);
      return;
    }
    for (int i = start; i < m; ++i) {
      comb[k] = i;
      rec(i + 1, k + 1);
    }
  };
  rec(0, 0);
  return rays;
}

}  // namespace

void RationalCone::rebuild_from_hrep(const MatQ& eqs, const MatQ& ineqs) {
  const int n = ambient_;
  // Restrict to the solution space of the equalities.
  MatQ nullspace = (eqs.rows() == 0) ? MatQ(MatQ::Identity(n, n))
                                     : right_kernel_rows(eqs);  // rows span ker
  const int s = static_cast<int>(nullspace.rows());
  // Inequalities in restricted coordinates: row_i . (y * nullspace).
  MatQ a_restr(ineqs.rows(), s);
  for (Eigen::Index i = 0; i < ineqs.rows(); ++i)
    for (int j = 0; j < s; ++j) {
      Rat v = 0;
      for (int k = 0; k < n; ++k) v += ineqs(i, k) * nullspace(j, k);
      a_restr(i, j) = v;
    }
  // Lineality inside the restricted space.
  MatQ lin = (a_restr.rows() == 0) ? MatQ(MatQ::Identity(s, s)) : right_kernel_rows(a_restr);
  // Complement coordinates: non-pivot columns of rref(lin).
  std::vector<bool> is_pivot(s, false);
  for (Eigen::Index i = 0; i < lin.rows(); ++i) {
    Eigen::Index c = 0;
    while (c < s && lin(i, c) == 0) ++c;
    if (c < s) is_pivot[c] = true;
  }
  std::vector<int> comp;
  for (int j = 0; j < s; ++j)
    if (!is_pivot[j]) comp.push_back(j);
  const int p = static_cast<int>(comp.size());
  MatQ a_comp(a_restr.rows(), p);
  for (Eigen::Index i = 0; i < a_restr.rows(); ++i)
    for (int j = 0; j < p; ++j) a_comp(i, j) = a_restr(i, comp[j]);

  std::vector<VecQ> gens;
  for (Eigen::Index i = 0; i < lin.rows(); ++i) {  // +/- lineality directions
    VecQ y = lin.row(i).transpose();
    gens.push_back(y);
    gens.push_back(-y);
  }
  for (const VecQ& z : pointed_rays(a_comp, p)) {
    VecQ y = VecQ::Zero(s);
    for (int j = 0; j < p; ++j) y[comp[j]] = z[j];
    gens.push_back(y);
  }

  MatZ g(gens.size(), n);
  for (std::size_t i = 0; i < gens.size(); ++i) {
    VecQ x = VecQ::Zero(n);
    for (int k = 0; k < n; ++k)
      for (int j = 0; j < s; ++j) x[k] += gens[i][j] * nullspace(j, k);
    g.row(i) = primitive_vector(x).transpose();
  }
  gens_ = sort_rows(g);

  eqs_ = primitive_rows(rref(eqs));
  // Deduplicate inequalities; drop ones implied as equalities of the span.
  MatZ iq = ineqs.rows() == 0 ? MatZ(0, n) : primitive_rows(ineqs);
  eqs_ = sort_rows(eqs_);
  ineqs_ = sort_rows(iq);
}

RationalCone RationalCone::from_hrep(int ambient, const MatQ& eqs, const MatQ& ineqs) {
  RationalCone c;
  c.ambient_ = ambient;
  c.rebuild_from_hrep(eqs, ineqs);
  return c;
}

RationalCone RationalCone::subspace(int ambient, const MatQ& span_rows) {
  // { x : N x = 0 } for N the kernel of the span.
  MatQ ker = span_rows.rows() == 0 ? MatQ(MatQ::Identity(ambient, ambient))
                                   : right_kernel_rows(span_rows);
  return from_hrep(ambient, ker, MatQ(0, ambient));
}

RationalCone RationalCone::zero(int ambient) {
  return from_hrep(ambient, MatQ::Identity(ambient, ambient), MatQ(0, ambient));
}

RationalCone RationalCone::full(int ambient) {
  return from_hrep(ambient, MatQ(0, ambient), MatQ(0, ambient));
}

int RationalCone::dim() const {
  if (gens_.rows() == 0) return 0;
  return lattice_rank(gens_);
}

bool RationalCone::contains(const VecQ& x) const {
  for (Eigen::Index i = 0; i < eqs_.rows(); ++i) {
    Rat s = 0;
    for (Eigen::Index j = 0; j < x.size(); ++j) s += Rat(eqs_(i, j)) * x[j];
    if (s != 0) return false;
  }
  for (Eigen::Index i = 0; i < ineqs_.rows(); ++i) {
    Rat s = 0;
    for (Eigen::Index j = 0; j < x.size(); ++j) s += Rat(ineqs_(i, j)) * x[j];
    if (s < 0) return false;
  }
  return true;
}

bool RationalCone::contains_cone(const RationalCone& o) const {
  for (Eigen::Index i = 0; i < o.gens_.rows(); ++i) {
    VecQ x(ambient_);
    for (int j = 0; j < ambient_; ++j) x[j] = Rat(o.gens_(i, j));
    if (!contains(x)) return false;
  }
  return true;
}

MatQ RationalCone::span() const { return rref(to_matq(gens_)); }

RationalCone RationalCone::intersect(const RationalCone& o) const {
  if (ambient_ != o.ambient_) throw std::invalid_argument("cone intersect: ambient mismatch");
  MatQ eqs(eqs_.rows() + o.eqs_.rows(), ambient_);
  eqs.topRows(eqs_.rows()) = to_matq(eqs_);
  eqs.bottomRows(o.eqs_.rows()) = to_matq(o.eqs_);
  MatQ ineqs(ineqs_.rows() + o.ineqs_.rows(), ambient_);
  ineqs.topRows(ineqs_.rows()) = to_matq(ineqs_);
  ineqs.bottomRows(o.ineqs_.rows()) = to_matq(o.ineqs_);
  return from_hrep(ambient_, eqs, ineqs);
}

RationalCone RationalCone::product(const RationalCone& o) const {
  const int n1 = ambient_, n2 = o.ambient_, n = n1 + n2;
  auto embed = [&](const MatZ& m, bool first) {
    MatQ out = MatQ::Zero(m.rows(), n);
    for (Eigen::Index i = 0; i < m.rows(); ++i)
      for (Eigen::Index j = 0; j < m.cols(); ++j)
        out(i, first ? j : n1 + j) = Rat(m(i, j));
    return out;
  };
  MatQ eqs(eqs_.rows() + o.eqs_.rows(), n);
  eqs.topRows(eqs_.rows()) = embed(eqs_, true);
  eqs.bottomRows(o.eqs_.rows()) = embed(o.eqs_, false);
  MatQ ineqs(ineqs_.rows() + o.ineqs_.rows(), n);
  ineqs.topRows(ineqs_.rows()) = embed(ineqs_, true);
  ineqs.bottomRows(o.ineqs_.rows()) = embed(o.ineqs_, false);
  return from_hrep(n, eqs, ineqs);
}

std::string RationalCone::to_line() const {
  std::ostringstream out;
  out << "cone: gens=[";
  for (Eigen::Index i = 0; i < gens_.rows(); ++i) {
    if (i > 0) out << ";";
    out << "(";
    for (Eigen::Index j = 0; j < gens_.cols(); ++j) {
      if (j > 0) out << ",";
      out << gens_(i, j).get_str();
    }
    out << ")";
  }
  out << "]";
  return out.str();
}

void RationalFan::add(RationalCone c) {
  if (c.ambient() != ambient_) throw std::invalid_argument("fan: ambient mismatch");
  cones_.push_back(std::move(c));
}

void RationalFan::reduce() {
  std::vector<RationalCone> kept;
  for (std::size_t i = 0; i < cones_.size(); ++i) {
    bool dominated = false;
    for (std::size_t j = 0; j < cones_.size() && !dominated; ++j) {
      if (i == j) continue;
      if (!cones_[j].contains_cone(cones_[i])) continue;
      // contained; keep only if equal and i < j (stable dedupe)
      if (cones_[i].contains_cone(cones_[j]))
        dominated = j < i;
      else
        dominated = true;
    }
    if (!dominated) kept.push_back(cones_[i]);
  }
  std::sort(kept.begin(), kept.end(), [](const RationalCone& a, const RationalCone& b) {
    if (a.dim() != b.dim()) return a.dim() < b.dim();
    return a.to_line() < b.to_line();
  });
  kept.erase(std::unique(kept.begin(), kept.end(),
                         [](const RationalCone& a, const RationalCone& b) { return a == b; }),
             kept.end());
  cones_ = std::move(kept);
}

bool RationalFan::contains(const VecQ& x) const {
  for (const RationalCone& c : cones_)
    if (c.contains(x)) return true;
  return false;
}

int fan_dimension(const RationalFan& f) {
  if (f.empty()) return kEmptyFanDimension;
  int d = 0;
  for (const RationalCone& c : f.cones()) d = std::max(d, c.dim());
  return d;
}

}  // namespace qtorus
