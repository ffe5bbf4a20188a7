#include "qtorus/lattice.hpp"

#include <algorithm>
#include <stdexcept>

namespace qtorus {

namespace {

// In-place row HNF of `a`, mirroring every row operation onto `u` when
// `u` is non-null. Returns the rank; echelon rows end up on top.
int hnf_inplace(MatZ& a, MatZ* u) {
  const Eigen::Index rows = a.rows(), cols = a.cols();
  Eigen::Index r = 0;
  for (Eigen::Index c = 0; c < cols && r < rows; ++c) {
    // Euclidean elimination below row r in column c.
    for (;;) {
      Eigen::Index piv = -1;
      for (Eigen::Index i = r; i < rows; ++i)
        if (a(i, c) != 0 && (piv < 0 || mpz_cmpabs(a(i, c).get_mpz_t(), a(piv, c).get_mpz_t()) < 0))
          piv = i;
      if (piv < 0) break;
      if (piv != r) {
        a.row(piv).swap(a.row(r));
        if (u) u->row(piv).swap(u->row(r));
      }
      if (a(r, c) < 0) {
        a.row(r) = -a.row(r);
        if (u) u->row(r) = -u->row(r);
      }
      bool clean = true;
      for (Eigen::Index i = r + 1; i < rows; ++i) {
        if (a(i, c) == 0) continue;
        Int q = a(i, c) / a(r, c);  // mpz truncation; remainder handled by loop
        if (q != 0) {
          a.row(i) -= q * a.row(r);
          if (u) u->row(i) -= q * u->row(r);
        }
        if (a(i, c) != 0) clean = false;
      }
      if (clean) break;
    }
    if (a(r, c) != 0) {
      // Reduce entries above the pivot into [0, pivot).
      for (Eigen::Index i = 0; i < r; ++i) {
        Int q;
        mpz_fdiv_q(q.get_mpz_t(), a(i, c).get_mpz_t(), a(r, c).get_mpz_t());
        if (q != 0) {
          a.row(i) -= q * a.row(r);
          if (u) u->row(i) -= q * u->row(r);
        }
      }
      ++r;
    }
  }
  return static_cast<int>(r);
}

}  // namespace

MatZ hermite_normal_form(const MatZ& a) {
  MatZ h = a;
  int r = hnf_inplace(h, nullptr);
  return h.topRows(r);
}

std::pair<MatZ, MatZ> hermite_with_transform(const MatZ& a) {
  MatZ h = a;
  MatZ u = MatZ::Identity(a.rows(), a.rows());
  hnf_inplace(h, &u);
  return {h, u};
}

SmithResult smith_normal_form(const MatZ& a) {
  SmithResult res;
  res.s = a;
  res.u = MatZ::Identity(a.rows(), a.rows());
  res.v = MatZ::Identity(a.cols(), a.cols());
  MatZ& s = res.s;
  const Eigen::Index rows = s.rows(), cols = s.cols();
  Eigen::Index t = 0;
  while (t < rows && t < cols) {
    // Find a smallest-|value| nonzero entry in the remaining block.
    Eigen::Index pi = -1, pj = -1;
    for (Eigen::Index i = t; i < rows; ++i)
      for (Eigen::Index j = t; j < cols; ++j)
        if (s(i, j) != 0 &&
            (pi < 0 || mpz_cmpabs(s(i, j).get_mpz_t(), s(pi, pj).get_mpz_t()) < 0)) {
          pi = i;
          pj = j;
        }
    if (pi < 0) break;
    if (pi != t) {
      s.row(pi).swap(s.row(t));
      res.u.row(pi).swap(res.u.row(t));
    }
    if (pj != t) {
      s.col(pj).swap(s.col(t));
      res.v.col(pj).swap(res.v.col(t));
    }
    if (s(t, t) < 0) {
      s.row(t) = -s.row(t);
      res.u.row(t) = -res.u.row(t);
    }
    bool again = false;
    for (Eigen::Index i = t + 1; i < rows; ++i) {
      if (s(i, t) == 0) continue;
      Int q = s(i, t) / s(t, t);
      if (q != 0) {
        s.row(i) -= q * s.row(t);
        res.u.row(i) -= q * res.u.row(t);
      }
      if (s(i, t) != 0) again = true;
    }
    for (Eigen::Index j = t + 1; j < cols; ++j) {
      if (s(t, j) == 0) continue;
      Int q = s(t, j) / s(t, t);
      if (q != 0) {
        s.col(j) -= q * s.col(t);
        res.v.col(j) -= q * res.v.col(t);
      }
      if (s(t, j) != 0) again = true;
    }
    if (again) continue;
    // Divisibility: fold any entry the pivot does not divide into column t.
    bool fixed = true;
    for (Eigen::Index i = t + 1; i < rows && fixed; ++i)
      for (Eigen::Index j = t + 1; j < cols && fixed; ++j)
        if (s(i, j) % s(t, t) != 0) {
          s.col(t) += s.col(j);
          res.v.col(t) += res.v.col(j);
          fixed = false;
        }
    if (fixed) ++t;
  }
  return res;
}

MatZ left_kernel_lattice(const MatZ& a) {
  auto [h, u] = hermite_with_transform(a);
  int r = 0;
  for (Eigen::Index i = 0; i < h.rows(); ++i)
    if (!h.row(i).isZero()) ++r;
  MatZ kernel = u.bottomRows(u.rows() - r);
  return hermite_normal_form(kernel);
}

int lattice_rank(const MatZ& a) { return static_cast<int>(hermite_normal_form(a).rows()); }

MatZ saturate(const MatZ& b, int ambient) {
  if (b.rows() == 0) return MatZ(0, ambient);
  // Orthogonal-complement twice: sat(B) = ker(ker(B^T)^T).
  MatZ k = left_kernel_lattice(b.transpose());      // rows y with y * B^T = 0
  if (k.rows() == 0) return MatZ::Identity(ambient, ambient);
  return left_kernel_lattice(k.transpose());
}

MatZ lattice_sum(const MatZ& a, const MatZ& b) {
  MatZ stacked(a.rows() + b.rows(), a.cols() == 0 ? b.cols() : a.cols());
  if (a.rows() > 0) stacked.topRows(a.rows()) = a;
  if (b.rows() > 0) stacked.bottomRows(b.rows()) = b;
  return hermite_normal_form(stacked);
}

MatZ lattice_intersect(const MatZ& a, const MatZ& b, int ambient) {
  if (a.rows() == 0 || b.rows() == 0) return MatZ(0, ambient);
  // x = y1 A = y2 B; kernel of [A^T | -B^T] stacked as rows (y1, y2).
  MatZ m(a.rows() + b.rows(), ambient);
  m.topRows(a.rows()) = a;
  m.bottomRows(b.rows()) = -b;
  MatZ k = left_kernel_lattice(m);  // rows (y1, y2)
  MatZ gens(k.rows(), ambient);
  for (Eigen::Index i = 0; i < k.rows(); ++i)
    gens.row(i) = k.row(i).head(a.rows()) * a;
  return hermite_normal_form(gens);
}

bool lattice_contains(const MatZ& basis, const VecZ& v) {
  if (v.isZero()) return true;
  if (basis.rows() == 0) return false;
  VecZ r = reduce_mod_lattice(v, basis);
  return r.isZero();
}

bool lattice_subset(const MatZ& a, const MatZ& b) {
  for (Eigen::Index i = 0; i < a.rows(); ++i) {
    VecZ v = a.row(i).transpose();
    if (!lattice_contains(b, v)) return false;
  }
  return true;
}

Int det_bareiss(MatZ a) {
  if (a.rows() != a.cols()) throw std::invalid_argument("det: matrix not square");
  const Eigen::Index n = a.rows();
  if (n == 0) return 1;
  Int sign = 1, prev = 1;
  for (Eigen::Index k = 0; k < n - 1; ++k) {
    if (a(k, k) == 0) {
      Eigen::Index p = -1;
      for (Eigen::Index i = k + 1; i < n; ++i)
        if (a(i, k) != 0) {
          p = i;
          break;
        }
      if (p < 0) return 0;
      a.row(k).swap(a.row(p));
      sign = -sign;
    }
    for (Eigen::Index i = k + 1; i < n; ++i)
      for (Eigen::Index j = k + 1; j < n; ++j) {
        Int num = a(i, j) * a(k, k) - a(i, k) * a(k, j);
        a(i, j) = num / prev;  // exact by Bareiss
      }
    prev = a(k, k);
  }
  return sign * a(n - 1, n - 1);
}

LinSolveZ solve_left_integer(const MatZ& a, const VecZ& b) {
  // x * a = b  <=>  a^T x^T = b^T. With S = U a^T V: solve S y = U b, x = (V y)^T.
  LinSolveZ out;
  SmithResult sm = smith_normal_form(a.transpose());
  VecZ rhs = sm.u * b;
  const Eigen::Index m = sm.s.rows(), n = sm.s.cols();
  VecZ y = VecZ::Zero(n);
  for (Eigen::Index i = 0; i < m; ++i) {
    Int d = (i < n) ? sm.s(i, i) : Int(0);
    if (d == 0) {
      if (rhs[i] != 0) return out;  // unsolvable
    } else {
      if (rhs[i] % d != 0) return out;
      y[i] = rhs[i] / d;
    }
  }
  out.solvable = true;
  out.particular = sm.v * y;
  // Kernel: columns of V past the rank of S.
  int r = 0;
  for (Eigen::Index i = 0; i < std::min(m, n); ++i)
    if (sm.s(i, i) != 0) ++r;
  MatZ kernel(n - r, a.rows());
  for (Eigen::Index j = r; j < n; ++j) kernel.row(j - r) = sm.v.col(j).transpose();
  out.kernel = hermite_normal_form(kernel);
  return out;
}

VecZ reduce_mod_lattice(const VecZ& v, const MatZ& basis) {
  VecZ r = v;
  if (basis.rows() == 0) return r;
  MatZ h = hermite_normal_form(basis);
  for (Eigen::Index i = 0; i < h.rows(); ++i) {
    Eigen::Index c = 0;
    while (c < h.cols() && h(i, c) == 0) ++c;
    if (c == h.cols()) continue;
    Int q;
    mpz_fdiv_q(q.get_mpz_t(), r[c].get_mpz_t(), h(i, c).get_mpz_t());
    if (q != 0) r -= (h.row(i) * q).transpose();
  }
  return r;
}

MatQ rref(const MatQ& a) {
  MatQ m = a;
  const Eigen::Index rows = m.rows(), cols = m.cols();
  Eigen::Index r = 0;
  for (Eigen::Index c = 0; c < cols && r < rows; ++c) {
    Eigen::Index piv = -1;
    for (Eigen::Index i = r; i < rows; ++i)
      if (m(i, c) != 0) {
        piv = i;
        break;
      }
    if (piv < 0) continue;
    if (piv != r) m.row(piv).swap(m.row(r));
    m.row(r) /= m(r, c);
    for (Eigen::Index i = 0; i < rows; ++i)
      if (i != r && m(i, c) != 0) m.row(i) -= m(i, c) * m.row(r);
    ++r;
  }
  return m.topRows(r);
}

int rank_q(const MatQ& a) { return static_cast<int>(rref(a).rows()); }

MatQ right_kernel_rows(const MatQ& a) {
  const Eigen::Index n = a.cols();
  MatQ r = rref(a);
  std::vector<Eigen::Index> pivots;
  std::vector<bool> is_pivot(n, false);
  for (Eigen::Index i = 0; i < r.rows(); ++i) {
    Eigen::Index c = 0;
    while (c < n && r(i, c) == 0) ++c;
    pivots.push_back(c);
    is_pivot[c] = true;
  }
  MatQ kernel(n - r.rows(), n);
  Eigen::Index k = 0;
  for (Eigen::Index c = 0; c < n; ++c) {
    if (is_pivot[c]) continue;
    VecQ v = VecQ::Zero(n);
    v[c] = 1;
    for (Eigen::Index i = 0; i < r.rows(); ++i) v[pivots[i]] = -r(i, c);
    kernel.row(k++) = v.transpose();
  }
  return rref(kernel);
}

VecZ primitive_vector(const VecQ& v) {
  Int l = 1;
  for (Eigen::Index i = 0; i < v.size(); ++i) l = lcm(l, v[i].get_den());
  VecZ w(v.size());
  Int g = 0;
  for (Eigen::Index i = 0; i < v.size(); ++i) {
    Rat s = v[i] * Rat(l);
    w[i] = s.get_num();
    g = gcd(g, w[i]);
  }
  if (g > 1)
    for (Eigen::Index i = 0; i < w.size(); ++i) w[i] /= g;
  return w;
}

MatZ primitive_rows(const MatQ& a) {
  MatZ out(a.rows(), a.cols());
  for (Eigen::Index i = 0; i < a.rows(); ++i)
    out.row(i) = primitive_vector(a.row(i).transpose()).transpose();
  return out;
}

MatQ to_matq(const MatZ& a) {
  MatQ out(a.rows(), a.cols());
  for (Eigen::Index i = 0; i < a.rows(); ++i)
    for (Eigen::Index j = 0; j < a.cols(); ++j) out(i, j) = Rat(a(i, j));
  return out;
}

std::vector<MatZ> unimodular_test_set(int n) {
  std::vector<MatZ> out;
  out.push_back(MatZ::Identity(n, n));
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) {
      if (i == j) continue;
      for (int c : {1, -1, 2}) {
        MatZ e = MatZ::Identity(n, n);
        e(i, j) = c;
        out.push_back(e);
      }
    }
  return out;
}

Sublattice Sublattice::full(int ambient_rank) {
  return Sublattice(ambient_rank, MatZ::Identity(ambient_rank, ambient_rank));
}

Sublattice Sublattice::zero(int ambient_rank) {
  return Sublattice(ambient_rank, MatZ(0, ambient_rank));
}

Sublattice Sublattice::span_of(int ambient, const std::vector<VecZ>& gens) {
  MatZ m(gens.size(), ambient);
  for (std::size_t i = 0; i < gens.size(); ++i) m.row(i) = gens[i].transpose();
  return Sublattice(ambient, m);
}

bool Sublattice::is_full() const {
  return rank() == ambient_ && basis_ == MatZ::Identity(ambient_, ambient_);
}

bool Sublattice::contains(const Sublattice& other) const {
  return lattice_subset(other.basis_, basis_);
}

Sublattice Sublattice::sum(const Sublattice& other) const {
  return Sublattice(ambient_, lattice_sum(basis_, other.basis_));
}

Sublattice Sublattice::intersect(const Sublattice& other) const {
  return Sublattice(ambient_, lattice_intersect(basis_, other.basis_, ambient_));
}

}  // namespace qtorus
