#include "qtorus/presentation.hpp"

#include <functional>
#include <stdexcept>

namespace qtorus {

QTorusPresentation::QTorusPresentation(int rank, const ScalarGroup& group)
    : rank_(rank), group_(group) {
  if (rank < 0) throw std::invalid_argument("presentation: rank must be >= 0");
  free_.assign(group.free_rank, MatZ::Zero(rank, rank));
  torsion_ = MatZ::Zero(rank, rank);
}

void QTorusPresentation::set_pairing(int i, int j, const ScalarValue& v) {
  if (v.group() != group_) throw std::invalid_argument("pairing value from wrong scalar group");
  if (i < 0 || j < 0 || i >= rank_ || j >= rank_)
    throw std::out_of_range("pairing index out of range");
  if (i == j) {
    if (!v.is_zero()) throw std::invalid_argument("pairing must vanish on the diagonal");
    return;
  }
  for (int k = 0; k < group_.free_rank; ++k) {
    free_[k](i, j) = v.free_part()[k];
    free_[k](j, i) = -v.free_part()[k];
  }
  if (group_.torsion_modulus > 0) {
    Int m(group_.torsion_modulus);
    torsion_(i, j) = v.torsion_part();
    Int neg = -v.torsion_part();
    mpz_fdiv_r(neg.get_mpz_t(), neg.get_mpz_t(), m.get_mpz_t());
    torsion_(j, i) = neg;
  }
}

ScalarValue QTorusPresentation::pairing(int i, int j) const {
  VecZ f(group_.free_rank);
  for (int k = 0; k < group_.free_rank; ++k) f[k] = free_[k](i, j);
  return ScalarValue(group_, f, torsion_(i, j));
}

ScalarValue pairing_eval(const QTorusPresentation& p, const ExpVec& a, const ExpVec& b) {
  if (a.size() != p.rank() || b.size() != p.rank())
    throw std::invalid_argument("pairing_eval: vector length does not match rank");
  VecZ av = to_vecz(a), bv = to_vecz(b);
  const ScalarGroup& g = p.scalar_group();
  VecZ f(g.free_rank);
  for (int k = 0; k < g.free_rank; ++k) f[k] = (av.transpose() * p.free_component(k) * bv)(0, 0);
  Int t = 0;
  if (g.torsion_modulus > 0) t = (av.transpose() * p.torsion_component() * bv)(0, 0);
  return ScalarValue(g, f, t);
}

Sublattice radical(const QTorusPresentation& p) {
  const int n = p.rank();
  const ScalarGroup& g = p.scalar_group();
  MatZ free_kernel = MatZ::Identity(n, n);
  if (g.free_rank > 0) {
    MatZ stacked(n, n * g.free_rank);
    for (int k = 0; k < g.free_rank; ++k)
      stacked.block(0, k * n, n, n) = p.free_component(k);
    free_kernel = left_kernel_lattice(stacked);
  }
  if (g.torsion_modulus == 0) return Sublattice(n, free_kernel);

  // a * T = 0 mod m: left kernel of [T; mI] in variables (a, y), projected to a.
  MatZ stacked(2 * n, n);
  stacked.topRows(n) = p.torsion_component();
  stacked.bottomRows(n) = MatZ::Identity(n, n) * Int(g.torsion_modulus);
  MatZ k = left_kernel_lattice(stacked);
  MatZ proj(k.rows(), n);
  for (Eigen::Index i = 0; i < k.rows(); ++i) proj.row(i) = k.row(i).head(n);
  MatZ torsion_kernel = hermite_normal_form(proj);
  return Sublattice(n, lattice_intersect(free_kernel, torsion_kernel, n));
}

bool is_simple(const QTorusPresentation& p) { return radical(p).rank() == 0; }

Sublattice derived_unit_subgroup(const QTorusPresentation& p) {
  const int n = p.rank();
  const ScalarGroup& g = p.scalar_group();
  const int width = g.free_rank + (g.torsion_modulus > 0 ? 1 : 0);
  std::vector<VecZ> gens;
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j) {
      VecZ v(width);
      for (int k = 0; k < g.free_rank; ++k) v[k] = p.free_component(k)(i, j);
      if (g.torsion_modulus > 0) v[g.free_rank] = p.torsion_component()(i, j);
      if (!v.isZero()) gens.push_back(v);
    }
  if (g.torsion_modulus > 0) {
    VecZ m = VecZ::Zero(width);
    m[g.free_rank] = Int(g.torsion_modulus);
    gens.push_back(m);
  }
  return Sublattice::span_of(width, gens);
}

std::vector<Int> elementary_divisors(const MatZ& basis) {
  std::vector<Int> out;
  if (basis.rows() == 0) return out;
  SmithResult s = smith_normal_form(basis);
  for (Eigen::Index i = 0; i < std::min(s.s.rows(), s.s.cols()); ++i)
    if (s.s(i, i) != 0) out.push_back(s.s(i, i));
  return out;
}

bool is_isotropic(const QTorusPresentation& p, const Sublattice& b) {
  const MatZ& rows = b.basis();
  for (Eigen::Index i = 0; i < rows.rows(); ++i)
    for (Eigen::Index j = i + 1; j < rows.rows(); ++j) {
      ExpVec a = to_expvec(rows.row(i).transpose());
      ExpVec c = to_expvec(rows.row(j).transpose());
      if (!pairing_eval(p, a, c).is_zero()) return false;
    }
  return true;
}

namespace {

// Candidate vectors for the isotropic DFS: primitive, first nonzero entry
// positive, entries in [-bound, bound], lexicographic order.
std::vector<VecZ> candidate_vectors(int n, long bound) {
  std::vector<VecZ> out;
  VecZ v = VecZ::Constant(n, Int(-bound));
  std::function<void(int)> rec = [&](int pos) {
    if (pos == n) {
      Eigen::Index first = -1;
      Int g = 0;
      for (Eigen::Index i = 0; i < n; ++i) {
        if (v[i] != 0 && first < 0) first = i;
        g = gcd(g, v[i]);
      }
      if (first < 0 || v[first] < 0 || g != 1) return;
      out.push_back(v);
      return;
    }
    for (long c = -bound; c <= bound; ++c) {
      v[pos] = Int(c);
      rec(pos + 1);
    }
  };
  rec(0);
  return out;
}

void isotropic_dfs(const QTorusPresentation& p, const std::vector<VecZ>& cands, int target,
                   std::size_t start, std::vector<VecZ>& chosen,
                   std::vector<Sublattice>& found, int limit) {
  if (static_cast<int>(found.size()) >= limit) return;
  if (static_cast<int>(chosen.size()) == target) {
    Sublattice s = Sublattice::span_of(p.rank(), chosen);
    if (s.rank() == target) {
      for (const Sublattice& f : found)
        if (f == s) return;
      found.push_back(s);
    }
    return;
  }
  for (std::size_t i = start; i < cands.size(); ++i) {
    ExpVec cand = to_expvec(cands[i]);
    bool ok = true;
    for (const VecZ& c : chosen)
      if (!pairing_eval(p, to_expvec(c), cand).is_zero()) {
        ok = false;
        break;
      }
    if (!ok) continue;
    chosen.push_back(cands[i]);
    if (Sublattice::span_of(p.rank(), chosen).rank() == static_cast<int>(chosen.size()))
      isotropic_dfs(p, cands, target, i + 1, chosen, found, limit);
    chosen.pop_back();
    if (static_cast<int>(found.size()) >= limit) return;
  }
}

}  // namespace

std::vector<Sublattice> isotropic_enumerate(const QTorusPresentation& p, int target_rank,
                                            long coeff_bound, int limit) {
  if (target_rank < 1 || target_rank > p.rank())
    throw std::invalid_argument("isotropic_search: target rank out of range");
  std::vector<Sublattice> found;
  std::vector<VecZ> chosen;
  auto cands = candidate_vectors(p.rank(), coeff_bound);
  isotropic_dfs(p, cands, target_rank, 0, chosen, found, limit);
  return found;
}

std::optional<Sublattice> isotropic_search(const QTorusPresentation& p, int target_rank,
                                           long coeff_bound) {
  auto found = isotropic_enumerate(p, target_rank, coeff_bound, 1);
  if (found.empty()) return std::nullopt;
  return found.front();
}

MatQ ann_subgroup(const Sublattice& b) {
  if (b.rank() == 0) return rref(MatQ::Identity(b.ambient_rank(), b.ambient_rank()));
  return right_kernel_rows(to_matq(b.basis()));
}

Sublattice ann_subspace(const MatQ& v_rows, int ambient_rank) {
  if (v_rows.rows() == 0) return Sublattice::full(ambient_rank);
  MatZ w = primitive_rows(v_rows);
  return Sublattice(ambient_rank, left_kernel_lattice(w.transpose()));
}

}  // namespace qtorus
