#include "qtorus/structure.hpp"

#include <stdexcept>

namespace qtorus {

namespace {

ExpVec row_to_exp(const MatZ& m, Eigen::Index i) { return to_expvec(m.row(i).transpose()); }

std::vector<ExpVec> lattice_rows(const Sublattice& s) {
  std::vector<ExpVec> out;
  for (Eigen::Index i = 0; i < s.basis().rows(); ++i) out.push_back(row_to_exp(s.basis(), i));
  return out;
}

}  // namespace

std::optional<CommutingMonomials> commuting_monomials(const QTorusPresentation& p,
                                                      const MatZ& c_basis,
                                                      const std::vector<ExpVec>& ext,
                                                      long s_max) {
  const int n = p.rank();
  const ScalarGroup& g = p.scalar_group();
  const int r = static_cast<int>(c_basis.rows());
  const int kk = static_cast<int>(ext.size());
  if (s_max < 1) throw std::invalid_argument("commuting_monomials: s_max must be >= 1");

  {  // preconditions: C isotropic, C-basis u ext independent
    Sublattice c(n, c_basis);
    if (!is_isotropic(p, c)) throw std::invalid_argument("commuting_monomials: C not isotropic");
    MatZ all(r + kk, n);
    all.topRows(r) = c_basis;
    for (int j = 0; j < kk; ++j) all.row(r + j) = to_vecz(ext[j]).transpose();
    if (lattice_rank(all) != r + kk)
      throw std::invalid_argument("commuting_monomials: basis union not independent");
  }

  // Unknowns z[(k, a)] with c_k = sum_a z[(k,a)] * c_basis row a, plus one
  // torsion slack per (pair, torsion row). Equation for the pair (k, l):
  //   s * (lambda(c_k, e_l) + lambda(e_k, c_l)) = -s^2 lambda(e_k, e_l)
  // split into free coordinates over Z and the torsion coordinate mod m.
  const int d = g.free_rank;
  const bool has_tor = g.torsion_modulus > 0;
  const int pair_count = kk * (kk - 1) / 2;
  const int eq_count = pair_count * (d + (has_tor ? 1 : 0));
  const int zvars = kk * r;
  const int svars = has_tor ? pair_count : 0;  // torsion slack

  for (long s = 1; s <= s_max; ++s) {
    MatZ a = MatZ::Zero(zvars + svars, eq_count);
    VecZ rhs(eq_count);
    int eq = 0, pair_idx = 0;
    for (int k = 0; k < kk; ++k)
      for (int l = k + 1; l < kk; ++l, ++pair_idx) {
        ScalarValue target = pairing_eval(p, ext[k], ext[l]) * Int(-(s * s));
        for (int coord = 0; coord < d + (has_tor ? 1 : 0); ++coord, ++eq) {
          for (int aa = 0; aa < r; ++aa) {
            ExpVec ba = row_to_exp(c_basis, aa);
            ScalarValue lka = pairing_eval(p, ba, ext[l]);   // lambda(b_a, e_l)
            ScalarValue lkb = pairing_eval(p, ext[k], ba);   // lambda(e_k, b_a)
            Int coef_k = (coord < d) ? lka.free_part()[coord] : lka.torsion_part();
            Int coef_l = (coord < d) ? lkb.free_part()[coord] : lkb.torsion_part();
            a(k * r + aa, eq) += coef_k * Int(s);
            a(l * r + aa, eq) += coef_l * Int(s);
          }
          if (coord == d) a(zvars + pair_idx, eq) = Int(g.torsion_modulus);
          rhs[eq] = (coord < d) ? target.free_part()[coord] : target.torsion_part();
        }
      }

    LinSolveZ sol = solve_left_integer(a, rhs);
    if (!sol.solvable) continue;
    // Canonical representative: reduce the particular solution modulo the
    // kernel lattice so that free variables come out zero.
    VecZ z = reduce_mod_lattice(sol.particular, sol.kernel);

    CommutingMonomials out;
    out.s = s;
    for (int k = 0; k < kk; ++k) {
      VecZ ck = VecZ::Zero(n);
      for (int aa = 0; aa < r; ++aa) ck += z[k * r + aa] * c_basis.row(aa).transpose();
      out.mu.push_back(to_expvec(ck));
    }
    // Exact verification of the zero pairings.
    for (int k = 0; k < kk; ++k)
      for (int l = k + 1; l < kk; ++l) {
        ExpVec xk = out.mu[k] + s * ext[k];
        ExpVec xl = out.mu[l] + s * ext[l];
        if (!pairing_eval(p, xk, xl).is_zero())
          throw std::logic_error("commuting_monomials: solution failed verification");
      }
    return out;
  }
  return std::nullopt;
}

std::optional<CommutingMonomials> commuting_monomials(const QTorusPresentation& p,
                                                      const Sublattice& c,
                                                      const std::vector<ExpVec>& ext,
                                                      long s_max) {
  return commuting_monomials(p, c.basis(), ext, s_max);
}

bool four_subgroup_validate(const QTorusPresentation& p, const FourSubgroupWitness& w) {
  const int n = p.rank();
  if (n % 2 != 0) throw std::invalid_argument("four_subgroup_validate: ambient rank must be even");
  const int m = n / 2;
  const Sublattice* bs[4] = {&w.b1, &w.b2, &w.b3, &w.b4};
  for (const Sublattice* b : bs) {
    if (b->ambient_rank() != n) throw std::invalid_argument("witness lattice in wrong ambient rank");
    if (b->rank() == 0) return false;         // nontrivial required
    if (!is_isotropic(p, *b)) return false;   // F*B_i commutative
  }
  auto pair_trivial = [&](const Sublattice& x, const Sublattice& y) {
    for (Eigen::Index i = 0; i < x.basis().rows(); ++i)
      for (Eigen::Index j = 0; j < y.basis().rows(); ++j)
        if (!pairing_eval(p, row_to_exp(x.basis(), i), row_to_exp(y.basis(), j)).is_zero())
          return false;
    return true;
  };
  if (!pair_trivial(w.b1, w.b2) || !pair_trivial(w.b2, w.b3) || !pair_trivial(w.b3, w.b4))
    return false;
  if (w.b1.intersect(w.b2).rank() != 0) return false;
  if (w.b3.intersect(w.b4).rank() != 0) return false;
  if (w.b1.sum(w.b2).intersect(w.b3.sum(w.b4)).rank() != 0) return false;
  if (w.b1.rank() + w.b2.rank() != m) return false;
  if (w.b2.rank() + w.b3.rank() != m) return false;
  if (w.b3.rank() + w.b4.rank() != m) return false;
  return true;
}

BlockDecomposition alternating_block_decomposition(const QTorusPresentation& p) {
  const ScalarGroup& g = p.scalar_group();
  if (g.free_rank != 1 || g.torsion_modulus != 0)
    throw std::invalid_argument("block decomposition: unsupported scalar group (need d=1, m=0)");
  const int n = p.rank();
  if (n % 2 != 0) throw std::invalid_argument("block decomposition: odd rank");
  if (radical(p).rank() != 0)
    throw std::invalid_argument("block decomposition: nontrivial radical");

  MatZ m = p.free_component(0);
  MatZ basis = MatZ::Identity(n, n);  // rows express the new basis in the old

  auto swap_rc = [&](int i, int j) {
    if (i == j) return;
    m.row(i).swap(m.row(j));
    m.col(i).swap(m.col(j));
    basis.row(i).swap(basis.row(j));
  };
  auto add_rc = [&](int dst, int src, const Int& q) {
    // basis change: new_dst = dst + q*src (congruence: row and column).
    m.row(dst) += q * m.row(src);
    m.col(dst) += q * m.col(src);
    basis.row(dst) += q * basis.row(src);
  };
  auto negate_rc = [&](int i) {
    m.row(i) = -m.row(i);
    m.col(i) = -m.col(i);
    basis.row(i) = -basis.row(i);
  };

  // Reduce to pairwise-orthogonal 2x2 blocks [[0, e], [-e, 0]] starting at b.
  auto reduce_blocks = [&]() {
    for (int b = 0; b < n; b += 2) {
      for (;;) {
        // Smallest |nonzero| entry of the active region; its row goes to b.
        int pi = -1, pj = -1;
        for (int i = b; i < n; ++i)
          for (int j = b; j < n; ++j)
            if (m(i, j) != 0 &&
                (pi < 0 || mpz_cmpabs(m(i, j).get_mpz_t(), m(pi, pj).get_mpz_t()) < 0)) {
              pi = i;
              pj = j;
            }
        if (pi < 0) throw std::logic_error("block decomposition: degenerate block");
        swap_rc(pi, b);  // skewness guarantees row b is now nonzero
        pj = -1;
        for (int j = b + 1; j < n; ++j)
          if (m(b, j) != 0 &&
              (pj < 0 || mpz_cmpabs(m(b, j).get_mpz_t(), m(b, pj).get_mpz_t()) < 0))
            pj = j;
        if (pj < 0) throw std::logic_error("block decomposition: lost pivot row");
        swap_rc(pj, b + 1);
        if (m(b, b + 1) < 0) negate_rc(b + 1);
        const Int piv = m(b, b + 1);
        // Clear rows b, b+1 beyond the block (columns follow by skewness).
        bool clean = true;
        for (int j = b + 2; j < n; ++j) {
          if (m(b, j) != 0) {
            Int q = m(b, j) / piv;
            if (q != 0) add_rc(j, b + 1, -q);
            if (m(b, j) != 0) clean = false;
          }
          if (m(b + 1, j) != 0) {
            Int q = m(b + 1, j) / piv;
            if (q != 0) add_rc(j, b, q);
            if (m(b + 1, j) != 0) clean = false;
          }
        }
        if (clean) break;
      }
    }
  };

  reduce_blocks();
  // Divisibility chain e_1 | e_2 | ...: fold a violating later block into the
  // earlier one and re-reduce; pivots shrink strictly, so this terminates.
  for (;;) {
    bool ok = true;
    for (int b = 0; b + 2 < n && ok; b += 2)
      if (m(b + 2, b + 3) % m(b, b + 1) != 0) {
        add_rc(b + 1, b + 3, 1);  // w_i += w_{i+1} creates a cross term
        ok = false;
      }
    if (ok) break;
    reduce_blocks();
  }

  BlockDecomposition out;
  out.basis = basis;
  for (int b = 0; b < n; b += 2) {
    BlockPair bp;
    bp.v = basis.row(b).transpose();
    bp.w = basis.row(b + 1).transpose();
    bp.divisor = m(b, b + 1);
    out.blocks.push_back(bp);
  }

  // Verification: re-evaluate every pairing on the returned basis.
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) {
      ScalarValue v = pairing_eval(p, to_expvec(basis.row(i).transpose()),
                                   to_expvec(basis.row(j).transpose()));
      Int expected = 0;
      if (i / 2 == j / 2) {
        if (i + 1 == j) expected = out.blocks[i / 2].divisor;
        if (j + 1 == i) expected = -out.blocks[j / 2].divisor;
      }
      if (v.free_part()[0] != expected)
        throw std::logic_error("block decomposition: verification failed");
    }
  return out;
}

std::optional<TheoremBStep> theoremB_step(const QTorusPresentation& p,
                                          const FourSubgroupWitness& w, long s_max) {
  const int n = p.rank();
  if (!four_subgroup_validate(p, w))
    throw std::invalid_argument("theoremB_step: witness fails validation");
  Sublattice b_all = w.b1.sum(w.b2).sum(w.b3).sum(w.b4);
  if (b_all.rank() != n)
    throw std::invalid_argument("theoremB_step: B1B2B3B4 does not have finite index");

  // C = B2B3 with the basis split kept explicit so corrections decompose.
  const int r2 = w.b2.rank(), r3 = w.b3.rank();
  MatZ c_basis(r2 + r3, n);
  c_basis.topRows(r2) = w.b2.basis();
  c_basis.bottomRows(r3) = w.b3.basis();

  std::vector<ExpVec> ext = lattice_rows(w.b4);  // the w_i first,
  std::vector<ExpVec> u_ext = lattice_rows(w.b1);  // then the u_j
  const int w_count = static_cast<int>(ext.size());
  ext.insert(ext.end(), u_ext.begin(), u_ext.end());

  auto sol = commuting_monomials(p, c_basis, ext, s_max);
  if (!sol) return std::nullopt;

  // Split each correction into its B2 part (mu) and B3 part (nu) by solving
  // in the explicit C coordinates.
  TheoremBStep out;
  out.s = sol->s;
  for (std::size_t j = 0; j < ext.size(); ++j) {
    LinSolveZ dec = solve_left_integer(c_basis, to_vecz(sol->mu[j]));
    if (!dec.solvable) throw std::logic_error("theoremB_step: correction not in C");
    VecZ mu_part = VecZ::Zero(n), nu_part = VecZ::Zero(n);
    for (int aa = 0; aa < r2; ++aa) mu_part += dec.particular[aa] * c_basis.row(aa).transpose();
    for (int aa = 0; aa < r3; ++aa)
      nu_part += dec.particular[r2 + aa] * c_basis.row(r2 + aa).transpose();
    if (static_cast<int>(j) < w_count)
      out.b4_new.push_back(to_expvec(nu_part) + sol->s * ext[j]);  // nu_i * w_i^s
    else
      out.b1_new.push_back(to_expvec(mu_part) + sol->s * ext[j]);  // mu_j * u_j^s
  }

  // Verify lambda(B1'B3, B2B4') = 0 exactly.
  std::vector<ExpVec> left = out.b1_new, right = lattice_rows(w.b2);
  for (const ExpVec& v : lattice_rows(w.b3)) left.push_back(v);
  for (const ExpVec& v : out.b4_new) right.push_back(v);
  for (const ExpVec& x : left)
    for (const ExpVec& y : right)
      if (!pairing_eval(p, x, y).is_zero())
        throw std::logic_error("theoremB_step: cross pairing verification failed");
  return out;
}

}  // namespace qtorus
