// Witness-driven structure of the pairing: commuting-monomial solver,
// four-subgroup witnesses, 2x2 block normal form of nondegenerate
// alternating forms, and the change-of-variables step they combine into.
#pragma once

#include "qtorus/presentation.hpp"

#include <optional>
#include <vector>

namespace qtorus {

struct CommutingMonomials {
  long s = 0;                // smallest exponent found, s >= 1
  std::vector<ExpVec> mu;    // one correction in the span of the C-basis per
                             // extension vector; mu[j] + s*ext[j] pairwise commute
};

// Smallest s <= s_max and corrections c_j in the row span of c_basis with
// lambda(c_k + s e_k, c_l + s e_l) = 0 for all extension pairs, solved as an
// integer linear system per s (free and torsion parts together, Smith normal
// form). The returned data re-verifies to exact zero pairings before being
// handed back. Whether the minimal s here matches the dimension-theoretic
// exponent the existence proof produces is not claimed.
std::optional<CommutingMonomials> commuting_monomials(const QTorusPresentation& p,
                                                      const MatZ& c_basis,
                                                      const std::vector<ExpVec>& ext,
                                                      long s_max);

std::optional<CommutingMonomials> commuting_monomials(const QTorusPresentation& p,
                                                      const Sublattice& c,
                                                      const std::vector<ExpVec>& ext,
                                                      long s_max);

struct FourSubgroupWitness {
  Sublattice b1, b2, b3, b4;
};

// Checks, for ambient rank 2m: pairwise pairing triviality of (B1,B2),
// (B2,B3), (B3,B4) plus commutativity of each F*B_i; trivial intersections
// B1^B2, B3^B4, B1B2^B3B4; and rank sums rk(B_i)+rk(B_{i+1}) = m.
bool four_subgroup_validate(const QTorusPresentation& p, const FourSubgroupWitness& w);

struct BlockPair {
  VecZ v, w;
  Int divisor;
};

struct BlockDecomposition {
  MatZ basis;                    // rows v1, w1, v2, w2, ...; unimodular over Z^n
  std::vector<BlockPair> blocks;
};

// Normal form of a nondegenerate alternating integer pairing (scalar group
// Z): a basis of a finite-index sublattice on which the pairing is
// block-diagonal with 2x2 blocks [[0, e_i], [-e_i, 0]], e_1 | e_2 | ...
// Every pairing on the returned basis is re-evaluated before returning.
BlockDecomposition alternating_block_decomposition(const QTorusPresentation& p);

struct TheoremBStep {
  long s = 0;
  std::vector<ExpVec> b1_new;  // mu_j + s*u_j for the B1 extension vectors
  std::vector<ExpVec> b4_new;  // nu_i + s*w_i for the B4 extension vectors
};

// With C = B2B3 and extension basis B4 then B1, runs the commuting-monomial
// solver and splits each correction into its B2 and B3 parts; verifies that
// the new B1' and B4' satisfy lambda(B1'B3, B2B4') = 0 exactly.
std::optional<TheoremBStep> theoremB_step(const QTorusPresentation& p,
                                          const FourSubgroupWitness& w, long s_max);

}  // namespace qtorus
