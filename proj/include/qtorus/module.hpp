// Finitely generated module presentations over F*A, torsion probing over
// subalgebras F*B by exact window linear algebra, GK dimension with
// certificates, filtration verification, and tensor products.
#pragma once

#include "qtorus/element.hpp"
#include "qtorus/lattice.hpp"

#include <optional>
#include <string>
#include <vector>

namespace qtorus {

// M = F*A / (sum of alpha_i * F*A) as a right module on one generator.
struct CyclicModulePresentation {
  AlgebraPtr algebra;
  std::vector<TorusElement> relations;

  bool principal() const { return relations.size() == 1; }
  bool free() const { return relations.empty(); }
};

CyclicModulePresentation make_cyclic(AlgebraPtr alg, std::vector<TorusElement> relations);

// M = (F*A)^g / (sum of row_j * F*A), rows being g-tuples.
struct FGModulePresentation {
  AlgebraPtr algebra;
  int generators = 1;
  std::vector<std::vector<TorusElement>> rows;
};

FGModulePresentation direct_sum(const CyclicModulePresentation& m1,
                                const CyclicModulePresentation& m2);

struct SearchBounds {
  long degree_bound = 3;    // centered box side for cofactor supports
  bool unimodular_images = true;  // widen the sublattice test set
};

// Nonzero beta with supp(beta) in B and beta in the relation ideal, found by
// exact linear algebra over the coefficient field on the degree_bound box;
// none-found is inconclusive. The returned witness re-verifies: support in
// B, nonzero, and membership re-checked by an independent reduction.
std::optional<TorusElement> torsion_witness(const CyclicModulePresentation& m,
                                            const Sublattice& b, long degree_bound);

// Same search for generator `gen` of an FG presentation.
std::optional<TorusElement> fg_torsion_witness(const FGModulePresentation& m,
                                               const Sublattice& b, long degree_bound, int gen);

// 1 in J at the given bound (the module is zero).
bool ideal_contains_one(const CyclicModulePresentation& m, long degree_bound);

struct GKResult {
  enum class Method { ZeroModule, FreeModule, PrincipalDelta, Bracket };

  int lower = 0;
  int upper = 0;
  bool exact = false;
  bool zero_module = false;
  Method method = Method::Bracket;

  // Bracket certificates: the sublattice whose witness search came up empty
  // (evidence for the lower bound) and the per-lattice witnesses backing the
  // upper bound.
  std::optional<Sublattice> lower_evidence;
  long search_bound = 0;
  std::vector<std::pair<Sublattice, TorusElement>> upper_witnesses;
  std::string note;
};

// Exact for the zero module, the free module and principal cyclic modules
// (via the dimension of the Delta fan); otherwise a bracket from torsion
// searches over coordinate sublattices and their unimodular images. dim = n
// iff the module is free, so any nonzero relation certifies upper <= n-1.
GKResult gk_dimension(const CyclicModulePresentation& m, const SearchBounds& bounds);

// Test-harness operation: the direct sum of two exactly-known modules must
// have gk equal to the max. Returns pass/fail.
bool dim_exactness_check(const CyclicModulePresentation& m1, const CyclicModulePresentation& m2,
                         const SearchBounds& bounds);

// Window-based verification of a candidate phi-filtration: spans
// L_mu = span{ gen_i u^m : weight_i + phi(m) >= mu } reduced modulo the
// relation span inside the exponent window. True is evidence, not proof.
bool filtration_verify(const FGModulePresentation& m, const VecQ& phi,
                       const std::vector<Rat>& weights, long window);

// Relations of m1 embedded in the first block, m2's in the second; cyclic
// over the tensor algebra.
CyclicModulePresentation tensor_module(const CyclicModulePresentation& m1,
                                       const CyclicModulePresentation& m2);

}  // namespace qtorus
