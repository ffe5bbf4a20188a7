// The geometric invariant of a module presentation as a rational fan:
// exact for principal cyclic modules, certified inner/outer approximations
// otherwise, product fans for tensor modules, carrier spaces, and the
// strongly-holonomic verdict.
//
// Exactness of the principal case rests on two facts about the quantum
// torus F*A. First, phi-initial forms are multiplicative: in_phi(xy) =
// in_phi(x) in_phi(y), because the algebra is a domain and the phi-grading
// respects products. Second, units are exactly the nonzero scalar multiples
// of monomials. An annihilator of the cyclic generator of F*A/alpha(F*A) is
// alpha*delta, and in_phi(alpha*delta) is a single monomial iff both
// in_phi(alpha) and in_phi(delta) are; so a unique-phi-minimum annihilator
// exists iff in_phi(alpha) is a monomial, i.e. iff phi attains its minimum
// on supp(alpha) at one point. The set where the minimum is attained at
// least twice is the codimension->=1 skeleton of the inner normal fan of
// the Newton polytope of supp(alpha), computed below as a union of
// pair cones { phi : phi(p) = phi(q) <= phi(r) for all r in supp }.
#pragma once

#include "qtorus/cone.hpp"
#include "qtorus/module.hpp"
#include "qtorus/presentation.hpp"

#include <optional>
#include <string>
#include <vector>

namespace qtorus {

struct DeltaApprox {
  RationalFan inner;   // certified subset
  RationalFan outer;   // certified superset
  bool exact = false;  // inner == outer == Delta(M)
  bool zero_module = false;

  explicit DeltaApprox(int ambient) : inner(ambient), outer(ambient) {}
  const RationalFan& fan() const { return outer; }
};

// Exact Delta of F*A/alpha(F*A): the tropical fan of supp(alpha), plus the
// origin. A monomial relation yields the zero module (flagged).
DeltaApprox delta_principal(const CyclicModulePresentation& m);

// Tropical fan of a bare support set (the same computation without a module
// wrapper; used by delta_principal and the test oracles).
RationalFan support_fan(int ambient, const std::vector<ExpVec>& support);

// Inner/outer approximation for any cyclic presentation: exact if principal;
// otherwise inner = {0}, outer = intersection of the principal fans of the
// individual relations (each relation's cyclic quotient surjects onto M).
DeltaApprox delta_of(const CyclicModulePresentation& m);

// A J-element with a unique phi-minimum certifies phi not in Delta(M).
// The search runs over (relation) * (monomial cofactor in the degree box);
// complete for principal ideals at any bound (initial forms multiply, units
// are monomials), sound but incomplete for multi-generator ideals.
std::optional<TorusElement> exclude_certificate(const CyclicModulePresentation& m,
                                                const VecQ& phi, long degree_bound);

// Product fan { C1 x C2 } on (A1 (+) A2)*; exact iff both inputs are.
DeltaApprox delta_tensor(const DeltaApprox& d1, const DeltaApprox& d2);

struct CarrierData {
  std::vector<MatQ> spaces;          // rref-canonical spans of top cones
  std::vector<Sublattice> subgroups; // ann of each span
};

// Deduplicated linear spans of the m-dimensional cones and their annihilator
// sublattices; m must equal the fan dimension.
CarrierData carrier_spaces(const RationalFan& f, int m);

struct HolonomyVerdict {
  enum class Kind { CertifiedFailure, ConsistentUpToBounds } kind;
  std::string reason;
  std::vector<Sublattice> probed;  // isotropic sublattices checked torsion-free
};

// Certified failure if the exact gk differs from rk(A)/2 or some isotropic
// sublattice admits a torsion witness; otherwise consistent-up-to-bounds.
// Requires a simple presentation (center exactly F) and even rank.
HolonomyVerdict strongly_holonomic_check(const CyclicModulePresentation& m,
                                         const SearchBounds& bounds, long isotropy_coeff_bound);

}  // namespace qtorus
