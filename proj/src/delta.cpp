#include "qtorus/delta.hpp"

#include <stdexcept>

namespace qtorus {

RationalFan support_fan(int ambient, const std::vector<ExpVec>& support) {
  RationalFan fan(ambient);
  for (std::size_t i = 0; i < support.size(); ++i)
    for (std::size_t j = i + 1; j < support.size(); ++j) {
      // { phi : phi(p) = phi(q), phi(r) >= phi(p) for all r }
      MatQ eqs(1, ambient);
      for (int k = 0; k < ambient; ++k)
        eqs(0, k) = Rat(static_cast<long>(support[j][k] - support[i][k]));
      MatQ ineqs(support.size(), ambient);
      for (std::size_t r = 0; r < support.size(); ++r)
        for (int k = 0; k < ambient; ++k)
          ineqs(r, k) = Rat(static_cast<long>(support[r][k] - support[i][k]));
      fan.add(RationalCone::from_hrep(ambient, eqs, ineqs));
    }
  fan.reduce();
  return fan;
}

DeltaApprox delta_principal(const CyclicModulePresentation& m) {
  if (!m.principal()) throw std::invalid_argument("delta_principal: presentation not principal");
  const TorusElement& alpha = m.relations.front();
  if (alpha.is_zero()) throw std::invalid_argument("delta_principal: zero relation");
  const int n = m.algebra->rank();
  DeltaApprox out(n);
  if (alpha.term_count() == 1) {
    // unit relation: the module is zero; Delta reported as the origin only
    out.inner.add(RationalCone::zero(n));
    out.outer = out.inner;
    out.exact = true;
    out.zero_module = true;
    return out;
  }
  RationalFan fan = support_fan(n, support(alpha));
  out.inner = fan;
  out.outer = fan;
  out.exact = true;
  return out;
}

DeltaApprox delta_of(const CyclicModulePresentation& m) {
  if (m.relations.empty()) {
    // free module: Delta is all of A*
    DeltaApprox out(m.algebra->rank());
    out.inner.add(RationalCone::full(m.algebra->rank()));
    out.outer = out.inner;
    out.exact = true;
    return out;
  }
  if (m.principal()) return delta_principal(m);
  const int n = m.algebra->rank();
  DeltaApprox out(n);
  out.inner.add(RationalCone::zero(n));  // 0 lies in Delta of any nonzero module
  bool first = true;
  RationalFan outer(n);
  for (const auto& alpha : m.relations) {
    CyclicModulePresentation single{m.algebra, {alpha}};
    DeltaApprox d = delta_principal(single);
    if (d.zero_module) {
      out.inner = d.inner;
      out.outer = d.outer;
      out.exact = true;
      out.zero_module = true;
      return out;
    }
    if (first) {
      outer = d.outer;
      first = false;
    } else {
      RationalFan meet(n);
      for (const auto& c1 : outer.cones())
        for (const auto& c2 : d.outer.cones()) meet.add(c1.intersect(c2));
      meet.reduce();
      outer = meet;
    }
  }
  out.outer = outer;
  out.exact = false;
  return out;
}

std::optional<TorusElement> exclude_certificate(const CyclicModulePresentation& m,
                                                const VecQ& phi, long degree_bound) {
  const int n = m.algebra->rank();
  if (phi.size() != n) throw std::invalid_argument("character length mismatch");
  (void)degree_bound;  // monomial cofactors: the minimum set is translation
                       // invariant, so one representative per relation covers
                       // the whole box
  for (const auto& alpha : m.relations) {
    int min_count = 0;
    Rat best;
    bool have = false;
    for (const auto& [e, c] : alpha.terms()) {
      Rat v = 0;
      for (int i = 0; i < n; ++i) v += phi[i] * Rat(static_cast<long>(e[i]));
      if (!have || v < best) {
        best = v;
        min_count = 1;
        have = true;
      } else if (v == best) {
        ++min_count;
      }
    }
    if (min_count == 1) return alpha;
  }
  return std::nullopt;
}

DeltaApprox delta_tensor(const DeltaApprox& d1, const DeltaApprox& d2) {
  const int n = d1.outer.ambient() + d2.outer.ambient();
  DeltaApprox out(n);
  if (d1.zero_module || d2.zero_module) {
    out.inner.add(RationalCone::zero(n));
    out.outer = out.inner;
    out.exact = d1.exact && d2.exact;
    out.zero_module = true;
    return out;
  }
  auto product_fan = [&](const RationalFan& f1, const RationalFan& f2) {
    RationalFan fan(n);
    for (const auto& c1 : f1.cones())
      for (const auto& c2 : f2.cones()) fan.add(c1.product(c2));
    fan.reduce();
    return fan;
  };
  out.inner = product_fan(d1.inner, d2.inner);
  out.outer = product_fan(d1.outer, d2.outer);
  out.exact = d1.exact && d2.exact;
  return out;
}

CarrierData carrier_spaces(const RationalFan& f, int m) {
  if (f.empty() || m != fan_dimension(f))
    throw std::invalid_argument("carrier_spaces: m must equal the fan dimension");
  CarrierData out;
  for (const RationalCone& c : f.cones()) {
    if (c.dim() != m) continue;
    MatQ span = c.span();
    bool seen = false;
    for (const MatQ& s : out.spaces)
      if (s.rows() == span.rows() && s == span) {
        seen = true;
        break;
      }
    if (seen) continue;
    out.spaces.push_back(span);
    out.subgroups.push_back(ann_subspace(span, f.ambient()));
  }
  return out;
}

HolonomyVerdict strongly_holonomic_check(const CyclicModulePresentation& m,
                                         const SearchBounds& bounds,
                                         long isotropy_coeff_bound) {
  const QTorusPresentation& p = m.algebra->presentation();
  const int n = p.rank();
  if (!is_simple(p))
    throw std::invalid_argument("strongly_holonomic_check: center larger than F");
  if (n % 2 != 0) throw std::invalid_argument("strongly_holonomic_check: rank must be even");

  HolonomyVerdict verdict;
  verdict.kind = HolonomyVerdict::Kind::ConsistentUpToBounds;

  GKResult gk = gk_dimension(m, bounds);
  if (gk.exact && gk.lower != n / 2) {
    verdict.kind = HolonomyVerdict::Kind::CertifiedFailure;
    verdict.reason = "gk(M) = " + std::to_string(gk.lower) + " but rk(A)/2 = " +
                     std::to_string(n / 2);
    return verdict;
  }
  if (!gk.exact && gk.upper < n / 2) {  // the upper bound is witness-certified
    verdict.kind = HolonomyVerdict::Kind::CertifiedFailure;
    verdict.reason = "certified gk upper bound " + std::to_string(gk.upper) +
                     " below rk(A)/2";
    return verdict;
  }

  for (int r = 1; r <= n / 2; ++r) {
    for (const Sublattice& b : isotropic_enumerate(p, r, isotropy_coeff_bound, 8)) {
      auto witness = torsion_witness(m, b, bounds.degree_bound);
      if (witness) {
        verdict.kind = HolonomyVerdict::Kind::CertifiedFailure;
        verdict.reason = "torsion over the commutative subalgebra of rank " + std::to_string(r) +
                         "; witness " + witness->to_string();
        verdict.probed.push_back(b);
        return verdict;
      }
      verdict.probed.push_back(b);
    }
  }
  verdict.reason = "gk and torsion probes consistent with strong holonomy up to the bounds";
  return verdict;
}

}  // namespace qtorus
