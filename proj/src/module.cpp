#include "qtorus/module.hpp"

#include "qtorus/delta.hpp"
#include "qtorus/detail/echelon.hpp"

#include <algorithm>
#include <map>
#include <stdexcept>

namespace qtorus {

namespace {

using Row = detail::SparseEchelon<RatFunc>::Row;

std::vector<ExpVec> box_exponents(int n, long bound) {
  std::vector<ExpVec> out;
  ExpVec e = ExpVec::Constant(n, -bound);
  for (;;) {
    out.push_back(e);
    int i = 0;
    while (i < n && e[i] == bound) {
      e[i] = -bound;
      ++i;
    }
    if (i == n) break;
    ++e[i];
  }
  return out;
}

struct GenExpLess {
  bool operator()(const std::pair<int, ExpVec>& a, const std::pair<int, ExpVec>& b) const {
    if (a.first != b.first) return a.first < b.first;
    return ExpLexLess{}(a.second, b.second);
  }
};

// Index space for FG window algebra: (generator, exponent) -> dense index.
struct WindowIndex {
  std::map<std::pair<int, ExpVec>, int, GenExpLess> idx;
  std::vector<std::pair<int, ExpVec>> back;

  int get(int gen, const ExpVec& e) {
    auto key = std::make_pair(gen, e);
    auto it = idx.find(key);
    if (it != idx.end()) return it->second;
    int id = static_cast<int>(back.size());
    idx.emplace(key, id);
    back.push_back(key);
    return id;
  }
};

}  // namespace

CyclicModulePresentation make_cyclic(AlgebraPtr alg, std::vector<TorusElement> relations) {
  for (const auto& r : relations) {
    if (r.is_zero()) throw std::invalid_argument("module relation must be nonzero");
    if (*r.algebra() != *alg) throw std::invalid_argument("relation from wrong algebra");
  }
  return CyclicModulePresentation{std::move(alg), std::move(relations)};
}

FGModulePresentation direct_sum(const CyclicModulePresentation& m1,
                                const CyclicModulePresentation& m2) {
  if (*m1.algebra != *m2.algebra) throw std::invalid_argument("direct sum: algebra mismatch");
  FGModulePresentation out;
  out.algebra = m1.algebra;
  out.generators = 2;
  TorusElement zero = TorusElement::zero(m1.algebra);
  for (const auto& r : m1.relations) out.rows.push_back({r, zero});
  for (const auto& r : m2.relations) out.rows.push_back({zero, r});
  return out;
}

std::optional<TorusElement> fg_torsion_witness(const FGModulePresentation& m,
                                               const Sublattice& b, long degree_bound,
                                               int gen) {
  const AlgebraPtr& alg = m.algebra;
  const int n = alg->rank();
  if (b.ambient_rank() != n) throw std::invalid_argument("sublattice in wrong ambient rank");
  if (gen < 0 || gen >= m.generators) throw std::out_of_range("generator index");

  auto w = std::make_shared<WindowIndex>();
  // A coordinate may serve as a pivot unless the witness may occupy it:
  // generator `gen` with exponent inside B.
  detail::SparseEchelon<RatFunc> ech([w, &b, gen](int id) {
    const auto& [g, e] = w->back[id];
    if (g != gen) return true;
    return !b.contains(to_vecz(e));
  });

  for (const ExpVec& e : box_exponents(n, degree_bound)) {
    TorusElement shift = TorusElement::monomial(alg, e);
    for (const auto& row : m.rows) {
      Row full;
      for (int g = 0; g < m.generators; ++g) {
        if (row[g].is_zero()) continue;
        TorusElement prod = row[g] * shift;
        for (const auto& [ee, c] : prod.terms()) full.push_back({w->get(g, ee), c});
      }
      Row reduced = full;
      if (!ech.insert(reduced) && !reduced.empty()) {
        // No eligible pivot left: supported on (gen, B) only -- a witness.
        TorusElement beta(alg);
        for (const auto& [id, c] : reduced) beta.add_term(w->back[id].second, c);
        for (const auto& [e2, c2] : beta.terms())
          if (!b.contains(to_vecz(e2)))
            throw std::logic_error("torsion witness: support escaped B");
        if (beta.is_zero()) throw std::logic_error("torsion witness: zero after rebuild");
        return beta;
      }
    }
  }
  return std::nullopt;
}

std::optional<TorusElement> torsion_witness(const CyclicModulePresentation& m,
                                            const Sublattice& b, long degree_bound) {
  FGModulePresentation fg;
  fg.algebra = m.algebra;
  fg.generators = 1;
  for (const auto& r : m.relations) fg.rows.push_back({r});
  return fg_torsion_witness(fg, b, degree_bound, 0);
}

bool ideal_contains_one(const CyclicModulePresentation& m, long degree_bound) {
  const AlgebraPtr& alg = m.algebra;
  const int n = alg->rank();
  WindowIndex w;
  detail::SparseEchelon<RatFunc> ech;
  for (const ExpVec& e : box_exponents(n, degree_bound)) {
    TorusElement shift = TorusElement::monomial(alg, e);
    for (const auto& r : m.relations) {
      TorusElement prod = r * shift;
      Row row;
      for (const auto& [ee, c] : prod.terms()) row.push_back({w.get(0, ee), c});
      ech.insert(row);
    }
  }
  Row one;
  one.push_back({w.get(0, exp_zero(n)), alg->coeff_one()});
  return ech.in_span(one);
}

namespace {

// Coordinate sublattices of every rank plus their images under a fixed
// unimodular family, deduplicated, grouped by rank.
std::vector<std::vector<Sublattice>> sublattice_test_set(int n, bool unimodular_images) {
  std::vector<std::vector<Sublattice>> by_rank(n + 1);
  std::vector<MatZ> mats = unimodular_images ? unimodular_test_set(n)
                                             : std::vector<MatZ>{MatZ::Identity(n, n)};
  for (unsigned mask = 1; mask < (1u << n); ++mask) {
    std::vector<int> rows;
    for (int i = 0; i < n; ++i)
      if (mask & (1u << i)) rows.push_back(i);
    for (const MatZ& u : mats) {
      MatZ basis(rows.size(), n);
      for (std::size_t i = 0; i < rows.size(); ++i) basis.row(i) = u.row(rows[i]);
      Sublattice s(n, basis);
      auto& bucket = by_rank[s.rank()];
      if (std::find(bucket.begin(), bucket.end(), s) == bucket.end()) bucket.push_back(s);
    }
  }
  return by_rank;
}

}  // namespace

GKResult gk_dimension(const CyclicModulePresentation& m, const SearchBounds& bounds) {
  const int n = m.algebra->rank();
  GKResult res;
  res.search_bound = bounds.degree_bound;

  if (m.free()) {
    res.lower = res.upper = n;
    res.exact = true;
    res.method = GKResult::Method::FreeModule;
    res.note = "free module";
    return res;
  }
  bool unit_relation = false;
  for (const auto& r : m.relations)
    if (is_unit(r)) unit_relation = true;
  if (unit_relation || ideal_contains_one(m, bounds.degree_bound)) {
    res.lower = res.upper = 0;
    res.exact = true;
    res.zero_module = true;
    res.method = GKResult::Method::ZeroModule;
    res.note = "zero module (1 lies in the relation ideal)";
    return res;
  }
  if (m.principal()) {
    DeltaApprox d = delta_principal(m);
    res.lower = res.upper = fan_dimension(d.fan());
    res.exact = true;
    res.method = GKResult::Method::PrincipalDelta;
    res.note = "dimension of the exact Delta fan";
    return res;
  }

  // Bracket route. dim = n iff the module is free, so any nonzero relation
  // witnesses upper = n-1.
  res.method = GKResult::Method::Bracket;
  res.upper = n - 1;
  res.upper_witnesses.emplace_back(Sublattice::full(n), m.relations.front());
  auto by_rank = sublattice_test_set(n, bounds.unimodular_images);
  res.lower = 0;
  for (int r = n - 1; r >= 1; --r) {
    bool found_free = false;
    for (const Sublattice& b : by_rank[r]) {
      auto witness = torsion_witness(m, b, bounds.degree_bound);
      if (witness) {
        res.upper_witnesses.emplace_back(b, *witness);
      } else {
        res.lower = r;
        res.lower_evidence = b;
        found_free = true;
        break;
      }
    }
    if (found_free) break;
  }
  res.exact = (res.lower == res.upper);
  res.note = "bracket: evidence-based lower bound, relation-certified upper bound";
  return res;
}

bool dim_exactness_check(const CyclicModulePresentation& m1, const CyclicModulePresentation& m2,
                         const SearchBounds& bounds) {
  GKResult g1 = gk_dimension(m1, bounds);
  GKResult g2 = gk_dimension(m2, bounds);
  if (!g1.exact || !g2.exact) throw std::invalid_argument("dim_exactness_check: inputs not exact");
  int expected = std::max(g1.zero_module ? 0 : g1.lower, g2.zero_module ? 0 : g2.lower);
  if (g1.zero_module && g2.zero_module) expected = 0;

  // gk of the direct sum via the union of the Delta fans; each summand is in
  // an exact class (zero, free, or principal).
  const int n = m1.algebra->rank();
  auto fan_of = [&](const CyclicModulePresentation& m, const GKResult& g) {
    RationalFan fan(n);
    if (g.zero_module) return fan;  // empty
    if (m.free()) {
      fan.add(RationalCone::full(n));
      return fan;
    }
    return delta_principal(m).fan();
  };
  RationalFan f1 = fan_of(m1, g1), f2 = fan_of(m2, g2);
  RationalFan u(n);
  for (const auto& c : f1.cones()) u.add(c);
  for (const auto& c : f2.cones()) u.add(c);
  u.reduce();
  int sum_gk = u.empty() ? 0 : fan_dimension(u);
  if (sum_gk != expected) return false;

  // Consistency of the torsion view on the direct-sum presentation: over a
  // sublattice whose rank exceeds the expected gk, at least one tested
  // lattice must not leave both generators torsion-free... torsion of the
  // sum means witnesses for BOTH generators; we confirm that whenever both
  // witnesses exist the rank does not exceed the fan-certified upper bound
  // in a contradictory way (witnesses at rank r only show torsion, which is
  // consistent for r > gk; a missing witness at rank <= gk is consistent
  // evidence). The hard check above is the fan equality; here we re-verify
  // returned witnesses.
  FGModulePresentation ds = direct_sum(m1, m2);
  auto by_rank = sublattice_test_set(n, false);
  for (int r = 1; r <= n; ++r)
    for (const Sublattice& b : by_rank[r])
      for (int g = 0; g < 2; ++g) {
        auto wit = fg_torsion_witness(ds, b, bounds.degree_bound, g);
        if (!wit) continue;
        for (const auto& [e, c] : wit->terms())
          if (!b.contains(to_vecz(e))) return false;
      }
  return true;
}

bool filtration_verify(const FGModulePresentation& m, const VecQ& phi,
                       const std::vector<Rat>& weights, long window) {
  const AlgebraPtr& alg = m.algebra;
  const int n = alg->rank();
  if (phi.size() != n) throw std::invalid_argument("character length mismatch");
  if (static_cast<int>(weights.size()) != m.generators)
    throw std::invalid_argument("one weight per generator required");
  if (window < 1) throw std::invalid_argument("empty window");
  if (phi.isZero()) return true;  // 0 always lies in Delta

  auto phi_of = [&](const ExpVec& e) {
    Rat v = 0;
    for (int i = 0; i < n; ++i) v += phi[i] * Rat(static_cast<long>(e[i]));
    return v;
  };
  auto in_window = [&](const ExpVec& e) {
    for (int i = 0; i < n; ++i)
      if (e[i] < -window || e[i] > window) return false;
    return true;
  };

  WindowIndex w;
  detail::SparseEchelon<RatFunc> relations;
  for (const ExpVec& e : box_exponents(n, window)) {
    TorusElement shift = TorusElement::monomial(alg, e);
    for (const auto& row : m.rows) {
      Row full;
      bool inside = true;
      for (int g = 0; g < m.generators && inside; ++g) {
        if (row[g].is_zero()) continue;
        TorusElement prod = row[g] * shift;
        for (const auto& [ee, c] : prod.terms()) {
          if (!in_window(ee)) {
            inside = false;
            break;
          }
          full.push_back({w.get(g, ee), c});
        }
      }
      if (inside) relations.insert(full);
    }
  }

  auto reduced_monomial = [&](int g, const ExpVec& e) {
    Row r;
    r.push_back({w.get(g, e), alg->coeff_one()});
    return relations.reduce(r);
  };
  auto reduced_element = [&](int g, const TorusElement& x) {
    Row r;
    for (const auto& [ee, c] : x.terms()) r.push_back({w.get(g, ee), c});
    return relations.reduce(detail::SparseEchelon<RatFunc>::normalize(std::move(r)));
  };

  // generator monomials with weights, sorted by descending weight
  std::vector<std::pair<Rat, std::pair<int, ExpVec>>> items;
  for (int g = 0; g < m.generators; ++g)
    for (const ExpVec& e : box_exponents(n, window))
      items.push_back({weights[g] + phi_of(e), {g, e}});
  std::sort(items.begin(), items.end(), [](const auto& a, const auto& b) {
    if (a.first != b.first) return a.first > b.first;
    return GenExpLess{}(a.second, b.second);
  });

  std::vector<Rat> values;
  for (const auto& it : items)
    if (values.empty() || values.back() != it.first) values.push_back(it.first);

  // L(mu), built incrementally from the largest threshold down.
  detail::SparseEchelon<RatFunc> level;
  std::size_t consumed = 0;
  std::vector<int> level_rank;
  std::vector<std::size_t> level_end;  // items consumed at each level
  for (const Rat& mu : values) {
    while (consumed < items.size() && items[consumed].first >= mu) {
      const auto& [g, e] = items[consumed].second;
      Row r = reduced_monomial(g, e);
      level.insert(r);
      ++consumed;
    }
    level_rank.push_back(level.rank());
    level_end.push_back(consumed);
  }
  const int full_rank = level_rank.back();
  if (full_rank == 0) return false;  // module vanishes in the window

  // (C1) ranks nondecreasing as mu drops: holds by construction.
  // (C2) the lowest level spans everything: also by construction here.
  // (C4) every level strictly above the minimum weight must be proper.
  for (std::size_t vi = 0; vi + 1 < values.size(); ++vi)
    if (level_rank[vi] >= full_rank) return false;
  if (values.size() == 1) return false;  // single level cannot be proper

  // (C3) L_mu * u_a == L_{mu + phi(a)} on the inner window, both inclusions,
  // for a = +/- e_i on a sample of levels.
  auto build_level = [&](const Rat& mu) {
    detail::SparseEchelon<RatFunc> ech;
    for (const auto& it : items) {
      if (it.first < mu) break;
      Row r = reduced_monomial(it.second.first, it.second.second);
      ech.insert(r);
    }
    return ech;
  };
  std::size_t step = values.size() <= 8 ? 1 : values.size() / 8;
  for (std::size_t vi = 0; vi < values.size(); vi += step) {
    const Rat& mu = values[vi];
    for (int dir = 0; dir < 2 * n; ++dir) {
      int axis = dir / 2;
      long sign = (dir % 2 == 0) ? 1 : -1;
      ExpVec a = exp_zero(n);
      a[axis] = sign;
      Rat target = mu + phi_of(a);
      auto target_level = build_level(target);
      // forward: members of L_mu shifted by a stay in L_target
      for (std::size_t k = 0; k < level_end[vi]; ++k) {
        const auto& [g, e] = items[k].second;
        if (!in_window(e + a)) continue;
        TorusElement prod = TorusElement::monomial(alg, e) * TorusElement::monomial(alg, a);
        if (!target_level.in_span(reduced_element(g, prod))) return false;
      }
      // reverse: members of L_target shifted by -a land in L_mu
      auto source_level = build_level(mu);
      for (const auto& it : items) {
        if (it.first < target) break;
        const auto& [g, e] = it.second;
        if (!in_window(e - a)) continue;
        TorusElement prod = TorusElement::monomial(alg, e) * monomial_inverse(alg, a);
        if (!source_level.in_span(reduced_element(g, prod))) return false;
      }
    }
  }
  return true;
}

CyclicModulePresentation tensor_module(const CyclicModulePresentation& m1,
                                       const CyclicModulePresentation& m2) {
  AlgebraPtr alg = tensor_algebra(m1.algebra, m2.algebra);
  const int n1 = m1.algebra->rank(), n2 = m2.algebra->rank();
  std::vector<TorusElement> relations;
  for (const auto& r : m1.relations) {
    TorusElement x(alg);
    for (const auto& [e, c] : r.terms()) {
      ExpVec full = exp_zero(n1 + n2);
      full.head(n1) = e;
      x.add_term(full, c);
    }
    relations.push_back(x);
  }
  for (const auto& r : m2.relations) {
    TorusElement x(alg);
    for (const auto& [e, c] : r.terms()) {
      ExpVec full = exp_zero(n1 + n2);
      full.tail(n2) = e;
      x.add_term(full, c);
    }
    relations.push_back(x);
  }
  return CyclicModulePresentation{alg, std::move(relations)};
}

}  // namespace qtorus
