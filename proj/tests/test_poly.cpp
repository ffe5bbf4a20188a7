#include "qtorus/ratfunc.hpp"

#include "doctest.h"

#include <random>

using namespace qtorus;

namespace {

MultiPoly mono(int nvars, std::initializer_list<long> exps, long c) {
  ExpVec e(nvars);
  auto it = exps.begin();
  for (int i = 0; i < nvars; ++i) e[i] = *it++;
  return MultiPoly::monomial(nvars, e, Int(c));
}

MultiPoly random_poly(std::mt19937& rng, int nvars, int max_terms, long max_deg, long cmax) {
  std::uniform_int_distribution<int> nterms(1, max_terms);
  std::uniform_int_distribution<long> deg(0, max_deg);
  std::uniform_int_distribution<long> coeff(-cmax, cmax);
  MultiPoly p(nvars);
  int k = nterms(rng);
  for (int t = 0; t < k; ++t) {
    ExpVec e(nvars);
    for (int i = 0; i < nvars; ++i) e[i] = deg(rng);
    long c = coeff(rng);
    if (c != 0) p.add_term(e, Int(c));
  }
  return p;
}

}  // namespace

TEST_CASE("polynomial arithmetic basics") {
  MultiPoly x = MultiPoly::variable(2, 0);
  MultiPoly y = MultiPoly::variable(2, 1);
  MultiPoly p = x * x - y * y;
  MultiPoly q = (x - y) * (x + y);
  CHECK(p == q);
  CHECK(p.total_degree() == 2);
  CHECK((p - q).is_zero());
  CHECK(p.to_string({"x", "y"}) == "x^2-y^2");
}

TEST_CASE("exact division") {
  MultiPoly x = MultiPoly::variable(1, 0);
  MultiPoly a = x * x * x - MultiPoly::constant(1, 1);
  MultiPoly b = x - MultiPoly::constant(1, 1);
  MultiPoly q = divide_exact(a, b);
  CHECK(q * b == a);
  CHECK_THROWS_AS(divide_exact(x, x * x), std::domain_error);
}

TEST_CASE("gcd: integers and univariate") {
  CHECK(poly_gcd(MultiPoly::constant(0, 12), MultiPoly::constant(0, -18)).leading_coefficient() ==
        6);
  MultiPoly x = MultiPoly::variable(1, 0);
  MultiPoly one = MultiPoly::constant(1, 1);
  MultiPoly a = (x - one) * (x + one);
  MultiPoly b = (x - one) * (x * x + x + one);
  MultiPoly g = poly_gcd(a, b);
  CHECK(g == x - one);
}

TEST_CASE("gcd: planted common factors, randomized") {
  std::mt19937 rng(71);
  for (int trial = 0; trial < 60; ++trial) {
    int nvars = 1 + trial % 2;
    MultiPoly g = random_poly(rng, nvars, 3, 2, 3);
    if (g.is_zero()) continue;
    MultiPoly a = random_poly(rng, nvars, 3, 2, 3);
    MultiPoly b = random_poly(rng, nvars, 3, 2, 3);
    if (a.is_zero() || b.is_zero()) continue;
    MultiPoly ga = a * g, gb = b * g;
    MultiPoly d = poly_gcd(ga, gb);
    // g divides the gcd, and the gcd divides both products
    CHECK_NOTHROW(divide_exact(d, poly_gcd(d, g)));
    CHECK_NOTHROW(divide_exact(ga, d));
    CHECK_NOTHROW(divide_exact(gb, d));
    // the gcd is a multiple of g up to the gcd of the cofactors
    MultiPoly dg = poly_gcd(d, g);
    CHECK(divide_exact(g, dg).is_constant());
  }
}

TEST_CASE("rational function canonical forms") {
  RatFunc half = RatFunc::from_rat(0, Rat(1, 2));
  CHECK((half + half).is_one());
  CHECK((half - half).is_zero());
  CHECK((half * RatFunc::from_rat(0, 2)).is_one());

  RatFunc t = RatFunc::variable(1, 0);
  RatFunc f = (t * t - RatFunc::from_rat(1, 1)) / (t - RatFunc::from_rat(1, 1));
  // reduces to t + 1
  CHECK(f == t + RatFunc::from_rat(1, 1));
  CHECK(f.to_string({"t"}) == "(t+1)");

  RatFunc r = RatFunc::from_rat(1, Rat(-6, 4));
  CHECK(r.to_string({"t"}) == "-3/2");
  CHECK((t / t).is_one());
  CHECK_THROWS_AS(t / RatFunc(1), std::domain_error);
}

TEST_CASE("field axioms on random rational functions") {
  std::mt19937 rng(73);
  for (int trial = 0; trial < 40; ++trial) {
    int nvars = trial % 2;
    auto rnd = [&] {
      MultiPoly n = random_poly(rng, nvars, 2, 2, 4);
      MultiPoly d = random_poly(rng, nvars, 2, 2, 4);
      if (d.is_zero()) d = MultiPoly::constant(nvars, 1);
      return RatFunc(n, d);
    };
    RatFunc a = rnd(), b = rnd(), c = rnd();
    CHECK((a + b) * c == a * c + b * c);
    CHECK(a + (b + c) == (a + b) + c);
    CHECK(a * (b * c) == (a * b) * c);
    if (!a.is_zero()) CHECK((a * a.inverse()).is_one());
  }
}

TEST_CASE("variable scaling is a field automorphism") {
  RatFunc t = RatFunc::variable(1, 0);
  RatFunc one = RatFunc::from_rat(1, 1);
  std::vector<Rat> two = {Rat(2)};
  // sigma(t) = 2t
  CHECK((t.scale_vars(two)) == t * RatFunc::from_rat(1, 2));
  RatFunc f = (t + one) / t;
  RatFunc g = (t * RatFunc::from_rat(1, 2) + one) / (t * RatFunc::from_rat(1, 2));
  CHECK(f.scale_vars(two) == g);
  // sigma(f*h) = sigma(f)*sigma(h)
  RatFunc h = t * t - one;
  CHECK((f * h).scale_vars(two) == f.scale_vars(two) * h.scale_vars(two));
}

TEST_CASE("rational function power") {
  RatFunc t = RatFunc::variable(2, 1);
  CHECK(t.pow(3) == t * t * t);
  CHECK(t.pow(-2) == (t * t).inverse());
  CHECK(t.pow(0).is_one());
}
