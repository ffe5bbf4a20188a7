#include "qtorus/lattice.hpp"

#include "doctest.h"

#include <random>

using namespace qtorus;

namespace {

MatZ make(int r, int c, std::initializer_list<long> vals) {
  MatZ m(r, c);
  auto it = vals.begin();
  for (int i = 0; i < r; ++i)
    for (int j = 0; j < c; ++j) m(i, j) = Int(*it++);
  return m;
}

MatZ random_matz(std::mt19937& rng, int r, int c, int bound) {
  std::uniform_int_distribution<int> d(-bound, bound);
  MatZ m(r, c);
  for (int i = 0; i < r; ++i)
    for (int j = 0; j < c; ++j) m(i, j) = Int(d(rng));
  return m;
}

}  // namespace

TEST_CASE("hermite normal form basics") {
  MatZ a = make(2, 2, {2, 4, 1, 2});
  MatZ h = hermite_normal_form(a);
  CHECK(h.rows() == 1);
  CHECK(h(0, 0) == 1);
  CHECK(h(0, 1) == 2);

  // HNF is canonical: any unimodular row mix of a basis gives the same form.
  MatZ b = make(2, 2, {3, 1, 1, 1});
  MatZ mixed = b;
  mixed.row(0) += Int(5) * mixed.row(1);
  mixed.row(1) -= Int(2) * mixed.row(0);
  CHECK(hermite_normal_form(b) == hermite_normal_form(mixed));
}

TEST_CASE("hermite transform invariant U*A = H") {
  std::mt19937 rng(7);
  for (int trial = 0; trial < 50; ++trial) {
    MatZ a = random_matz(rng, 3, 4, 5);
    auto [h, u] = hermite_with_transform(a);
    CHECK(MatZ(u * a) == h);
    CHECK(abs(det_bareiss(u)) == 1);
  }
}

TEST_CASE("smith normal form: U A V = S with divisor chain") {
  std::mt19937 rng(11);
  for (int trial = 0; trial < 50; ++trial) {
    MatZ a = random_matz(rng, 3, 3, 6);
    SmithResult s = smith_normal_form(a);
    CHECK(MatZ(s.u * a * s.v) == s.s);
    CHECK(abs(det_bareiss(s.u)) == 1);
    CHECK(abs(det_bareiss(s.v)) == 1);
    for (int i = 0; i + 1 < 3; ++i) {
      if (s.s(i + 1, i + 1) != 0) {
        REQUIRE(s.s(i, i) != 0);
        CHECK(s.s(i + 1, i + 1) % s.s(i, i) == 0);
      }
    }
  }
}

TEST_CASE("left kernel") {
  // rows x with x*a = 0 for a = [[1,2],[2,4],[0,0]]
  MatZ a = make(3, 2, {1, 2, 2, 4, 0, 0});
  MatZ k = left_kernel_lattice(a);
  CHECK(k.rows() == 2);
  CHECK(MatZ(k * a).isZero());
}

TEST_CASE("saturation") {
  MatZ b = make(1, 2, {2, 4});
  MatZ s = saturate(b, 2);
  CHECK(s.rows() == 1);
  CHECK(s(0, 0) == 1);
  CHECK(s(0, 1) == 2);
}

TEST_CASE("intersection and sum") {
  MatZ a = make(1, 2, {2, 0});
  MatZ b = make(1, 2, {3, 0});
  MatZ i = lattice_intersect(a, b, 2);
  REQUIRE(i.rows() == 1);
  CHECK(i(0, 0) == 6);
  MatZ s = lattice_sum(a, b);
  REQUIRE(s.rows() == 1);
  CHECK(s(0, 0) == 1);
}

TEST_CASE("lattice membership and coset reduction") {
  MatZ b = make(2, 3, {1, 0, 2, 0, 3, 1});
  VecZ v(3);
  v << Int(2), Int(3), Int(5);
  CHECK(lattice_contains(b, v));
  VecZ w(3);
  w << Int(0), Int(1), Int(0);
  CHECK(!lattice_contains(b, w));
  CHECK(reduce_mod_lattice(v, b).isZero());
}

TEST_CASE("integer solve") {
  MatZ a = make(2, 2, {2, 0, 0, 3});
  VecZ b(2);
  b << Int(4), Int(9);
  auto sol = solve_left_integer(a, b);
  REQUIRE(sol.solvable);
  CHECK(VecZ(a.transpose() * sol.particular) == b);

  VecZ bad(2);
  bad << Int(1), Int(0);
  CHECK(!solve_left_integer(a, bad).solvable);
}

TEST_CASE("bareiss determinant matches cofactor expansion on small cases") {
  MatZ a = make(3, 3, {2, -1, 0, 3, 4, 1, 0, 5, -2});
  // cofactor by hand: 2*(4*-2-1*5) +1*(3*-2-1*0) + 0 = 2*(-13) + (-6) = -32
  CHECK(det_bareiss(a) == -32);
  CHECK(det_bareiss(MatZ::Identity(4, 4)) == 1);
}

TEST_CASE("rational rref and kernels") {
  MatQ a(2, 3);
  a << Rat(1), Rat(2), Rat(3), Rat(2), Rat(4), Rat(6);
  CHECK(rank_q(a) == 1);
  MatQ k = right_kernel_rows(a);
  CHECK(k.rows() == 2);
  for (Eigen::Index i = 0; i < k.rows(); ++i) {
    VecQ prod = a * k.row(i).transpose();
    CHECK(prod.isZero());
  }
}

TEST_CASE("sublattice canonical equality") {
  Sublattice a = Sublattice::span_of(2, {[] { VecZ v(2); v << Int(1), Int(2); return v; }()});
  Sublattice b = Sublattice::span_of(2, {[] { VecZ v(2); v << Int(-1), Int(-2); return v; }()});
  CHECK(a == b);
  CHECK(a.rank() == 1);
  CHECK(Sublattice::full(3).is_full());
  CHECK(Sublattice::zero(3).is_zero());
}

TEST_CASE("ann/ann duality on random lattices up to n = 5") {
  // saturation(B) = ann_subspace(ann_subgroup(B)) is exercised at the
  // presentation level; here: saturate twice is idempotent.
  std::mt19937 rng(23);
  for (int trial = 0; trial < 40; ++trial) {
    int n = 2 + trial % 4;
    MatZ b = random_matz(rng, 2, n, 4);
    MatZ s1 = saturate(b, n);
    CHECK(saturate(s1, n) == s1);
    // saturation contains the original lattice
    CHECK(lattice_subset(hermite_normal_form(b), s1));
  }
}
