#include <doctest.h>

#include "k3fm/errors.hpp"
#include "k3fm/mukai.hpp"
#include "test_helpers.hpp"

using namespace k3fm;
using k3fm::testing::Rng;

namespace {

MukaiVector mv(long r, Vec c1, long s) {
  return MukaiVector{Int(r), std::move(c1), Int(s)};
}

MukaiVector rand_vector(Rng& rng, std::size_t rho, long amp = 5) {
  MukaiVector v = mukai_zero(rho);
  v.r = testing::rand_int(rng, -amp, amp);
  v.s = testing::rand_int(rng, -amp, amp);
  for (std::size_t i = 0; i < rho; ++i)
    v.c1[i] = testing::rand_int(rng, -amp, amp);
  return v;
}

}  // namespace

TEST_CASE("mukai pairing identities") {
  MukaiLattice l(Lattice::validate(IntMat{{0, 1}, {1, 0}}));
  MukaiVector e = mv(1, {Int(0), Int(0)}, 0);
  MukaiVector pt = mv(0, {Int(0), Int(0)}, 1);
  CHECK(mukai_pairing(l, e, pt) == -1);
  CHECK(mukai_pairing(l, e, e) == 0);

  MukaiLattice m(Lattice::validate(IntMat{{-2}}));
  MukaiVector sph = mv(0, {Int(1)}, 1);  // (0, C, 1) with C^2 = -2
  CHECK(mukai_pairing(m, sph, sph) == -2);
}

TEST_CASE("pairing is symmetric and bilinear") {
  Rng rng(21);
  for (int iter = 0; iter < 40; ++iter) {
    std::size_t rho = 1 + iter % 4;
    MukaiLattice l(testing::random_even_lattice(rng, rho));
    MukaiVector u = rand_vector(rng, rho), v = rand_vector(rng, rho),
                w = rand_vector(rng, rho);
    CHECK(mukai_pairing(l, u, v) == mukai_pairing(l, v, u));
    MukaiVector sum = MukaiVector::from_coords(add(v.coords(), w.coords()));
    CHECK(mukai_pairing(l, u, sum) ==
          mukai_pairing(l, u, v) + mukai_pairing(l, u, w));
    // against the assembled Gram matrix
    CHECK(mukai_pairing(l, u, v) == pairing(l.gram(), u.coords(), v.coords()));
    // even NS lattice makes every self-pairing even
    CHECK(euler_pairing(l, u, u) % 2 == 0);
  }
}

TEST_CASE("mukai vector of sheaf data") {
  MukaiLattice l(Lattice::validate(IntMat{{0, 1}, {1, 0}}));
  Vec zero{Int(0), Int(0)};
  CHECK(mukai_vector(l, 1, zero, 0) == mv(1, zero, 1));
  CHECK(mukai_vector(l, 2, zero, -2) == mv(2, zero, 4));

  // s - r = c1^2/2 - c2 identically
  Rng rng(22);
  for (int iter = 0; iter < 30; ++iter) {
    std::size_t rho = 1 + iter % 3;
    MukaiLattice m(testing::random_even_lattice(rng, rho));
    Vec c1(rho);
    for (auto& c : c1) c = testing::rand_int(rng, -4, 4);
    Int c2 = testing::rand_int(rng, -5, 5);
    MukaiVector v = mukai_vector(m, testing::rand_int(rng, -3, 3), c1, c2);
    CHECK((v.s - v.r) * 2 == m.ns().norm(c1) - 2 * c2);
  }

  // a (-2)-curve class with c2 arranged so the last component is 1
  MukaiLattice neg(Lattice::validate(IntMat{{-2}}));
  CHECK(mukai_vector(neg, 0, Vec{Int(1)}, -2) == mv(0, {Int(1)}, 1));

  MukaiLattice odd(Lattice::validate(IntMat{{1}}));
  CHECK_THROWS_AS(mukai_vector(odd, 1, Vec{Int(1)}, 0), validation_error);
}

TEST_CASE("euler pairing") {
  MukaiLattice l(Lattice::validate(IntMat{{0, 1}, {1, 0}}));
  Vec zero{Int(0), Int(0)};
  MukaiVector structure = mv(1, zero, 1);
  MukaiVector pt = mv(0, zero, 1);
  CHECK(euler_pairing(l, structure, structure) == 2);  // chi(O, O)
  CHECK(euler_pairing(l, pt, structure) == 1);
  CHECK(euler_pairing(l, pt, pt) == 0);
}

TEST_CASE("deformation dimension") {
  MukaiLattice l(Lattice::validate(IntMat{{0, 1}, {1, 0}}));
  Vec zero{Int(0), Int(0)};
  CHECK(deformation_dimension(l, mv(1, zero, 1)) == 0);  // rigid
  CHECK(deformation_dimension(l, mv(0, zero, 1)) == 2);  // skyscraper

  MukaiLattice m(Lattice::validate(IntMat{{2}}));
  MukaiVector v = mv(0, {Int(1)}, 0);  // v^2 = 2
  REQUIRE(mukai_pairing(m, v, v) == 2);
  CHECK(deformation_dimension(m, v) == 4);
}

TEST_CASE("isometry recognition") {
  MukaiLattice l(Lattice::validate(IntMat{{0, 1}, {1, 0}}));
  std::size_t n = l.total_rank();
  CHECK(is_isometry(IntMat::identity(n), l));
  CHECK(is_isometry(-IntMat::identity(n), l));

  // swap the two outer coordinates, identity on NS
  IntMat swap(n, n);
  swap(0, n - 1) = 1;
  swap(n - 1, 0) = 1;
  for (std::size_t i = 1; i + 1 < n; ++i) swap(i, i) = 1;
  CHECK(is_isometry(swap, l));

  IntMat bad = IntMat::identity(n);
  bad(0, 0) = 2;
  CHECK_FALSE(is_isometry(bad, l));
  CHECK_THROWS_AS(is_isometry(IntMat::identity(3), l), validation_error);
}

TEST_CASE("apply and compose") {
  MukaiLattice l(Lattice::validate(IntMat{{0, 1}, {1, 0}}));
  Isometry id = Isometry::identity(l);
  MukaiVector v = mv(1, {Int(0), Int(0)}, 1);
  CHECK(id.apply(v) == v);

  Isometry neg = Isometry::validate(l, -IntMat::identity(l.total_rank()));
  CHECK(neg.apply(v) == mv(-1, {Int(0), Int(0)}, -1));
  CHECK(compose(neg, neg).matrix().is_identity());
}

TEST_CASE("mukai lattice rank and signature") {
  Rng rng(23);
  for (int iter = 0; iter < 20; ++iter) {
    std::size_t rho = 1 + iter % 5;
    Lattice ns = testing::random_even_lattice(rng, rho);
    MukaiLattice l(ns);
    CHECK(l.total_rank() == rho + 2);
    Signature inner = signature(ns);
    Signature outer = signature(Lattice::validate(l.gram()));
    CHECK(outer.positive == inner.positive + 1);
    CHECK(outer.negative == inner.negative + 1);
  }
}
