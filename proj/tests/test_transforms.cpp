#include <doctest.h>

#include "k3fm/errors.hpp"
#include "k3fm/transforms.hpp"
#include "test_helpers.hpp"

using namespace k3fm;
using k3fm::testing::Rng;

namespace {

MukaiVector mv(long r, Vec c1, long s) {
  return MukaiVector{Int(r), std::move(c1), Int(s)};
}

const IntMat kU{{0, 1}, {1, 0}};

}  // namespace

TEST_CASE("line bundle twist") {
  MukaiLattice l(Lattice::validate(kU));
  Vec b{Int(1), Int(2)};
  Int bsq = l.ns().norm(b);  // 2 * 1 * 2 = 4
  REQUIRE(bsq == 4);
  Transform tw = line_bundle_twist(l, b);
  CHECK(tw.apply(mv(1, {Int(0), Int(0)}, 0)) == mv(1, b, 2));  // (1, b, b^2/2)
  CHECK(tw.apply(mv(0, {Int(0), Int(0)}, 1)) == mv(0, {Int(0), Int(0)}, 1));

  Transform back = line_bundle_twist(l, negate(b));
  CHECK(compose(back, tw).matrix().is_identity());
}

TEST_CASE("twist is a homomorphism") {
  Rng rng(31);
  for (int iter = 0; iter < 30; ++iter) {
    std::size_t rho = 1 + iter % 4;
    MukaiLattice l(testing::random_even_lattice(rng, rho));
    Vec b1(rho), b2(rho);
    for (auto& c : b1) c = testing::rand_int(rng, -3, 3);
    for (auto& c : b2) c = testing::rand_int(rng, -3, 3);
    IntMat lhs = compose(line_bundle_twist(l, b1), line_bundle_twist(l, b2)).matrix();
    IntMat rhs = line_bundle_twist(l, add(b1, b2)).matrix();
    CHECK(lhs == rhs);
  }
}

TEST_CASE("spherical twist, both squares") {
  MukaiLattice neg(Lattice::validate(IntMat{{-2}}));
  MukaiVector v = mv(0, {Int(1)}, 1);  // (0, C, 1), C^2 = -2
  REQUIRE(mukai_pairing(neg, v, v) == -2);
  Transform t = spherical_twist(neg, v);
  CHECK(t.apply(mv(0, {Int(0)}, 1)) == mv(0, {Int(0)}, 1));  // fixes the point class
  MukaiVector img = t.apply(v);
  CHECK(img == mv(0, {Int(-1)}, -1));  // reflection negates its root
  CHECK(compose(t, t).matrix().is_identity());

  MukaiLattice pos(Lattice::validate(IntMat{{2}}));
  MukaiVector w = mv(0, {Int(1)}, 0);
  REQUIRE(mukai_pairing(pos, w, w) == 2);
  Transform tp = spherical_twist(pos, w);
  CHECK(tp.apply(w) == mv(0, {Int(-1)}, 0));
  CHECK(compose(tp, tp).matrix().is_identity());

  CHECK_THROWS_AS(spherical_twist(pos, mv(0, {Int(2)}, 0)), validation_error);
}

TEST_CASE("minus one on the Picard block") {
  MukaiLattice l(Lattice::validate(kU));
  Transform m = minus_one_pic(l);
  CHECK(m.apply(mv(1, {Int(2), Int(-1)}, 0)) == mv(1, {Int(-2), Int(1)}, 0));
  CHECK(m.apply(mv(0, {Int(0), Int(0)}, 1)) == mv(0, {Int(0), Int(0)}, 1));
  CHECK(compose(m, m).matrix().is_identity());
}

TEST_CASE("shift") {
  MukaiLattice l(Lattice::validate(kU));
  Transform s = shift(l);
  CHECK(s.apply(mv(2, {Int(1), Int(-3)}, 5)) == mv(-2, {Int(-1), Int(3)}, -5));
  CHECK(compose(s, s).matrix().is_identity());
}

TEST_CASE("outer swap") {
  MukaiLattice l(Lattice::validate(kU));
  Transform sw = swap_outer(l);
  CHECK(sw.apply(mv(1, {Int(0), Int(0)}, 0)) == mv(0, {Int(0), Int(0)}, 1));
  CHECK(sw.apply(mv(5, {Int(1), Int(2)}, 3)) == mv(3, {Int(-1), Int(-2)}, 5));
  CHECK(compose(sw, sw).matrix().is_identity());
  // provenance replays
  CHECK(replay_word(l, sw.word()).matrix() == sw.matrix());
}

TEST_CASE("compose applies its second argument first") {
  MukaiLattice l(Lattice::validate(kU));
  Transform tw = line_bundle_twist(l, Vec{Int(1), Int(0)});
  Transform sw = swap_outer(l);
  MukaiVector v = mv(1, {Int(0), Int(0)}, 0);
  CHECK(compose(sw, tw).apply(v) == sw.apply(tw.apply(v)));
  CHECK(!(compose(sw, tw).matrix() == compose(tw, sw).matrix()));
}

TEST_CASE("root enumeration") {
  RootSet r1 = enumerate_roots(Lattice::validate(IntMat{{-2}}), 1);
  REQUIRE(r1.roots.size() == 1);
  CHECK(r1.roots[0] == Vec{Int(1)});

  RootSet r2 = enumerate_roots(Lattice::validate(IntMat{{2, 0}, {0, -2}}), 1);
  REQUIRE(r2.roots.size() == 1);
  CHECK(r2.roots[0] == Vec{Int(0), Int(1)});

  CHECK(enumerate_roots(Lattice::validate(IntMat{{2}}), 5).roots.empty());

  // all reported roots square to -2, canonically signed, within the bound
  Rng rng(32);
  for (int iter = 0; iter < 10; ++iter) {
    auto sample = testing::random_hyperbolic(rng, 2 + iter % 3);
    RootSet rs = enumerate_roots(sample.lattice, 3);
    for (const Vec& d : rs.roots) {
      CHECK(sample.lattice.norm(d) == -2);
      std::size_t lead = 0;
      while (lead < d.size() && d[lead] == 0) ++lead;
      REQUIRE(lead < d.size());
      CHECK(d[lead] > 0);
    }
  }
}

TEST_CASE("positive cone side") {
  Lattice d = Lattice::validate(IntMat{{2, 0}, {0, -2}});
  CHECK(positive_cone_side(d, {Int(1), Int(0)}, {Int(1), Int(0)}) == 1);
  CHECK(positive_cone_side(d, {Int(-1), Int(0)}, {Int(1), Int(0)}) == -1);
  CHECK(positive_cone_side(d, {Int(2), Int(1)}, {Int(1), Int(0)}) == 1);
  CHECK_THROWS_AS(positive_cone_side(d, {Int(0), Int(1)}, {Int(1), Int(0)}),
                  validation_error);
}

TEST_CASE("chamber walk") {
  Lattice d = Lattice::validate(IntMat{{2, 0}, {0, -2}});
  RootSet roots = RootSet::validate(d, {Vec{Int(0), Int(1)}});
  Vec h{Int(1), Int(0)};

  ChamberWalk w1 = chamber_walk(d, roots, Vec{Int(2), Int(1)}, h);
  REQUIRE(w1.word.size() == 1);
  CHECK_FALSE(w1.word[0].negate);
  CHECK(w1.word[0].root == Vec{Int(0), Int(1)});
  CHECK(w1.image == Vec{Int(2), Int(-1)});

  ChamberWalk w2 = chamber_walk(d, roots, Vec{Int(2), Int(-1)}, h);
  CHECK(w2.word.empty());
  CHECK(w2.image == Vec{Int(2), Int(-1)});

  ChamberWalk w3 = chamber_walk(d, roots, Vec{Int(-2), Int(1)}, h);
  REQUIRE(!w3.word.empty());
  CHECK(w3.word[0].negate);

  // walk output satisfies the chamber inequalities and replays
  Rng rng(33);
  int done = 0;
  for (int iter = 0; iter < 400 && done < 60; ++iter) {
    auto sample = testing::random_hyperbolic(rng, 2 + iter % 3);
    const Lattice& ns = sample.lattice;
    RootSet rs = enumerate_roots(ns, 2);
    Vec hh = testing::find_chamber_vector(ns, rs.roots, 3);
    if (hh.empty()) continue;
    Vec x(ns.rank());
    for (auto& c : x) c = testing::rand_int(rng, -3, 3);
    if (ns.norm(x) <= 0) continue;
    ChamberWalk w;
    try {
      w = chamber_walk(ns, rs, x, hh, 4000);
    } catch (const computation_error&) {
      continue;  // incomplete root set can legitimately exhaust the budget
    }
    ++done;
    for (const Vec& dd : rs.roots) CHECK(ns.pair(w.image, dd) >= 0);
    CHECK(ns.pair(w.image, hh) > 0);
    Vec y = x;
    for (const WalkStep& st : w.word)
      y = st.negate ? negate(y) : add(y, scale(ns.pair(y, st.root), st.root));
    CHECK(y == w.image);
  }
  CHECK(done >= 30);
}

TEST_CASE("filtered transforms") {
  MukaiLattice l(Lattice::validate(IntMat{{-2}}));
  CHECK(is_filtered(identity_transform(l)));
  CHECK(is_filtered(spherical_twist(l, mv(0, {Int(1)}, 1))));
  CHECK(is_filtered(shift(l)));  // sends (0,0,1) to -(0,0,1)
  CHECK_FALSE(is_filtered(swap_outer(l)));
}

TEST_CASE("normalization recovers twists") {
  MukaiLattice l(Lattice::validate(IntMat{{2, 0}, {0, -2}}));
  RootSet roots = RootSet::validate(l.ns(), {Vec{Int(0), Int(1)}});
  Vec h{Int(1), Int(0)};

  Vec b{Int(2), Int(1)};
  Transform phi = line_bundle_twist(l, b);
  Normalization nz = normalize(phi, roots, h);
  CHECK(nz.normalized.matrix().is_identity());
  REQUIRE(nz.word.word().size() == 1);
  CHECK(std::get<TwistGen>(nz.word.word()[0]).c1 == negate(b));

  Normalization nid = normalize(identity_transform(l), roots, h);
  CHECK(nid.normalized.matrix().is_identity());
  CHECK(nid.word.word().empty());

  // minus_one_pic sends h out of the chamber; the walk brings it back
  Normalization nm = normalize(minus_one_pic(l), roots, h);
  CHECK(nm.normalized.matrix().is_identity());
  REQUIRE(nm.word.word().size() == 1);
  CHECK(std::holds_alternative<MinusOnePicGen>(nm.word.word()[0]));
}

TEST_CASE("normalize rejects bad inputs") {
  MukaiLattice l(Lattice::validate(kU));
  RootSet roots{{}};
  Vec h{Int(1), Int(1)};
  CHECK_THROWS_AS(normalize(swap_outer(l), roots, h), validation_error);
  CHECK_THROWS_AS(normalize(shift(l), roots, h), validation_error);
}

TEST_CASE("every generated transform is an isometry and words replay") {
  Rng rng(34);
  for (int iter = 0; iter < 50; ++iter) {
    std::size_t rho = 1 + iter % 4;
    MukaiLattice l(testing::random_even_lattice(rng, rho));
    Transform t = identity_transform(l);
    for (int step = 0; step < 6; ++step) {
      switch (testing::rand_int(rng, 0, 3).get_si()) {
        case 0: {
          Vec b(rho);
          for (auto& c : b) c = testing::rand_int(rng, -2, 2);
          t = compose(line_bundle_twist(l, b), t);
          break;
        }
        case 1: {
          Vec b(rho, Int(0));
          Int bsq = l.ns().norm(b);
          MukaiVector v{Int(1), b, (bsq - 2) / 2};  // (1, b, (b^2-2)/2) squares to 2
          t = compose(spherical_twist(l, v), t);
          break;
        }
        case 2:
          t = compose(minus_one_pic(l), t);
          break;
        default:
          t = compose(shift(l), t);
          break;
      }
    }
    CHECK(is_isometry(t.matrix(), l));
    CHECK(replay_word(l, t.word()).matrix() == t.matrix());
  }
}
