#include <doctest.h>

#include "k3fm/errors.hpp"
#include "k3fm/finite_field.hpp"
#include "k3fm/zeta.hpp"
#include "test_helpers.hpp"

using namespace k3fm;
using k3fm::testing::Rng;

namespace {

using Poly = std::vector<Int>;

Poly poly_mul(const Poly& a, const Poly& b) {
  Poly c(a.size() + b.size() - 1, Int(0));
  for (std::size_t i = 0; i < a.size(); ++i)
    for (std::size_t j = 0; j < b.size(); ++j) c[i + j] += a[i] * b[j];
  return c;
}

// (t - root)^mult and quadratic self-dual factors t^2 - a t + q^2
Poly linear_power(const Int& root, int mult) {
  Poly p{Int(1)};
  for (int i = 0; i < mult; ++i) p = poly_mul(p, Poly{-root, Int(1)});
  return p;
}

FrobeniusData frob(long p, long q, const Poly& poly) {
  return FrobeniusData::validate(Int(p), Int(q), poly);
}

// random degree-22 polynomial satisfying the functional equation:
// linear factors (t +- q) and quadratics t^2 - a t + q^2 with |a| <= 2q
Poly random_weil_poly(Rng& rng, long q) {
  Poly poly{Int(1)};
  int deg = 0;
  while (deg < 22) {
    if (deg <= 20 && testing::rand_int(rng, 0, 1) == 1) {
      Int a = testing::rand_int(rng, -2 * q, 2 * q);
      poly = poly_mul(poly, Poly{Int(q) * q, -a, Int(1)});
      deg += 2;
    } else {
      Int sign = (testing::rand_int(rng, 0, 1) == 0) ? Int(q) : Int(-q);
      poly = poly_mul(poly, Poly{-sign, Int(1)});
      deg += 1;
    }
  }
  return poly;
}

}  // namespace

TEST_CASE("frobenius data validation") {
  Poly p22 = linear_power(Int(3), 22);
  FrobeniusData f = frob(3, 3, p22);
  CHECK(f.field_degree() == 1);
  CHECK(f.charpoly()[22] == 1);

  // descending coefficient order is recognized and normalized
  Poly desc(p22.rbegin(), p22.rend());
  CHECK(frob(3, 3, desc) == f);

  CHECK_THROWS_AS(frob(3, 3, Poly(22, Int(1))), validation_error);   // wrong length
  CHECK_THROWS_AS(frob(3, 5, p22), validation_error);                // q not a power of p
  CHECK_THROWS_AS(frob(2, 2, linear_power(Int(2), 22)), validation_error);
  Poly not_monic = p22;
  not_monic[22] = 2;
  CHECK_THROWS_AS(frob(3, 3, not_monic), validation_error);
  Poly zero_head = p22;
  zero_head[0] = 0;
  CHECK_THROWS_AS(frob(3, 3, zero_head), validation_error);
  CHECK(frob(3, 9, linear_power(Int(9), 22)).field_degree() == 2);
}

TEST_CASE("weil validation") {
  WeilReport good = weil_validate(frob(3, 3, linear_power(Int(3), 22)));
  CHECK(good.duality);
  CHECK(good.root_moduli);
  CHECK(good.pass());

  // (t-1)(t-q)^21: wrong constant term and a root of modulus 1
  Poly bad = poly_mul(Poly{Int(-1), Int(1)}, linear_power(Int(3), 21));
  WeilReport r = weil_validate(frob(3, 3, bad));
  CHECK_FALSE(r.root_moduli);
  CHECK_FALSE(r.duality);  // a0 = q^21, not +-q^22

  // self-dual real quadratic passes duality but not the modulus check
  Poly split = poly_mul(Poly{Int(9), Int(-15), Int(1)}, linear_power(Int(3), 20));
  WeilReport r2 = weil_validate(frob(3, 3, split));
  CHECK(r2.duality);
  CHECK_FALSE(r2.root_moduli);

  // alternating-sign constant term passes
  Poly alt = poly_mul(linear_power(Int(5), 11), linear_power(Int(-5), 11));
  WeilReport r3 = weil_validate(frob(5, 5, alt));
  CHECK(r3.duality);
  CHECK(r3.root_moduli);
}

TEST_CASE("point counts and traces") {
  FrobeniusData f = frob(3, 3, linear_power(Int(3), 22));
  CHECK(h2_trace(f, 1) == 66);
  CHECK(point_count(f, 1) == 76);  // 1 + 9 + 66
  CHECK(point_count(f, 2) == 280); // 1 + 81 + 198
  CHECK(mukai_trace(f, 1) == 72);  // 66 + 2*3
  CHECK(mukai_trace(f, 2) == 216); // 198 + 2*9

  // the prime-field correction 2p for a trace-zero polynomial over F_p, p = 5
  FrobeniusData z =
      frob(5, 5, poly_mul(linear_power(Int(5), 11), linear_power(Int(-5), 11)));
  CHECK(h2_trace(z, 1) == 0);
  CHECK(mukai_trace(z, 1) == 10);

  // all-q polynomial: closed form 1 + 22 q^n + q^{2n} up to n = 10
  for (long q : {3L, 5L}) {
    FrobeniusData allq = frob(q, q, linear_power(Int(q), 22));
    for (unsigned long n = 1; n <= 10; ++n)
      CHECK(point_count(allq, n) ==
            1 + 22 * pow_int(Int(q), n) + pow_int(Int(q), 2 * n));
  }

  CHECK_THROWS_AS(point_count(f, 0), validation_error);
  Poly bad = poly_mul(Poly{Int(-1), Int(1)}, linear_power(Int(3), 21));
  CHECK_THROWS_AS(point_count(frob(3, 3, bad), 1), validation_error);
}

TEST_CASE("fermat quartic counts match the frobenius model") {
  // eigenvalues 3 (x12) and -3 (x10); counts frozen from the enumerator
  Poly fermat_poly =
      poly_mul(linear_power(Int(3), 12), linear_power(Int(-3), 10));
  FrobeniusData f = frob(3, 3, fermat_poly);
  CHECK(point_count(f, 1) == 16);
  CHECK(point_count(f, 2) == 280);
  CHECK(point_count(f, 3) == 784);

  std::vector<QuarticTerm> fermat{{{4, 0, 0, 0}, Int(1)},
                                  {{0, 4, 0, 0}, Int(1)},
                                  {{0, 0, 4, 0}, Int(1)},
                                  {{0, 0, 0, 4}, Int(1)}};
  CHECK(count_quartic_points(SmallField(3), fermat) == 16);
  CHECK(count_quartic_points(SmallField(9), fermat) == 280);
  CHECK(count_quartic_points(SmallField(27), fermat) == 784);
}

TEST_CASE("zeta equality and witnesses") {
  Poly all3 = linear_power(Int(3), 22);
  FrobeniusData f1 = frob(3, 3, all3);
  CHECK(zeta_equal(f1, f1).equal);

  Poly mixed = poly_mul(linear_power(Int(3), 21), linear_power(Int(-3), 1));
  ZetaComparison d = zeta_equal(f1, frob(3, 3, mixed));
  CHECK_FALSE(d.equal);
  REQUIRE(d.witness.has_value());
  CHECK(*d.witness == 1);  // traces differ by 2q at n = 1

  // reversed coefficient order still compares equal
  Poly desc(all3.rbegin(), all3.rend());
  CHECK(zeta_equal(f1, frob(3, 3, desc)).equal);

  CHECK_THROWS_AS(zeta_equal(f1, frob(5, 5, linear_power(Int(5), 22))),
                  validation_error);

  // witnesses are minimal: cross-check against direct point counts
  Rng rng(51);
  for (int iter = 0; iter < 60; ++iter) {
    long q = (iter % 2) ? 3 : 5;
    FrobeniusData a = frob(q, q, random_weil_poly(rng, q));
    FrobeniusData b = frob(q, q, random_weil_poly(rng, q));
    ZetaComparison z = zeta_equal(a, b);
    if (z.equal) {
      CHECK(a.charpoly() == b.charpoly());
      continue;
    }
    for (unsigned long n = 1; n < *z.witness; ++n)
      CHECK(point_count(a, n) == point_count(b, n));
    CHECK(point_count(a, *z.witness) != point_count(b, *z.witness));
  }
}

TEST_CASE("zeta equality is an equivalence relation") {
  Rng rng(54);
  std::vector<FrobeniusData> pool;
  for (int i = 0; i < 6; ++i)
    pool.push_back(frob(3, 3, random_weil_poly(rng, 3)));
  pool.push_back(pool[0]);
  for (const FrobeniusData& a : pool) {
    CHECK(zeta_equal(a, a).equal);
    for (const FrobeniusData& b : pool) {
      CHECK(zeta_equal(a, b).equal == zeta_equal(b, a).equal);
      for (const FrobeniusData& c : pool)
        if (zeta_equal(a, b).equal && zeta_equal(b, c).equal)
          CHECK(zeta_equal(a, c).equal);
    }
  }
}

TEST_CASE("newton slopes") {
  NewtonSlopes ss = newton_slopes(frob(3, 3, linear_power(Int(3), 22)));
  CHECK(ss.classification == "supersingular");
  for (const Rat& s : ss.slopes) CHECK(s == 1);

  // valuations 1/2 (x2), 1 (x18), 3/2 (x2): height 2
  Poly h2 = poly_mul(poly_mul(Poly{Int(-3), Int(0), Int(1)},
                              Poly{Int(-27), Int(0), Int(1)}),
                     linear_power(Int(3), 18));
  NewtonSlopes h = newton_slopes(frob(3, 3, h2));
  CHECK(h.classification == "finite height");
  REQUIRE(h.height.has_value());
  CHECK(*h.height == 2);
  REQUIRE(h.slopes.size() == 22);
  CHECK(h.slopes.front() == Rat(1, 2));
  CHECK(h.slopes.back() == Rat(3, 2));
  int ones = 0;
  for (const Rat& s : h.slopes)
    if (s == 1) ++ones;
  CHECK(ones == 18);

  // ordinary K3 shape: height 1, slopes {0, 1 x20, 2}
  Poly ord = poly_mul(poly_mul(Poly{Int(-1), Int(1)}, Poly{Int(-9), Int(1)}),
                      linear_power(Int(3), 20));
  NewtonSlopes o = newton_slopes(frob(3, 3, ord));
  CHECK(o.classification == "finite height");
  REQUIRE(o.height.has_value());
  CHECK(*o.height == 1);

  // hull endpoint identity and duality symmetry on random Weil data
  Rng rng(52);
  for (int iter = 0; iter < 40; ++iter) {
    long q = (iter % 2) ? 3 : 9;
    FrobeniusData f = frob(3, q, random_weil_poly(rng, q));
    NewtonSlopes n = newton_slopes(f);
    REQUIRE(n.slopes.size() == 22);
    Rat sum(0);
    for (const Rat& s : n.slopes) sum += s;
    Rat expect = Rat(Int(valuation(f.charpoly()[0], f.p()))) /
                 Rat(Int(static_cast<long>(f.field_degree())));
    CHECK(sum == expect);
    if (weil_validate(f).duality) {
      for (std::size_t i = 0; i < 22; ++i)
        CHECK(n.slopes[i] + n.slopes[21 - i] == 2);
    }
  }
}

TEST_CASE("trace identity holds for every n") {
  Rng rng(53);
  for (int iter = 0; iter < 20; ++iter) {
    long q = (iter % 2) ? 3 : 7;
    FrobeniusData f = frob(q, q, random_weil_poly(rng, q));
    for (unsigned long n = 1; n <= 8; ++n) {
      Int h2 = point_count(f, n) - 1 - pow_int(Int(q), 2 * n);
      CHECK(mukai_trace(f, n) - h2 == 2 * pow_int(Int(q), n));
    }
  }
}

TEST_CASE("small field construction") {
  SmallField f9(9);
  CHECK(f9.p() == 3);
  CHECK(f9.degree() == 2);
  CHECK(f9.modulus() == std::vector<long>{1, 0});  // x^2 + 1

  CHECK_THROWS_AS(SmallField(4), validation_error);   // characteristic 2
  CHECK_THROWS_AS(SmallField(50), validation_error);
  CHECK_THROWS_AS(SmallField(15), validation_error);  // not a prime power

  // multiplicative group of F_25 has order 24
  SmallField f25(25);
  long x = 7 % 25;
  long acc = x;
  int order = 1;
  while (acc != 1) {
    acc = f25.mul(acc, x);
    ++order;
    REQUIRE(order <= 24);
  }
  CHECK(24 % order == 0);
}
