#pragma once

#include <random>

#include "k3fm/lattice.hpp"

namespace k3fm::testing {

using Rng = std::mt19937_64;

inline Int rand_int(Rng& rng, long lo, long hi) {
  std::uniform_int_distribution<long> d(lo, hi);
  return Int(d(rng));
}

// random nondegenerate symmetric integer matrix, even diagonal on request
inline IntMat random_gram(Rng& rng, std::size_t n, long amp, bool even) {
  for (;;) {
    IntMat g(n, n);
    for (std::size_t i = 0; i < n; ++i) {
      for (std::size_t j = i; j < n; ++j) {
        Int v = rand_int(rng, -amp, amp);
        if (i == j && even && v % 2 != 0) v += 1;
        g(i, j) = v;
        g(j, i) = v;
      }
    }
    if (g.det() != 0) return g;
  }
}

inline Lattice random_even_lattice(Rng& rng, std::size_t n, long amp = 3) {
  return Lattice::validate(random_gram(rng, n, amp, true));
}

// even hyperbolic lattice: a small standard block form conjugated by a
// random unimodular change of basis
struct HyperbolicSample {
  Lattice lattice;
  IntMat t;      // new gram = t * base * t^T
  IntMat t_inv;  // transports base-coordinate vectors into the new basis
};

inline HyperbolicSample random_hyperbolic(Rng& rng, std::size_t n,
                                          int shear_steps = 4) {
  IntMat base(n, n);
  base(0, 1) = 1;
  base(1, 0) = 1;  // U block
  for (std::size_t i = 2; i < n; ++i) base(i, i) = -2;
  IntMat t = IntMat::identity(n), t_inv = IntMat::identity(n);
  std::uniform_int_distribution<int> pick(0, static_cast<int>(n) - 1);
  std::uniform_int_distribution<int> amt(-1, 1);
  for (int k = 0; k < shear_steps; ++k) {
    int i = pick(rng), j = pick(rng);
    int c = amt(rng);
    if (i == j || c == 0) continue;
    // row_i += c * row_j on t, inverse op accumulated on t_inv
    for (std::size_t col = 0; col < n; ++col) {
      t(i, col) += c * t(j, col);
      t_inv(col, j) -= c * t_inv(col, i);
    }
  }
  IntMat gram = t * base * t.transpose();
  return HyperbolicSample{Lattice::validate(gram), t, t_inv};
}

using Poly = std::vector<Int>;  // ascending coefficients

inline Poly poly_mul(const Poly& a, const Poly& b) {
  Poly c(a.size() + b.size() - 1, Int(0));
  for (std::size_t i = 0; i < a.size(); ++i)
    for (std::size_t j = 0; j < b.size(); ++j) c[i + j] += a[i] * b[j];
  return c;
}

inline Poly linear_power(const Int& root, int mult) {
  Poly p{Int(1)};
  for (int i = 0; i < mult; ++i) p = poly_mul(p, Poly{-root, Int(1)});
  return p;
}

// first vector in the coordinate box with x^2 > 0 and x.d >= 0 for every
// root, preferring strict inequalities; empty when the box has none
inline Vec find_chamber_vector(const Lattice& ns,
                               const std::vector<Vec>& roots, long radius) {
  std::size_t n = ns.rank();
  Vec best;
  Vec cur(n, Int(-radius));
  for (;;) {
    if (ns.norm(cur) > 0) {
      bool closed = true, strict = true;
      for (const Vec& d : roots) {
        Int v = ns.pair(cur, d);
        if (v < 0) closed = false;
        if (v <= 0) strict = false;
      }
      if (closed && strict) return cur;
      if (closed && best.empty()) best = cur;
    }
    std::size_t i = n;
    while (i > 0 && cur[i - 1] == radius) cur[--i] = -radius;
    if (i == 0) break;
    cur[i - 1] += 1;
  }
  return best;
}

}  // namespace k3fm::testing
