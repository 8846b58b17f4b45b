#pragma once

#include <array>
#include <vector>

#include "k3fm/numeric.hpp"

namespace k3fm {

// Small finite field F_q, q = p^k <= 49 with p odd. Elements are encoded
// as 0..q-1, the base-p digits giving the coefficients of a residue
// polynomial modulo a fixed irreducible: the lexicographically first monic
// irreducible of degree k over F_p.
class SmallField {
 public:
  explicit SmallField(long q);

  long q() const { return q_; }
  long p() const { return p_; }
  int degree() const { return k_; }
  const std::vector<long>& modulus() const { return modpoly_; }

  long add(long a, long b) const;
  long mul(long a, long b) const { return mul_[a * q_ + b]; }
  long embed(const Int& c) const;  // prime-field constant from an integer

 private:
  long q_, p_;
  int k_;
  std::vector<long> modpoly_;  // c_0..c_{k-1}; x^k = -(sum c_i x^i)
  std::vector<long> mul_;
};

// One term c * x0^e0 x1^e1 x2^e2 x3^e3 of a quartic form on P^3.
struct QuarticTerm {
  std::array<int, 4> exps;
  Int coeff;
};

// Number of projective points of the quartic hypersurface over F_q,
// by exhaustion of the q^3 + q^2 + q + 1 normalized representatives.
// No smoothness check is performed.
Int count_quartic_points(const SmallField& field,
                         const std::vector<QuarticTerm>& terms);

}  // namespace k3fm
