#pragma once

#include <optional>
#include <string>

#include "k3fm/numeric.hpp"

namespace k3fm {

// Degree-22 characteristic polynomial of Frobenius on H^2 of a K3 surface
// over F_q, stored by ascending degree and monic. A descending coefficient
// list is recognized and reversed on construction.
class FrobeniusData {
 public:
  static FrobeniusData validate(const Int& p, const Int& q,
                                std::vector<Int> charpoly);

  const Int& p() const { return p_; }
  const Int& q() const { return q_; }
  unsigned long field_degree() const { return f_; }  // q = p^f
  const std::vector<Int>& charpoly() const { return charpoly_; }

  bool operator==(const FrobeniusData& o) const {
    return p_ == o.p_ && q_ == o.q_ && charpoly_ == o.charpoly_;
  }

 private:
  FrobeniusData(Int p, Int q, unsigned long f, std::vector<Int> a)
      : p_(std::move(p)), q_(std::move(q)), f_(f), charpoly_(std::move(a)) {}
  Int p_, q_;
  unsigned long f_;
  std::vector<Int> charpoly_;
};

struct WeilReport {
  bool duality = false;       // a0 = +-q^22 and a0 * a_{22-i} = a_i * q^{2i}
  bool root_moduli = false;   // every complex root within tol of |alpha| = q
  bool pass() const { return duality && root_moduli; }
};

// Exact functional-equation check plus floating-point verification of the
// Riemann hypothesis |alpha| = q. The only floating-point computation in
// the library; tol is relative.
WeilReport weil_validate(const FrobeniusData& f, double tol = 1e-9);

// Tr(F^n | H^2) by Newton's identities, integer arithmetic throughout.
// Requires the exact duality check to pass.
Int h2_trace(const FrobeniusData& f, unsigned long n);

// #X(F_{q^n}) = 1 + q^{2n} + Tr(F^n | H^2).
Int point_count(const FrobeniusData& f, unsigned long n);

// Trace on the Mukai crystal H^0(-1) + H^2 + H^4(1): h2_trace + 2 q^n.
Int mukai_trace(const FrobeniusData& f, unsigned long n);

struct ZetaComparison {
  bool equal = false;
  std::optional<unsigned long> witness;  // least n with differing point counts
};

ZetaComparison zeta_equal(const FrobeniusData& f1, const FrobeniusData& f2);

struct NewtonSlopes {
  std::vector<Rat> slopes;     // 22 values, ascending, normalized by v_p(q)
  std::string classification;  // "supersingular", "finite height", "irregular"
  std::optional<unsigned long> height;
};

// Newton polygon of the charpoly: lower convex hull of (i, v_p(a_i)),
// slopes rescaled so eigenvalue valuation v_p(q) reads as 1.
NewtonSlopes newton_slopes(const FrobeniusData& f);

}  // namespace k3fm
