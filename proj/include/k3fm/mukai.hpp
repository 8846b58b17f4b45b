#pragma once

#include "k3fm/lattice.hpp"

namespace k3fm {

// Z + NS + Z with the pairing <(a,b,c),(a',b',c')> = b.b' - ac' - a'c.
// Coordinates are stored in the order (r, b_1..b_rho, s).
class MukaiLattice {
 public:
  explicit MukaiLattice(Lattice ns);

  const Lattice& ns() const { return ns_; }
  std::size_t ns_rank() const { return ns_.rank(); }
  std::size_t total_rank() const { return ns_.rank() + 2; }

  // Gram matrix of the extended pairing on (r, b, s) coordinates.
  const IntMat& gram() const { return gram_; }

  bool operator==(const MukaiLattice& o) const { return ns_ == o.ns_; }
  bool operator!=(const MukaiLattice& o) const { return !(*this == o); }

 private:
  Lattice ns_;
  IntMat gram_;
};

struct MukaiVector {
  Int r;
  Vec c1;
  Int s;

  std::size_t ns_rank() const { return c1.size(); }
  Vec coords() const;  // (r, c1..., s)
  static MukaiVector from_coords(const Vec& x);

  bool operator==(const MukaiVector& o) const {
    return r == o.r && c1 == o.c1 && s == o.s;
  }
};

MukaiVector mukai_zero(std::size_t rho);

Int mukai_pairing(const MukaiLattice& l, const MukaiVector& u,
                  const MukaiVector& v);

// (r, c1, r + c1^2/2 - c2); errors when c1 has odd self-intersection.
MukaiVector mukai_vector(const MukaiLattice& l, const Int& r, const Vec& c1,
                         const Int& c2);

Int euler_pairing(const MukaiLattice& l, const MukaiVector& u,
                  const MukaiVector& v);

// Ext^1 of a simple sheaf with Mukai vector v: v^2 + 2.
Int deformation_dimension(const MukaiLattice& l, const MukaiVector& v);

bool is_isometry(const IntMat& m, const MukaiLattice& l);

// Integer matrix with M^T G M = G; |det| = 1 follows and is checked.
class Isometry {
 public:
  static Isometry validate(const MukaiLattice& l, const IntMat& m);
  static Isometry identity(const MukaiLattice& l);

  const IntMat& matrix() const { return m_; }
  const MukaiLattice& lattice() const { return l_; }

  MukaiVector apply(const MukaiVector& v) const;

  // Whether the matrix is diag(1, A, 1); A is then an NS isometry.
  bool fixes_outer_summands() const;
  IntMat ns_block() const;

  bool operator==(const Isometry& o) const { return m_ == o.m_; }

 private:
  Isometry(MukaiLattice l, IntMat m) : l_(std::move(l)), m_(std::move(m)) {}
  MukaiLattice l_;
  IntMat m_;
};

// compose(a, b) acts as "a after b".
Isometry compose(const Isometry& a, const Isometry& b);

}  // namespace k3fm
