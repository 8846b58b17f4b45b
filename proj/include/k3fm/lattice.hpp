#pragma once

#include <optional>
#include <string>
#include <utility>

#include "k3fm/normal_form.hpp"

namespace k3fm {

// Free integral module of finite rank with a nondegenerate symmetric
// bilinear form. Immutable once validated.
class Lattice {
 public:
  // Rejects non-symmetric and degenerate Gram matrices. Evenness is
  // reported as a flag; with require_even it becomes a hard error.
  static Lattice validate(const IntMat& gram, bool require_even = false);

  const IntMat& gram() const { return gram_; }
  std::size_t rank() const { return gram_.rows(); }
  bool is_even() const { return even_; }
  const Int& det() const { return det_; }

  Int pair(const Vec& x, const Vec& y) const { return pairing(gram_, x, y); }
  Int norm(const Vec& x) const { return pair(x, x); }

  bool operator==(const Lattice& o) const { return gram_ == o.gram_; }

 private:
  Lattice(IntMat gram, bool even, Int det)
      : gram_(std::move(gram)), even_(even), det_(std::move(det)) {}
  IntMat gram_;
  bool even_;
  Int det_;
};

// Finitely generated submodule of a Lattice, given by generator rows in
// ambient coordinates. Rows are required to be linearly independent.
class Sublattice {
 public:
  static Sublattice validate(const Lattice& ambient, const IntMat& basis);
  static Sublattice zero(const Lattice& ambient);

  const Lattice& ambient() const { return ambient_; }
  const IntMat& basis() const { return basis_; }
  std::size_t rank() const { return basis_.rows(); }

  // Gram matrix of the restricted form, basis * G * basis^T.
  IntMat restricted_gram() const;

 private:
  Sublattice(Lattice ambient, IntMat basis)
      : ambient_(std::move(ambient)), basis_(std::move(basis)) {}
  Lattice ambient_;
  IntMat basis_;
};

struct DiscriminantGroup {
  std::vector<Int> invariant_factors;  // each > 1, each divides the next
  Int order;                           // product, = |det| of the source lattice

  bool trivial() const { return invariant_factors.empty(); }
};

struct Signature {
  std::size_t positive = 0;
  std::size_t negative = 0;
};

// Inertia of the real quadratic form, computed exactly by symmetric
// Gaussian elimination over the rationals.
Signature signature(const Lattice& l);

bool is_hyperbolic(const Lattice& l);  // signature (1, rank-1)

DiscriminantGroup dual_quotient(const Lattice& l);

struct ArtinInvariant {
  unsigned long sigma0 = 0;
  std::optional<std::string> warning;
};

// sigma0 with N^vee/N = (Z/p)^{2 sigma0}. Errors if the discriminant group
// is not annihilated by p or has odd F_p-rank. The bound 1 <= sigma0 <= 10
// is enforced for rank-22 lattices and reported as a warning otherwise.
ArtinInvariant artin_invariant(const Lattice& l, const Int& p);

// Smallest primitive sublattice of the same rank containing s.
Sublattice saturate(const Sublattice& s);

bool is_primitive(const Sublattice& s);

// [saturate(s) : s].
Int saturation_index(const Sublattice& s);

// Whether ell lies in p*N + span_Z(gamma), decided modulo p.
bool in_coset(const Lattice& n, const Vec& ell, const Int& p,
              const Sublattice& gamma);

// Saturated sublattice of everything pairing to zero with s.
Sublattice orthogonal_complement(const Sublattice& s);

// Membership of v in the Z-row-span of s.
bool contains(const Sublattice& s, const Vec& v);

// Equality of row spans over Z, via canonical Hermite forms.
bool same_span(const Sublattice& a, const Sublattice& b);

}  // namespace k3fm
