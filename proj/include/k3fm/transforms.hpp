#pragma once

#include <string>
#include <variant>

#include "k3fm/mukai.hpp"

namespace k3fm {

// Word letters. A word is applied left to right: word[0] acts first.
struct TwistGen {
  Vec c1;
};
struct SphericalGen {
  MukaiVector v;
};
struct MinusOnePicGen {};
struct ShiftGen {};
struct UserGen {
  std::string label;  // "user" or "moduli"
  IntMat matrix;
};
using Generator =
    std::variant<TwistGen, SphericalGen, MinusOnePicGen, ShiftGen, UserGen>;

// Lattice action of a Fourier-Mukai kernel together with the generator
// word that produced it. Replaying the word reproduces the matrix exactly.
class Transform {
 public:
  Transform(Isometry isometry, std::vector<Generator> word)
      : isometry_(std::move(isometry)), word_(std::move(word)) {}

  const Isometry& isometry() const { return isometry_; }
  const IntMat& matrix() const { return isometry_.matrix(); }
  const std::vector<Generator>& word() const { return word_; }
  const MukaiLattice& lattice() const { return isometry_.lattice(); }

  MukaiVector apply(const MukaiVector& v) const { return isometry_.apply(v); }

 private:
  Isometry isometry_;
  std::vector<Generator> word_;
};

Isometry generator_matrix(const MukaiLattice& l, const Generator& g);
Isometry replay_word(const MukaiLattice& l, const std::vector<Generator>& word);

Transform identity_transform(const MukaiLattice& l);

// (a, b, c) -> (a, b + a c1, c + b.c1 + a c1^2/2); needs c1^2 even.
Transform line_bundle_twist(const MukaiLattice& l, const Vec& c1l);

// Reflection in a vector of square +-2.
Transform spherical_twist(const MukaiLattice& l, const MukaiVector& v);

// diag(1, -Id, 1).
Transform minus_one_pic(const MukaiLattice& l);

// -Identity.
Transform shift(const MukaiLattice& l);

// Exchanges the outer coordinates, (a, b, c) -> (c, -b, a); built as the
// reflection in (1,0,1) followed by a shift.
Transform swap_outer(const MukaiLattice& l);

Transform user_transform(const MukaiLattice& l, const IntMat& m,
                         const std::string& label = "user");

// compose(a, b) acts as "a after b"; words concatenate accordingly.
Transform compose(const Transform& a, const Transform& b);

// NS vectors of square -2, one representative per +-pair.
struct RootSet {
  std::vector<Vec> roots;

  static RootSet validate(const Lattice& ns, std::vector<Vec> roots);
};

// All roots with coordinate magnitudes <= bound, lexicographically ordered,
// first nonzero coordinate positive.
RootSet enumerate_roots(const Lattice& ns, long bound);

// Component of x in the positive cone relative to h: sign of x.h.
int positive_cone_side(const Lattice& ns, const Vec& x, const Vec& h);

struct WalkStep {
  bool negate = false;  // true: the -1 generator; false: reflect in root
  Vec root;
};

struct ChamberWalk {
  std::vector<WalkStep> word;
  Vec image;
};

// Moves x into { y : y.delta >= 0 for all roots, y.h > 0 } by reflections
// and at most one sign flip, reflecting at each step in the supplied root
// with the most negative pairing (lexicographic tie-break). max_steps = 0
// selects the default 10 * max|root coordinate| * rank budget.
ChamberWalk chamber_walk(const Lattice& ns, const RootSet& roots, Vec x,
                         const Vec& h, unsigned long max_steps = 0);

// Whether the transform maps the point-class line Z(0,0,1) onto itself.
bool is_filtered(const Transform& phi);

struct Normalization {
  Transform word;        // the correcting composition w
  Transform normalized;  // w after phi
};

// Given phi fixing (0,0,1), composes with twist(-b) and chamber generators
// so the result fixes (1,0,0) and (0,0,1) and sends h into the chamber of
// the supplied roots.
Normalization normalize(const Transform& phi, const RootSet& roots,
                        const Vec& h, unsigned long max_steps = 0);

}  // namespace k3fm
