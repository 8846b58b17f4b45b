#include "k3fm/transforms.hpp"

#include <algorithm>
#include <cstdlib>

#include "k3fm/errors.hpp"

namespace k3fm {

Isometry generator_matrix(const MukaiLattice& l, const Generator& g) {
  if (const auto* t = std::get_if<TwistGen>(&g))
    return line_bundle_twist(l, t->c1).isometry();
  if (const auto* s = std::get_if<SphericalGen>(&g))
    return spherical_twist(l, s->v).isometry();
  if (std::get_if<MinusOnePicGen>(&g)) return minus_one_pic(l).isometry();
  if (std::get_if<ShiftGen>(&g)) return shift(l).isometry();
  return Isometry::validate(l, std::get<UserGen>(g).matrix);
}

Isometry replay_word(const MukaiLattice& l, const std::vector<Generator>& word) {
  Isometry m = Isometry::identity(l);
  for (const Generator& g : word) m = compose(generator_matrix(l, g), m);
  return m;
}

Transform identity_transform(const MukaiLattice& l) {
  return Transform(Isometry::identity(l), {});
}

Transform line_bundle_twist(const MukaiLattice& l, const Vec& c1l) {
  std::size_t rho = l.ns_rank();
  if (c1l.size() != rho)
    throw validation_error("twist class does not match the NS lattice rank");
  Int sq = l.ns().norm(c1l);
  if (sq % 2 != 0)
    throw validation_error("twist class has odd self-intersection " +
                           to_string(sq));
  IntMat m = IntMat::identity(rho + 2);
  Vec gt = l.ns().gram().apply(c1l);
  for (std::size_t i = 0; i < rho; ++i) {
    m(i + 1, 0) = c1l[i];
    m(rho + 1, i + 1) = gt[i];
  }
  m(rho + 1, 0) = sq / 2;
  return Transform(Isometry::validate(l, m), {TwistGen{c1l}});
}

Transform spherical_twist(const MukaiLattice& l, const MukaiVector& v) {
  Int sq = mukai_pairing(l, v, v);
  if (sq != 2 && sq != -2)
    throw validation_error("spherical class must have square +-2, got " +
                           to_string(sq));
  Int e = 2 / sq;  // +-1
  Vec coords = v.coords();
  Vec gv = l.gram().apply(coords);
  std::size_t n = l.total_rank();
  IntMat m = IntMat::identity(n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) m(i, j) -= e * coords[i] * gv[j];
  return Transform(Isometry::validate(l, m), {SphericalGen{v}});
}

Transform minus_one_pic(const MukaiLattice& l) {
  std::size_t n = l.total_rank();
  IntMat m = IntMat::identity(n);
  for (std::size_t i = 1; i + 1 < n; ++i) m(i, i) = -1;
  return Transform(Isometry::validate(l, m), {MinusOnePicGen{}});
}

Transform shift(const MukaiLattice& l) {
  IntMat m = -IntMat::identity(l.total_rank());
  return Transform(Isometry::validate(l, m), {ShiftGen{}});
}

Transform swap_outer(const MukaiLattice& l) {
  Vec one(l.ns_rank(), Int(0));
  MukaiVector diag{Int(1), one, Int(1)};  // square -2
  return compose(shift(l), spherical_twist(l, diag));
}

Transform user_transform(const MukaiLattice& l, const IntMat& m,
                         const std::string& label) {
  return Transform(Isometry::validate(l, m), {UserGen{label, m}});
}

Transform compose(const Transform& a, const Transform& b) {
  std::vector<Generator> word = b.word();
  word.insert(word.end(), a.word().begin(), a.word().end());
  return Transform(compose(a.isometry(), b.isometry()), std::move(word));
}

RootSet RootSet::validate(const Lattice& ns, std::vector<Vec> roots) {
  for (const Vec& d : roots) {
    if (d.size() != ns.rank())
      throw validation_error("root does not match the NS lattice rank");
    if (ns.norm(d) != -2)
      throw validation_error("root has square != -2");
  }
  return RootSet{std::move(roots)};
}

RootSet enumerate_roots(const Lattice& ns, long bound) {
  if (bound < 1) throw validation_error("root search bound must be >= 1");
  std::size_t rho = ns.rank();
  double box = 1;
  for (std::size_t i = 0; i < rho; ++i) box *= 2.0 * bound + 1.0;
  if (box > 5e7)
    throw computation_error("root enumeration box too large for this rank");
  std::vector<Vec> found;
  Vec cur(rho, Int(-bound));
  for (;;) {
    // canonical representative: first nonzero coordinate positive
    std::size_t lead = 0;
    while (lead < rho && cur[lead] == 0) ++lead;
    if (lead < rho && cur[lead] > 0 && ns.norm(cur) == -2) found.push_back(cur);
    std::size_t i = rho;
    while (i > 0 && cur[i - 1] == bound) cur[--i] = -bound;
    if (i == 0) break;
    cur[i - 1] += 1;
  }
  std::sort(found.begin(), found.end());
  return RootSet{std::move(found)};
}

int positive_cone_side(const Lattice& ns, const Vec& x, const Vec& h) {
  if (ns.norm(x) <= 0) throw validation_error("x is not in the positive cone");
  if (ns.norm(h) <= 0) throw validation_error("h is not in the positive cone");
  Int d = ns.pair(x, h);
  if (d == 0)
    throw computation_error(
        "positive vectors pair to zero; lattice is not hyperbolic");
  return d > 0 ? 1 : -1;
}

namespace {

unsigned long default_walk_budget(const RootSet& roots, std::size_t rho) {
  Int mx = 1;
  for (const Vec& d : roots.roots)
    for (const Int& c : d) {
      Int a = c < 0 ? Int(-c) : c;
      if (a > mx) mx = a;
    }
  unsigned long m = mx.get_ui();
  unsigned long b = 10ul * m * (rho ? rho : 1);
  return b < 100 ? 100 : b;
}

}  // namespace

ChamberWalk chamber_walk(const Lattice& ns, const RootSet& roots, Vec x,
                         const Vec& h, unsigned long max_steps) {
  if (x.size() != ns.rank() || h.size() != ns.rank())
    throw validation_error("vector does not match the NS lattice rank");
  if (ns.norm(x) <= 0) throw validation_error("x is not in the positive cone");
  if (ns.norm(h) <= 0) throw validation_error("h is not in the positive cone");
  for (const Vec& d : roots.roots)
    if (ns.pair(h, d) < 0)
      throw validation_error("h is not in the closed chamber of the roots");
  if (max_steps == 0) max_steps = default_walk_budget(roots, ns.rank());

  ChamberWalk out;
  Int xh = ns.pair(x, h);
  if (xh == 0)
    throw computation_error(
        "x pairs to zero with h; lattice is not hyperbolic");
  if (xh < 0) {
    x = negate(x);
    out.word.push_back(WalkStep{true, {}});
  }
  for (unsigned long used = 0;; ++used) {
    const Vec* worst = nullptr;
    Int worst_val;
    for (const Vec& d : roots.roots) {
      Int v = ns.pair(x, d);
      if (v >= 0) continue;
      if (!worst || v < worst_val || (v == worst_val && d < *worst)) {
        worst = &d;
        worst_val = v;
      }
    }
    if (!worst) {
      out.image = x;
      return out;
    }
    if (used == max_steps)
      throw computation_error(
          "chamber walk budget exhausted; root set may be incomplete");
    // reflection in a (-2)-root: x -> x + (x.d) d
    x = add(x, scale(worst_val, *worst));
    out.word.push_back(WalkStep{false, *worst});
  }
}

bool is_filtered(const Transform& phi) {
  std::size_t rho = phi.lattice().ns_rank();
  MukaiVector point{Int(0), Vec(rho, Int(0)), Int(1)};
  MukaiVector img = phi.apply(point);
  MukaiVector neg{Int(0), Vec(rho, Int(0)), Int(-1)};
  return img == point || img == neg;
}

Normalization normalize(const Transform& phi, const RootSet& roots,
                        const Vec& h, unsigned long max_steps) {
  const MukaiLattice& l = phi.lattice();
  std::size_t rho = l.ns_rank();
  MukaiVector point{Int(0), Vec(rho, Int(0)), Int(1)};
  if (!(phi.apply(point) == point))
    throw validation_error(
        "transform does not fix (0,0,1); compose with a shift first");
  MukaiVector unit{Int(1), Vec(rho, Int(0)), Int(0)};
  MukaiVector img = phi.apply(unit);
  Int bsq = l.ns().norm(img.c1);
  if (img.r != 1 || bsq % 2 != 0 || img.s * 2 != bsq)
    throw validation_error("transform image of (1,0,0) is not (1,b,b^2/2)");

  Transform w = is_zero(img.c1) ? identity_transform(l)
                                : line_bundle_twist(l, negate(img.c1));
  Transform cur = compose(w, phi);
  if (!cur.isometry().fixes_outer_summands())
    throw computation_error("normalization did not reach block-diagonal form");

  Vec x = cur.isometry().ns_block().apply(h);
  ChamberWalk walk = chamber_walk(l.ns(), roots, x, h, max_steps);
  for (const WalkStep& step : walk.word) {
    Transform g = step.negate
                      ? minus_one_pic(l)
                      : compose(line_bundle_twist(l, step.root),
                                spherical_twist(
                                    l, MukaiVector{Int(0), step.root, Int(1)}));
    w = compose(g, w);
    cur = compose(g, cur);
  }
  if (!(cur.apply(point) == point) || !(cur.apply(unit) == unit))
    throw computation_error("normalized transform does not fix both outer vectors");
  if (!(cur.isometry().ns_block().apply(h) == walk.image))
    throw computation_error("normalized NS action disagrees with the chamber walk");
  return Normalization{std::move(w), std::move(cur)};
}

}  // namespace k3fm
