#include "k3fm/mukai.hpp"

#include "k3fm/errors.hpp"

namespace k3fm {

MukaiLattice::MukaiLattice(Lattice ns) : ns_(std::move(ns)) {
  std::size_t rho = ns_.rank();
  gram_ = IntMat(rho + 2, rho + 2);
  gram_(0, rho + 1) = -1;
  gram_(rho + 1, 0) = -1;
  for (std::size_t i = 0; i < rho; ++i)
    for (std::size_t j = 0; j < rho; ++j) gram_(i + 1, j + 1) = ns_.gram()(i, j);
}

Vec MukaiVector::coords() const {
  Vec x;
  x.reserve(c1.size() + 2);
  x.push_back(r);
  for (const Int& b : c1) x.push_back(b);
  x.push_back(s);
  return x;
}

MukaiVector MukaiVector::from_coords(const Vec& x) {
  if (x.size() < 2) throw validation_error("mukai vector needs at least 2 coordinates");
  MukaiVector v;
  v.r = x.front();
  v.s = x.back();
  v.c1.assign(x.begin() + 1, x.end() - 1);
  return v;
}

MukaiVector mukai_zero(std::size_t rho) {
  return MukaiVector{Int(0), Vec(rho, Int(0)), Int(0)};
}

namespace {
void check_compatible(const MukaiLattice& l, const MukaiVector& v) {
  if (v.c1.size() != l.ns_rank())
    throw validation_error("mukai vector does not match the NS lattice rank");
}
}  // namespace

Int mukai_pairing(const MukaiLattice& l, const MukaiVector& u,
                  const MukaiVector& v) {
  check_compatible(l, u);
  check_compatible(l, v);
  return l.ns().pair(u.c1, v.c1) - u.r * v.s - v.r * u.s;
}

MukaiVector mukai_vector(const MukaiLattice& l, const Int& r, const Vec& c1,
                         const Int& c2) {
  if (c1.size() != l.ns_rank())
    throw validation_error("c1 does not match the NS lattice rank");
  Int sq = l.ns().norm(c1);
  if (sq % 2 != 0)
    throw validation_error("c1 has odd self-intersection " + to_string(sq));
  return MukaiVector{r, c1, r + sq / 2 - c2};
}

Int euler_pairing(const MukaiLattice& l, const MukaiVector& u,
                  const MukaiVector& v) {
  return -mukai_pairing(l, u, v);
}

Int deformation_dimension(const MukaiLattice& l, const MukaiVector& v) {
  return mukai_pairing(l, v, v) + 2;
}

bool is_isometry(const IntMat& m, const MukaiLattice& l) {
  if (m.rows() != l.total_rank() || m.cols() != l.total_rank())
    throw validation_error("matrix size does not match the Mukai lattice");
  return m.transpose() * l.gram() * m == l.gram();
}

Isometry Isometry::validate(const MukaiLattice& l, const IntMat& m) {
  if (!is_isometry(m, l))
    throw validation_error("matrix does not preserve the Mukai pairing");
  Int d = m.det();
  if (d != 1 && d != -1)
    throw validation_error("isometry determinant is not +-1");
  return Isometry(l, m);
}

Isometry Isometry::identity(const MukaiLattice& l) {
  return Isometry(l, IntMat::identity(l.total_rank()));
}

MukaiVector Isometry::apply(const MukaiVector& v) const {
  check_compatible(l_, v);
  return MukaiVector::from_coords(m_.apply(v.coords()));
}

bool Isometry::fixes_outer_summands() const {
  std::size_t n = l_.total_rank();
  for (std::size_t i = 0; i < n; ++i) {
    if (m_(i, 0) != (i == 0 ? 1 : 0)) return false;
    if (m_(i, n - 1) != (i == n - 1 ? 1 : 0)) return false;
    if (m_(0, i) != (i == 0 ? 1 : 0)) return false;
    if (m_(n - 1, i) != (i == n - 1 ? 1 : 0)) return false;
  }
  return true;
}

IntMat Isometry::ns_block() const {
  std::size_t rho = l_.ns_rank();
  IntMat a(rho, rho);
  for (std::size_t i = 0; i < rho; ++i)
    for (std::size_t j = 0; j < rho; ++j) a(i, j) = m_(i + 1, j + 1);
  return a;
}

Isometry compose(const Isometry& a, const Isometry& b) {
  if (a.lattice() != b.lattice())
    throw validation_error("composing isometries of different Mukai lattices");
  return Isometry::validate(a.lattice(), a.matrix() * b.matrix());
}

}  // namespace k3fm
