#include "k3fm/lattice.hpp"

#include "k3fm/errors.hpp"

namespace k3fm {

Lattice Lattice::validate(const IntMat& gram, bool require_even) {
  if (gram.rows() != gram.cols())
    throw validation_error("gram matrix is not square");
  if (gram.rows() == 0) throw validation_error("gram matrix is empty");
  if (!gram.is_symmetric()) throw validation_error("gram matrix is not symmetric");
  Int d = gram.det();
  if (d == 0) throw validation_error("gram matrix is degenerate");
  bool even = true;
  for (std::size_t i = 0; i < gram.rows(); ++i)
    if (gram(i, i) % 2 != 0) {
      even = false;
      break;
    }
  if (require_even && !even) throw validation_error("lattice is not even");
  return Lattice(gram, even, d);
}

Sublattice Sublattice::validate(const Lattice& ambient, const IntMat& basis) {
  if (basis.rows() > 0 && basis.cols() != ambient.rank())
    throw validation_error("sublattice basis has wrong ambient dimension");
  if (basis.rows() > ambient.rank())
    throw validation_error("sublattice basis has too many rows");
  if (rank_of(basis) != basis.rows())
    throw validation_error("sublattice basis rows are dependent");
  IntMat b = basis;
  if (b.rows() == 0) b = IntMat(0, ambient.rank());
  return Sublattice(ambient, b);
}

Sublattice Sublattice::zero(const Lattice& ambient) {
  return Sublattice(ambient, IntMat(0, ambient.rank()));
}

IntMat Sublattice::restricted_gram() const {
  return basis_ * ambient_.gram() * basis_.transpose();
}

Signature signature(const Lattice& l) {
  std::size_t n = l.rank();
  std::vector<std::vector<Rat>> a(n, std::vector<Rat>(n));
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) a[i][j] = Rat(l.gram()(i, j));
  Signature sig;
  for (std::size_t k = 0; k < n; ++k) {
    if (a[k][k] == 0) {
      // prefer a later nonzero diagonal entry
      std::size_t piv = n;
      for (std::size_t i = k + 1; i < n; ++i)
        if (a[i][i] != 0) {
          piv = i;
          break;
        }
      if (piv < n) {
        std::swap(a[k], a[piv]);
        for (std::size_t i = 0; i < n; ++i) std::swap(a[i][k], a[i][piv]);
      } else {
        // all-zero diagonal: (e_i + e_j, e_i + e_j) = 2 a_ij != 0 somewhere
        std::size_t bi = n, bj = n;
        for (std::size_t i = k; i < n && bi == n; ++i)
          for (std::size_t j = i + 1; j < n; ++j)
            if (a[i][j] != 0) {
              bi = i;
              bj = j;
              break;
            }
        if (bi == n) throw validation_error("degenerate form in signature");
        for (std::size_t t = 0; t < n; ++t) a[bi][t] += a[bj][t];
        for (std::size_t t = 0; t < n; ++t) a[t][bi] += a[t][bj];
        std::swap(a[k], a[bi]);
        for (std::size_t i = 0; i < n; ++i) std::swap(a[i][k], a[i][bi]);
      }
    }
    Rat piv = a[k][k];
    if (piv > 0)
      ++sig.positive;
    else
      ++sig.negative;
    for (std::size_t i = k + 1; i < n; ++i) {
      if (a[i][k] == 0) continue;
      Rat f = a[i][k] / piv;
      for (std::size_t j = k; j < n; ++j) a[i][j] -= f * a[k][j];
      for (std::size_t j = k; j < n; ++j) a[j][i] -= f * a[j][k];
    }
  }
  return sig;
}

bool is_hyperbolic(const Lattice& l) {
  Signature s = signature(l);
  return s.positive == 1 && s.negative == l.rank() - 1;
}

DiscriminantGroup dual_quotient(const Lattice& l) {
  SmithForm s = smith_form(l.gram());
  DiscriminantGroup g;
  g.order = 1;
  for (const Int& d : s.invariant_factors)
    if (d > 1) {
      g.invariant_factors.push_back(d);
      g.order *= d;
    }
  Int ad = l.det() < 0 ? Int(-l.det()) : l.det();
  if (g.order != ad)
    throw computation_error("discriminant group order disagrees with |det|");
  return g;
}

ArtinInvariant artin_invariant(const Lattice& l, const Int& p) {
  if (!is_prime(p)) throw validation_error("p is not prime");
  DiscriminantGroup g = dual_quotient(l);
  for (const Int& d : g.invariant_factors)
    if (d != p)
      throw validation_error("discriminant group has invariant factor " +
                             to_string(d) + ", not annihilated by " +
                             to_string(p));
  std::size_t fp_rank = g.invariant_factors.size();
  if (fp_rank % 2 != 0)
    throw validation_error("discriminant group has odd F_p-rank " +
                           std::to_string(fp_rank));
  ArtinInvariant out;
  out.sigma0 = fp_rank / 2;
  if (out.sigma0 < 1 || out.sigma0 > 10) {
    std::string msg = "sigma0 = " + std::to_string(out.sigma0) +
                      " outside [1,10]";
    if (l.rank() == 22)
      throw validation_error(msg + " for a rank-22 lattice");
    out.warning = msg;
  }
  return out;
}

Sublattice saturate(const Sublattice& s) {
  std::size_t k = s.rank();
  if (k == 0) return s;
  SmithForm f = smith_form(s.basis());
  // U B V = D, so the Q-row-span meets Z^n in the first k rows of V^{-1}.
  IntMat sat(k, s.ambient().rank());
  for (std::size_t i = 0; i < k; ++i)
    for (std::size_t j = 0; j < s.ambient().rank(); ++j)
      sat(i, j) = f.v_inv(i, j);
  return Sublattice::validate(s.ambient(), row_hnf(sat));
}

bool is_primitive(const Sublattice& s) { return same_span(s, saturate(s)); }

Int saturation_index(const Sublattice& s) {
  if (s.rank() == 0) return 1;
  Sublattice sat = saturate(s);
  // basis = C * sat_basis with C integral; index = |det C|
  IntMat satT = sat.basis().transpose();
  IntMat c(s.rank(), s.rank());
  for (std::size_t i = 0; i < s.rank(); ++i) {
    auto sol = solve_integer(satT, s.basis().row(i));
    if (!sol) throw computation_error("saturation does not contain the input");
    for (std::size_t j = 0; j < s.rank(); ++j) c(i, j) = (*sol)[j];
  }
  Int d = c.det();
  return d < 0 ? Int(-d) : d;
}

bool in_coset(const Lattice& n, const Vec& ell, const Int& p,
              const Sublattice& gamma) {
  if (!is_prime(p)) throw validation_error("p is not prime");
  if (ell.size() != n.rank())
    throw validation_error("vector has wrong ambient dimension");
  IntMat gt = gamma.basis().transpose();
  if (gamma.rank() == 0) gt = IntMat(n.rank(), 0);
  return solve_mod_p(gt, ell, p).has_value();
}

Sublattice orthogonal_complement(const Sublattice& s) {
  const Lattice& amb = s.ambient();
  if (s.rank() == 0) {
    return Sublattice::validate(amb, row_hnf(IntMat::identity(amb.rank())));
  }
  IntMat bg = s.basis() * amb.gram();
  IntMat ker = right_kernel(bg);
  if (ker.rows() == 0) return Sublattice::zero(amb);
  return Sublattice::validate(amb, row_hnf(ker));
}

bool contains(const Sublattice& s, const Vec& v) {
  if (v.size() != s.ambient().rank())
    throw validation_error("vector has wrong ambient dimension");
  if (s.rank() == 0) return is_zero(v);
  return solve_integer(s.basis().transpose(), v).has_value();
}

bool same_span(const Sublattice& a, const Sublattice& b) {
  return row_hnf(a.basis()) == row_hnf(b.basis());
}

}  // namespace k3fm
