#include "k3fm/normal_form.hpp"

#include <cstdlib>

#include "k3fm/errors.hpp"

namespace k3fm {

namespace {

struct SmithWorker {
  IntMat d, u, v, v_inv;
  std::size_t m, n;

  explicit SmithWorker(const IntMat& a)
      : d(a),
        u(IntMat::identity(a.rows())),
        v(IntMat::identity(a.cols())),
        v_inv(IntMat::identity(a.cols())),
        m(a.rows()),
        n(a.cols()) {}

  void row_addmul(std::size_t dst, std::size_t src, const Int& c) {
    for (std::size_t j = 0; j < n; ++j) d(dst, j) += c * d(src, j);
    for (std::size_t j = 0; j < m; ++j) u(dst, j) += c * u(src, j);
  }
  void col_addmul(std::size_t dst, std::size_t src, const Int& c) {
    for (std::size_t i = 0; i < m; ++i) d(i, dst) += c * d(i, src);
    for (std::size_t i = 0; i < n; ++i) v(i, dst) += c * v(i, src);
    // (V F)^{-1} = F^{-1} V^{-1}: row src of v_inv loses c * row dst
    for (std::size_t j = 0; j < n; ++j) v_inv(src, j) -= c * v_inv(dst, j);
  }
  void row_negate(std::size_t i) {
    for (std::size_t j = 0; j < n; ++j) d(i, j) = -d(i, j);
    for (std::size_t j = 0; j < m; ++j) u(i, j) = -u(i, j);
  }
  void row_swap(std::size_t i, std::size_t j) {
    d.swap_rows(i, j);
    u.swap_rows(i, j);
  }
  void col_swap(std::size_t i, std::size_t j) {
    d.swap_cols(i, j);
    v.swap_cols(i, j);
    v_inv.swap_rows(i, j);
  }

  // Smallest-magnitude nonzero pivot in the trailing block, scanning rows
  // then columns so ties break the same way on every run.
  bool find_pivot(std::size_t t, std::size_t& pi, std::size_t& pj) {
    bool found = false;
    Int best;
    for (std::size_t i = t; i < m; ++i)
      for (std::size_t j = t; j < n; ++j) {
        const Int& x = d(i, j);
        if (x == 0) continue;
        Int ax = x < 0 ? Int(-x) : x;
        if (!found || ax < best) {
          found = true;
          best = ax;
          pi = i;
          pj = j;
        }
      }
    return found;
  }

  void run() {
    std::size_t t = 0;
    std::size_t limit = m < n ? m : n;
    while (t < limit) {
      std::size_t pi, pj;
      if (!find_pivot(t, pi, pj)) break;
      row_swap(t, pi);
      col_swap(t, pj);
      bool clean = true;
      for (std::size_t i = t + 1; i < m; ++i) {
        if (d(i, t) == 0) continue;
        Int q = ndiv_q(d(i, t), d(t, t));
        row_addmul(i, t, -q);
        if (d(i, t) != 0) clean = false;
      }
      for (std::size_t j = t + 1; j < n; ++j) {
        if (d(t, j) == 0) continue;
        Int q = ndiv_q(d(t, j), d(t, t));
        col_addmul(j, t, -q);
        if (d(t, j) != 0) clean = false;
      }
      if (!clean) continue;  // remainders became new, smaller pivot candidates
      // divisibility sweep: d(t,t) must divide the whole trailing block
      bool divides = true;
      for (std::size_t i = t + 1; i < m && divides; ++i)
        for (std::size_t j = t + 1; j < n && divides; ++j)
          if (d(i, j) % d(t, t) != 0) {
            row_addmul(t, i, Int(1));
            divides = false;
          }
      if (!divides) continue;
      if (d(t, t) < 0) row_negate(t);
      ++t;
    }
  }
};

}  // namespace

SmithForm smith_form(const IntMat& a) {
  SmithWorker w(a);
  w.run();
  SmithForm out;
  out.d = w.d;
  out.u = w.u;
  out.v = w.v;
  out.v_inv = w.v_inv;
  std::size_t limit = a.rows() < a.cols() ? a.rows() : a.cols();
  for (std::size_t i = 0; i < limit && w.d(i, i) != 0; ++i) {
    out.invariant_factors.push_back(w.d(i, i));
    ++out.rank;
  }
  return out;
}

IntMat row_hnf(const IntMat& a) {
  std::size_t m = a.rows(), n = a.cols();
  IntMat h = a;
  std::size_t r = 0;  // next pivot row
  for (std::size_t j = 0; j < n && r < m; ++j) {
    // gcd the column below r into row r
    std::size_t piv = r;
    while (piv < m && h(piv, j) == 0) ++piv;
    if (piv == m) continue;
    h.swap_rows(r, piv);
    for (std::size_t i = r + 1; i < m; ++i) {
      while (h(i, j) != 0) {
        Int q = ndiv_q(h(i, j), h(r, j));
        for (std::size_t k = 0; k < n; ++k) h(i, k) -= q * h(r, k);
        if (h(i, j) != 0) h.swap_rows(r, i);
      }
    }
    if (h(r, j) < 0)
      for (std::size_t k = 0; k < n; ++k) h(r, k) = -h(r, k);
    // reduce entries above the pivot into [0, pivot)
    for (std::size_t i = 0; i < r; ++i) {
      Int q = fdiv_q(h(i, j), h(r, j));
      if (q != 0)
        for (std::size_t k = 0; k < n; ++k) h(i, k) -= q * h(r, k);
    }
    ++r;
  }
  IntMat out(r, n);
  for (std::size_t i = 0; i < r; ++i)
    for (std::size_t k = 0; k < n; ++k) out(i, k) = h(i, k);
  return out;
}

std::size_t rank_of(const IntMat& a) { return row_hnf(a).rows(); }

IntMat right_kernel(const IntMat& a) {
  SmithForm s = smith_form(a);
  std::size_t n = a.cols();
  IntMat ker(n - s.rank, n);
  for (std::size_t k = s.rank; k < n; ++k)
    for (std::size_t i = 0; i < n; ++i) ker(k - s.rank, i) = s.v(i, k);
  return ker;
}

std::optional<Vec> solve_integer(const IntMat& a, const Vec& b) {
  if (b.size() != a.rows()) throw validation_error("rhs size mismatch in solve");
  SmithForm s = smith_form(a);
  Vec c = s.u.apply(b);
  Vec y(a.cols(), Int(0));
  for (std::size_t i = 0; i < a.cols() || i < a.rows(); ++i) {
    if (i < s.rank) {
      if (c[i] % s.d(i, i) != 0) return std::nullopt;
      y[i] = c[i] / s.d(i, i);
    } else if (i < a.rows() && c[i] != 0) {
      return std::nullopt;
    }
  }
  return s.v.apply(y);
}

std::optional<Vec> solve_mod_p(const IntMat& a, const Vec& b, const Int& p) {
  std::size_t m = a.rows(), n = a.cols();
  if (b.size() != m) throw validation_error("rhs size mismatch in solve_mod_p");
  IntMat w(m, n + 1);
  for (std::size_t i = 0; i < m; ++i) {
    for (std::size_t j = 0; j < n; ++j) w(i, j) = mod_p(a(i, j), p);
    w(i, n) = mod_p(b[i], p);
  }
  std::vector<std::size_t> pivot_col;
  std::size_t r = 0;
  for (std::size_t j = 0; j < n && r < m; ++j) {
    std::size_t piv = r;
    while (piv < m && w(piv, j) == 0) ++piv;
    if (piv == m) continue;
    w.swap_rows(r, piv);
    Int inv;
    mpz_invert(inv.get_mpz_t(), w(r, j).get_mpz_t(), p.get_mpz_t());
    for (std::size_t k = j; k <= n; ++k) w(r, k) = mod_p(w(r, k) * inv, p);
    for (std::size_t i = 0; i < m; ++i) {
      if (i == r || w(i, j) == 0) continue;
      Int f = w(i, j);
      for (std::size_t k = j; k <= n; ++k)
        w(i, k) = mod_p(w(i, k) - f * w(r, k), p);
    }
    pivot_col.push_back(j);
    ++r;
  }
  for (std::size_t i = r; i < m; ++i)
    if (w(i, n) != 0) return std::nullopt;
  Vec x(n, Int(0));
  for (std::size_t i = 0; i < r; ++i) x[pivot_col[i]] = w(i, n);
  return x;
}

}  // namespace k3fm
