#include "k3fm/zeta.hpp"

#include <algorithm>
#include <complex>
#include <utility>

#include "k3fm/errors.hpp"

namespace k3fm {

namespace {
constexpr std::size_t kDeg = 22;
}

FrobeniusData FrobeniusData::validate(const Int& p, const Int& q,
                                      std::vector<Int> a) {
  if (!is_prime(p)) throw validation_error("p is not prime");
  if (p == 2) throw validation_error("characteristic 2 is not supported");
  Int qq = q;
  unsigned long f = 0;
  while (qq > 1 && qq % p == 0) {
    qq /= p;
    ++f;
  }
  if (qq != 1 || f == 0) throw validation_error("q is not a positive power of p");
  if (a.size() != kDeg + 1)
    throw validation_error("charpoly must have exactly 23 coefficients");
  if (a[kDeg] != 1 && a[0] == 1) std::reverse(a.begin(), a.end());
  if (a[kDeg] != 1) throw validation_error("charpoly is not monic");
  if (a[0] == 0) throw validation_error("charpoly has zero constant term");
  return FrobeniusData(p, q, f, std::move(a));
}

namespace {

bool duality_holds(const FrobeniusData& f) {
  const std::vector<Int>& a = f.charpoly();
  Int q22 = pow_int(f.q(), kDeg);
  if (a[0] != q22 && a[0] != -q22) return false;
  for (std::size_t i = 0; i <= kDeg; ++i)
    if (a[0] * a[kDeg - i] != a[i] * pow_int(f.q(), 2 * i)) return false;
  return true;
}

void require_duality(const FrobeniusData& f) {
  if (!duality_holds(f))
    throw validation_error("charpoly fails the exact Weil duality check");
}

// --- root-modulus check ---------------------------------------------------

using Poly = std::vector<Rat>;  // ascending degree

Poly to_rational(const std::vector<Int>& a) {
  Poly p(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) p[i] = Rat(a[i]);
  return p;
}

void trim(Poly& p) {
  while (!p.empty() && p.back() == 0) p.pop_back();
}

Poly derivative(const Poly& p) {
  Poly d;
  for (std::size_t i = 1; i < p.size(); ++i) d.push_back(Rat(i) * p[i]);
  trim(d);
  return d;
}

// remainder of a by b, monic-normalized Euclid over Q
Poly poly_rem(Poly a, const Poly& b) {
  trim(a);
  while (a.size() >= b.size() && !a.empty()) {
    Rat c = a.back() / b.back();
    std::size_t off = a.size() - b.size();
    for (std::size_t i = 0; i < b.size(); ++i) a[off + i] -= c * b[i];
    trim(a);
  }
  return a;
}

Poly poly_gcd(Poly a, Poly b) {
  trim(a);
  trim(b);
  while (!b.empty()) {
    Poly r = poly_rem(a, b);
    a = std::move(b);
    b = std::move(r);
  }
  if (!a.empty()) {
    Rat lead = a.back();
    for (Rat& c : a) c /= lead;
  }
  return a;
}

Poly poly_div_exact(Poly a, const Poly& b) {
  trim(a);
  Poly q(a.size() >= b.size() ? a.size() - b.size() + 1 : 0, Rat(0));
  while (a.size() >= b.size() && !a.empty()) {
    Rat c = a.back() / b.back();
    std::size_t off = a.size() - b.size();
    q[off] = c;
    for (std::size_t i = 0; i < b.size(); ++i) a[off + i] -= c * b[i];
    trim(a);
  }
  if (!a.empty()) throw computation_error("inexact polynomial division");
  return q;
}

// Durand-Kerner on the monic squarefree part, roots rescaled by 1/q so the
// target moduli are 1.
bool roots_on_circle(const FrobeniusData& f, double tol) {
  Poly p = to_rational(f.charpoly());
  Poly g = poly_gcd(p, derivative(p));
  Poly sf = g.size() <= 1 ? p : poly_div_exact(p, g);
  std::size_t n = sf.size() - 1;
  Rat qr(f.q());
  // substitute t = q u and divide by q^n: coefficient i becomes sf_i / q^{n-i}
  std::vector<std::complex<long double>> c(n + 1);
  for (std::size_t i = 0; i <= n; ++i) {
    Rat b = sf[i] / sf[n];
    for (std::size_t k = i; k < n; ++k) b /= qr;
    c[i] = std::complex<long double>(b.get_d(), 0.0L);
  }
  std::vector<std::complex<long double>> z(n);
  std::complex<long double> seed(0.4L, 0.9L), acc(1.0L, 0.0L);
  for (std::size_t i = 0; i < n; ++i) {
    acc *= seed;
    z[i] = acc;
  }
  auto eval = [&](std::complex<long double> x) {
    std::complex<long double> v = 0;
    for (std::size_t i = n + 1; i-- > 0;) v = v * x + c[i];
    return v;
  };
  for (int iter = 0; iter < 500; ++iter) {
    long double worst = 0;
    for (std::size_t i = 0; i < n; ++i) {
      std::complex<long double> denom(1.0L, 0.0L);
      for (std::size_t j = 0; j < n; ++j)
        if (j != i) denom *= z[i] - z[j];
      std::complex<long double> step = eval(z[i]) / denom;
      z[i] -= step;
      worst = std::max(worst, std::abs(step));
    }
    if (worst < 1e-16L) break;
  }
  for (std::size_t i = 0; i < n; ++i)
    if (std::abs(std::abs(z[i]) - 1.0L) > static_cast<long double>(tol))
      return false;
  return true;
}

}  // namespace

WeilReport weil_validate(const FrobeniusData& f, double tol) {
  WeilReport r;
  r.duality = duality_holds(f);
  r.root_moduli = roots_on_circle(f, tol);
  return r;
}

namespace {

// power sums of the roots via Newton's identities, e_k = (-1)^k a_{22-k}
std::vector<Int> power_sums(const std::vector<Int>& a, unsigned long n) {
  std::vector<Int> e(kDeg + 1);
  for (std::size_t k = 0; k <= kDeg; ++k)
    e[k] = (k % 2 == 0) ? a[kDeg - k] : -a[kDeg - k];
  std::vector<Int> p(n + 1);
  p[0] = kDeg;
  for (unsigned long k = 1; k <= n; ++k) {
    Int s = 0;
    for (unsigned long i = 1; i < k && i <= kDeg; ++i) {
      Int term = e[i] * p[k - i];
      s += (i % 2 == 1) ? term : -term;
    }
    if (k <= kDeg) {
      Int term = Int(k) * e[k];
      s += (k % 2 == 1) ? term : -term;
    }
    p[k] = s;
  }
  return p;
}

Int trace_unchecked(const FrobeniusData& f, unsigned long n) {
  return power_sums(f.charpoly(), n)[n];
}

}  // namespace

Int h2_trace(const FrobeniusData& f, unsigned long n) {
  if (n == 0) throw validation_error("n must be positive");
  require_duality(f);
  return trace_unchecked(f, n);
}

Int point_count(const FrobeniusData& f, unsigned long n) {
  return 1 + pow_int(f.q(), 2 * n) + h2_trace(f, n);
}

Int mukai_trace(const FrobeniusData& f, unsigned long n) {
  return h2_trace(f, n) + 2 * pow_int(f.q(), n);
}

ZetaComparison zeta_equal(const FrobeniusData& f1, const FrobeniusData& f2) {
  if (f1.q() != f2.q()) throw validation_error("mismatched base fields");
  if (f1.charpoly() == f2.charpoly()) return ZetaComparison{true, std::nullopt};
  // distinct monic degree-22 polynomials must differ in some power sum
  // with n <= 22; point counts differ exactly where the traces do
  std::vector<Int> p1 = power_sums(f1.charpoly(), kDeg);
  std::vector<Int> p2 = power_sums(f2.charpoly(), kDeg);
  for (unsigned long n = 1; n <= kDeg; ++n)
    if (p1[n] != p2[n]) return ZetaComparison{false, n};
  throw computation_error("distinct charpolys share all 22 power sums");
}

NewtonSlopes newton_slopes(const FrobeniusData& f) {
  const std::vector<Int>& a = f.charpoly();
  std::vector<std::pair<unsigned long, unsigned long>> pts;  // (i, v_p(a_i))
  for (unsigned long i = 0; i <= kDeg; ++i)
    if (a[i] != 0) pts.emplace_back(i, valuation(a[i], f.p()));

  NewtonSlopes out;
  std::size_t cur = 0;
  while (pts[cur].first < kDeg) {
    // next hull vertex: minimal slope, ties resolved by the longest reach
    std::size_t best = cur + 1;
    for (std::size_t j = cur + 2; j < pts.size(); ++j) {
      // compare (v_j - v_c)/(i_j - i_c) <= (v_best - v_c)/(i_best - i_c)
      long dv_j = static_cast<long>(pts[j].second) -
                  static_cast<long>(pts[cur].second);
      long dv_b = static_cast<long>(pts[best].second) -
                  static_cast<long>(pts[cur].second);
      long di_j = static_cast<long>(pts[j].first - pts[cur].first);
      long di_b = static_cast<long>(pts[best].first - pts[cur].first);
      if (dv_j * di_b <= dv_b * di_j) best = j;
    }
    long len = static_cast<long>(pts[best].first - pts[cur].first);
    long drop = static_cast<long>(pts[cur].second) -
                static_cast<long>(pts[best].second);
    // root valuation = -slope of the hull segment, rescaled by v_p(q)
    Rat val = Rat(Int(drop)) /
              Rat(Int(len) * Int(static_cast<long>(f.field_degree())));
    for (long t = 0; t < len; ++t) out.slopes.push_back(val);
    cur = best;
  }
  std::sort(out.slopes.begin(), out.slopes.end());

  bool all_one = true;
  for (const Rat& s : out.slopes)
    if (s != 1) all_one = false;
  if (all_one) {
    out.classification = "supersingular";
    return out;
  }
  Rat smallest = out.slopes.front();
  Rat gap = Rat(1) - smallest;  // should be 1/h
  if (gap > 0 && gap <= 1 && gap.get_num() == 1) {
    out.classification = "finite height";
    out.height = gap.get_den().get_ui();
  } else {
    out.classification = "irregular";
  }
  return out;
}

}  // namespace k3fm
