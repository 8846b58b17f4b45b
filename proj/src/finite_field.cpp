#include "k3fm/finite_field.hpp"

#include "k3fm/errors.hpp"

namespace k3fm {

namespace {

// polynomial residues encoded in base p, least-significant digit = constant
std::vector<long> digits(long a, long p, int k) {
  std::vector<long> d(k);
  for (int i = 0; i < k; ++i) {
    d[i] = a % p;
    a /= p;
  }
  return d;
}

long undigits(const std::vector<long>& d, long p) {
  long a = 0;
  for (std::size_t i = d.size(); i-- > 0;) a = a * p + d[i];
  return a;
}

}  // namespace

SmallField::SmallField(long q) : q_(q) {
  if (q < 3 || q > 49) throw validation_error("field size must be in [3, 49]");
  long p = 2;
  while (q % p != 0) ++p;
  if (p == 2) throw validation_error("characteristic 2 is not supported");
  p_ = p;
  k_ = 0;
  long t = q;
  while (t % p == 0) {
    t /= p;
    ++k_;
  }
  if (t != 1) throw validation_error("field size is not a prime power");
  Int pp(p_);
  if (!is_prime(pp)) throw validation_error("field characteristic is not prime");

  if (k_ > 1) {
    // first monic irreducible x^k + sum c_i x^i in lexicographic (c_0, c_1,
    // ...) order; for k <= 3 irreducibility = no roots in F_p
    long combos = 1;
    for (int i = 0; i < k_; ++i) combos *= p_;
    for (long code = 0; code < combos; ++code) {
      std::vector<long> c = digits(code, p_, k_);
      bool has_root = false;
      for (long x = 0; x < p_ && !has_root; ++x) {
        long v = 1;  // x^k
        for (int i = 0; i < k_; ++i) v = v * x % p_;
        for (int i = k_ - 1; i >= 0; --i) {
          long xi = 1;
          for (int t2 = 0; t2 < i; ++t2) xi = xi * x % p_;
          v = (v + c[i] * xi) % p_;
        }
        if (v % p_ == 0) has_root = true;
      }
      if (!has_root) {
        modpoly_ = c;
        break;
      }
    }
    if (modpoly_.empty())
      throw computation_error("no irreducible modulus found");
  }

  mul_.assign(static_cast<std::size_t>(q_) * q_, 0);
  for (long a = 0; a < q_; ++a)
    for (long b = 0; b < q_; ++b) {
      std::vector<long> da = digits(a, p_, k_), db = digits(b, p_, k_);
      std::vector<long> prod(2 * k_ - 1, 0);
      for (int i = 0; i < k_; ++i)
        for (int j = 0; j < k_; ++j)
          prod[i + j] = (prod[i + j] + da[i] * db[j]) % p_;
      for (int d = 2 * k_ - 2; d >= k_; --d) {
        long c = prod[d];
        if (c == 0) continue;
        prod[d] = 0;
        // x^d = x^{d-k} * x^k = -x^{d-k} * sum c_i x^i
        for (int i = 0; i < k_; ++i)
          prod[d - k_ + i] =
              ((prod[d - k_ + i] - c * modpoly_[i]) % p_ + p_) % p_;
      }
      prod.resize(k_);
      mul_[a * q_ + b] = undigits(prod, p_);
    }
}

long SmallField::add(long a, long b) const {
  std::vector<long> da = digits(a, p_, k_), db = digits(b, p_, k_);
  for (int i = 0; i < k_; ++i) da[i] = (da[i] + db[i]) % p_;
  return undigits(da, p_);
}

long SmallField::embed(const Int& c) const {
  return static_cast<long>(mpz_fdiv_ui(c.get_mpz_t(), p_));
}

Int count_quartic_points(const SmallField& field,
                         const std::vector<QuarticTerm>& terms) {
  if (terms.empty()) throw validation_error("quartic has no terms");
  bool nonzero = false;
  for (const QuarticTerm& t : terms) {
    int deg = 0;
    for (int e : t.exps) {
      if (e < 0) throw validation_error("negative exponent in quartic term");
      deg += e;
    }
    if (deg != 4) throw validation_error("quartic term does not have degree 4");
    if (field.embed(t.coeff) != 0) nonzero = true;
  }
  if (!nonzero) throw validation_error("quartic vanishes identically mod p");

  long q = field.q();
  // pow[e][x] for e <= 4
  std::vector<std::array<long, 5>> pw(q);
  for (long x = 0; x < q; ++x) {
    pw[x][0] = 1 % q;
    for (int e = 1; e <= 4; ++e) pw[x][e] = field.mul(pw[x][e - 1], x);
  }
  std::vector<long> coeffs;
  coeffs.reserve(terms.size());
  for (const QuarticTerm& t : terms) coeffs.push_back(field.embed(t.coeff));

  Int count = 0;
  std::array<long, 4> x{};
  // normalized representatives: leading coordinate (last nonzero) fixed to 1
  for (int lead = 0; lead < 4; ++lead) {
    long free_combos = 1;
    for (int i = 0; i < lead; ++i) free_combos *= q;
    for (long code = 0; code < free_combos; ++code) {
      long rest = code;
      for (int i = 0; i < lead; ++i) {
        x[i] = rest % q;
        rest /= q;
      }
      x[lead] = 1;
      for (int i = lead + 1; i < 4; ++i) x[i] = 0;
      long value = 0;
      for (std::size_t t = 0; t < terms.size(); ++t) {
        long m = coeffs[t];
        for (int i = 0; i < 4; ++i) m = field.mul(m, pw[x[i]][terms[t].exps[i]]);
        value = field.add(value, m);
      }
      if (value == 0) count += 1;
    }
  }
  return count;
}

}  // namespace k3fm
