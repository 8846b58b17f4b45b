#include "k3fm/numeric.hpp"

#include <cstddef>

#include "k3fm/errors.hpp"

namespace k3fm {

ExtGcd ext_gcd(const Int& a, const Int& b) {
  ExtGcd r;
  mpz_gcdext(r.g.get_mpz_t(), r.x.get_mpz_t(), r.y.get_mpz_t(), a.get_mpz_t(),
             b.get_mpz_t());
  return r;
}

Int pow_int(const Int& base, unsigned long exp) {
  Int r;
  mpz_pow_ui(r.get_mpz_t(), base.get_mpz_t(), exp);
  return r;
}

unsigned long valuation(Int a, const Int& p) {
  if (a == 0) throw validation_error("valuation of zero is undefined");
  unsigned long v = 0;
  while (mpz_divisible_p(a.get_mpz_t(), p.get_mpz_t())) {
    a /= p;
    ++v;
  }
  return v;
}

bool is_prime(const Int& n) {
  if (n < 2) return false;
  return mpz_probab_prime_p(n.get_mpz_t(), 40) > 0;
}

namespace {

Int pollard_brent(const Int& n) {
  // Brent's cycle variant of Pollard rho, x^2 + c with c = 1, 2, ...
  for (Int c = 1;; ++c) {
    Int x = 2, y = 2, d = 1;
    Int saved_y = y;
    unsigned long power = 1, lam = 0;
    while (d == 1) {
      if (lam == power) {
        x = y;
        power *= 2;
        lam = 0;
      }
      y = (y * y + c) % n;
      ++lam;
      Int diff = x - y;
      if (diff < 0) diff = -diff;
      if (diff == 0) break;  // cycle without factor; try next c
      d = gcd(diff, n);
      (void)saved_y;
    }
    if (d != 1 && d != n) return d;
  }
}

void factor_rec(Int n, std::map<Int, unsigned long>& out) {
  if (n == 1) return;
  if (is_prime(n)) {
    ++out[n];
    return;
  }
  Int d = pollard_brent(n);
  factor_rec(d, out);
  factor_rec(n / d, out);
}

}  // namespace

std::map<Int, unsigned long> factor(Int n) {
  if (n < 0) n = -n;
  if (n == 0) throw validation_error("cannot factor zero");
  std::map<Int, unsigned long> out;
  for (Int p : {Int(2), Int(3), Int(5)}) {
    while (n % p == 0) {
      ++out[p];
      n /= p;
    }
  }
  // wheel over 6k +- 1 up to 10^5, then rho for the survivors
  for (Int p = 7; p <= 100000 && p * p <= n; p += 4) {
    while (n % p == 0) {
      ++out[p];
      n /= p;
    }
    p += 2;
    while (n % p == 0) {
      ++out[p];
      n /= p;
    }
  }
  if (n > 1) {
    if (is_prime(n)) {
      ++out[n];
    } else {
      factor_rec(n, out);
    }
  }
  return out;
}

bool is_squarefree(const Int& n) {
  if (n == 0) return false;
  for (auto& [p, e] : factor(n))
    if (e > 1) return false;
  return true;
}

Int ndiv_q(const Int& a, const Int& b) {
  Int q, r;
  mpz_fdiv_qr(q.get_mpz_t(), r.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
  Int babs = b < 0 ? Int(-b) : b;
  if (2 * r > babs) q += 1;
  return q;
}

std::string to_string(const Int& v) { return v.get_str(); }

Int parse_int(const std::string& s) {
  if (s.empty()) throw validation_error("empty integer literal");
  std::size_t i = (s[0] == '-') ? 1 : 0;
  if (i == s.size()) throw validation_error("bad integer literal: " + s);
  for (; i < s.size(); ++i)
    if (s[i] < '0' || s[i] > '9')
      throw validation_error("bad integer literal: " + s);
  return Int(s);
}

std::string to_string(const Rat& v) {
  Rat c = v;
  c.canonicalize();
  if (c.get_den() == 1) return c.get_num().get_str();
  return c.get_num().get_str() + "/" + c.get_den().get_str();
}

}  // namespace k3fm
