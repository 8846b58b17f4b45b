#pragma once

#include <gmpxx.h>

#include <map>
#include <string>
#include <vector>

namespace k3fm {

using Int = mpz_class;
using Rat = mpq_class;
using Vec = std::vector<Int>;

inline Int gcd(const Int& a, const Int& b) {
  Int g;
  mpz_gcd(g.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
  return g;
}

// g = gcd(a,b) together with x, y such that a*x + b*y = g.
struct ExtGcd {
  Int g, x, y;
};
ExtGcd ext_gcd(const Int& a, const Int& b);

Int pow_int(const Int& base, unsigned long exp);

// Largest e with p^e | a (a != 0).
unsigned long valuation(Int a, const Int& p);

// BPSW + Miller-Rabin via GMP; exact for every size that occurs here.
bool is_prime(const Int& n);

// Deterministic factorization: trial division, then Brent's rho with an
// incrementing polynomial constant.
std::map<Int, unsigned long> factor(Int n);

bool is_squarefree(const Int& n);

// Floor division and the matching remainder (0 <= r < |b| for b > 0).
inline Int fdiv_q(const Int& a, const Int& b) {
  Int q;
  mpz_fdiv_q(q.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
  return q;
}
inline Int fdiv_r(const Int& a, const Int& b) {
  Int r;
  mpz_fdiv_r(r.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
  return r;
}

// Quotient rounded to nearest (ties toward zero); keeps normal-form pivots small.
Int ndiv_q(const Int& a, const Int& b);

inline Int mod_p(const Int& a, const Int& p) { return fdiv_r(a, p); }

std::string to_string(const Int& v);
Int parse_int(const std::string& s);  // strict decimal with optional leading '-'

std::string to_string(const Rat& v);  // "n" or "n/d", canonicalized

}  // namespace k3fm
