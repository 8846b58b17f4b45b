#pragma once

#include <optional>

#include "k3fm/matrix.hpp"

namespace k3fm {

// U * A * V = D with U, V unimodular and D diagonal, d_i | d_{i+1}, d_i >= 0.
// v_inv = V^{-1} is tracked alongside so callers can change basis both ways.
struct SmithForm {
  IntMat d, u, v, v_inv;
  std::size_t rank = 0;
  std::vector<Int> invariant_factors;  // the nonzero d_i, ascending divisibility
};

SmithForm smith_form(const IntMat& a);

// Canonical row Hermite normal form: pivot columns strictly increasing,
// pivots positive, entries above each pivot reduced into [0, pivot).
// Zero rows are dropped; the result has full row rank.
IntMat row_hnf(const IntMat& a);

std::size_t rank_of(const IntMat& a);

// Basis of { x : A x = 0 }, one kernel vector per row. Saturated by
// construction (columns of the Smith V).
IntMat right_kernel(const IntMat& a);

// One solution of A x = b over the integers, if any.
std::optional<Vec> solve_integer(const IntMat& a, const Vec& b);

// One solution of A x = b over F_p, if any (p prime).
std::optional<Vec> solve_mod_p(const IntMat& a, const Vec& b, const Int& p);

}  // namespace k3fm
