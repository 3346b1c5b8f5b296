#include "lp.hpp"

namespace bbgkz::detail {

std::optional<RatVector> find_feasible(const RatMatrix &A_le, const RatVector &b_le,
                                       const RatMatrix &A_eq, const RatVector &b_eq,
                                       std::size_t num_vars) {
  const std::size_t n_le = b_le.size(), n_eq = b_eq.size();
  const std::size_t m = n_le + n_eq;
  // columns: x+ (n), x- (n), slacks (n_le), artificials (m), rhs
  const std::size_t n = num_vars;
  const std::size_t first_art = 2 * n + n_le;
  const std::size_t rhs = first_art + m;
  if (m == 0) return RatVector(n);

  RatMatrix T(m + 1, rhs + 1);
  std::vector<std::size_t> basis(m);
  for (std::size_t r = 0; r < m; ++r) {
    const bool le = r < n_le;
    for (std::size_t c = 0; c < n; ++c) {
      const Rational &a = le ? A_le(r, c) : A_eq(r - n_le, c);
      T(r, c) = a;
      T(r, n + c) = -a;
    }
    if (le) T(r, 2 * n + r) = 1;
    T(r, rhs) = le ? b_le[r] : b_eq[r - n_le];
    if (T(r, rhs) < 0)
      for (std::size_t c = 0; c < first_art; ++c) T(r, c) = -T(r, c);
    if (T(r, rhs) < 0) T(r, rhs) = -T(r, rhs);
    T(r, first_art + r) = 1;
    basis[r] = first_art + r;
  }
  for (std::size_t c = 0; c < first_art; ++c)
    for (std::size_t r = 0; r < m; ++r) T(m, c) += T(r, c);
  for (std::size_t r = 0; r < m; ++r) T(m, rhs) += T(r, rhs);

  for (;;) {
    std::size_t enter = first_art;
    for (std::size_t c = 0; c < first_art; ++c)
      if (T(m, c) > 0) {
        enter = c;
        break;
      }
    if (enter == first_art) break;
    std::size_t leave = m;
    Rational best;
    for (std::size_t r = 0; r < m; ++r) {
      if (T(r, enter) <= 0) continue;
      Rational ratio = T(r, rhs) / T(r, enter);
      if (leave == m || ratio < best || (ratio == best && basis[r] < basis[leave])) {
        leave = r;
        best = ratio;
      }
    }
    if (leave == m) break; // unbounded direction; cannot happen in phase one
    Rational piv = T(leave, enter);
    for (std::size_t c = 0; c <= rhs; ++c) T(leave, c) /= piv;
    for (std::size_t r = 0; r <= m; ++r) {
      if (r == leave || T(r, enter) == 0) continue;
      Rational f = T(r, enter);
      for (std::size_t c = 0; c <= rhs; ++c) T(r, c) -= f * T(leave, c);
    }
    basis[leave] = enter;
  }
  if (T(m, rhs) != 0) return std::nullopt;

  RatVector x(n);
  for (std::size_t r = 0; r < m; ++r) {
    if (basis[r] < n) x[basis[r]] += T(r, rhs);
    else if (basis[r] < 2 * n) x[basis[r] - n] -= T(r, rhs);
  }
  return x;
}

} // namespace bbgkz::detail
