// Exact rational feasibility for small linear systems (internal helper).
#pragma once

#include <optional>

#include "bbgkz/exact.hpp"

namespace bbgkz::detail {

/// A point x (free variables) with A_le x <= b_le and A_eq x == b_eq, or
/// nullopt when infeasible. Phase-one simplex with Bland's rule.
std::optional<RatVector> find_feasible(const RatMatrix &A_le, const RatVector &b_le,
                                       const RatMatrix &A_eq, const RatVector &b_eq,
                                       std::size_t num_vars);

} // namespace bbgkz::detail
