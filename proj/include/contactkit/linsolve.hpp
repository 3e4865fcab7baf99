#pragma once

#include "contactkit/ratfn.hpp"

#include <vector>

namespace contactkit {

using RatFnMatrix = std::vector<std::vector<RatFn>>;

/// Exact Gaussian elimination with first-nonzero pivoting over the
/// rational-function field. Accepts m x k systems with m >= k; throws
/// SingularMatrix when some column has no pivot and InconsistentSystem when
/// a zero row is left with a nonzero right-hand side.
std::vector<RatFn> solve_linear(const RatFnMatrix &mtx,
                                const std::vector<RatFn> &rhs);

/// Rank over the rational-function field (exact elimination).
int matrix_rank(RatFnMatrix mtx);

} // namespace contactkit
