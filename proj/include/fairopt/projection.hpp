#pragma once

#include <span>
#include <vector>

namespace fairopt {

using Matrix = std::vector<std::vector<double>>;  // y[i][k], components x ranks

// Euclidean projection of v onto the capped simplex {x in [0,1]^n, sum x = k}.
// Sort-based breakpoint scan, O(n log n).
std::vector<double> project_capped_simplex(std::span<const double> v, int k);

// Projection onto the dual-weight polytope
//   { y >= 0, y[i][k] <= deltas[k], sum_i y[i][k] = (k+1) * deltas[k] }
// decomposed into one rescaled capped-simplex projection per rank column.
// Requires every delta > 0. Output entries are snapped into the box and the
// residual column-sum error (<= 1e-9) is spread over interior entries.
Matrix project_dual(const Matrix& yraw, std::span<const double> deltas);

// Exact capped-simplex projection by enumerating all 3^n active-set patterns
// and checking KKT consistency. Verification oracle; capped at n <= 6.
std::vector<double> qp_projection_oracle(std::span<const double> v, int k);

}  // namespace fairopt
