#pragma once

#include <vector>

#include <Eigen/Dense>

#include "cylrig/rational.hpp"

namespace cylrig {

/// Default relative singular-value threshold for floating rank.
inline constexpr double kRankTolerance = 1e-9;

/// Rank over the rationals by fraction-free (Bareiss) elimination on
/// integer-scaled rows. Rows may be empty; all rows must have equal length.
int exact_rank(const std::vector<Vector>& rows);

/// Number of singular values above tau * sigma_max.
int float_rank(const Eigen::MatrixXd& m, double tau = kRankTolerance);

/// Singular values in decreasing order.
Eigen::VectorXd singular_values(const Eigen::MatrixXd& m);

}  // namespace cylrig
