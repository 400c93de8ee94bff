#pragma once

#include <Eigen/Dense>

namespace orbitpart {

using Vec = Eigen::VectorXd;
using Mat = Eigen::MatrixXd;

// Relative singular-value cutoff used for every rank decision.
inline constexpr double kRankTol = 1e-8;

double max_abs(const Mat& m);

/// Numerical rank: singular values below rel_tol * sigma_max count as zero.
int numerical_rank(const Mat& m, double rel_tol = kRankTol);

/// Orthonormal basis (columns) of the column space of m.
Mat orthonormal_range(const Mat& m, double rel_tol = kRankTol);

/// Orthonormal basis (columns) of {x : m x = 0}, via a full SVD.
/// Column order is deterministic for a given input.
Mat nullspace(const Mat& m, double rel_tol = kRankTol);

/// Helmert basis: (n-1) x n matrix with orthonormal rows spanning the
/// sum-zero hyperplane of R^n.
Mat helmert_basis(int n);

/// Largest principal-angle cosine between the column spaces of two
/// orthonormal bases (0 when either is empty).
double max_principal_cosine(const Mat& a, const Mat& b);

}  // namespace orbitpart
