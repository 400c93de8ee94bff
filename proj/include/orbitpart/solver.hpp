#pragma once

#include <cstdint>
#include <vector>

#include "orbitpart/error.hpp"
#include "orbitpart/testmap.hpp"

namespace orbitpart {

struct MinNormResult {
    Vec x;
    Vec coeffs;  // convex weights, one per input point
    int iterations = 0;
};

/// Raised when the minimum-norm iteration hits its cap; carries the best
/// iterate found.
class MinNormFailure : public Error {
public:
    MinNormFailure(const std::string& what, MinNormResult best)
        : Error(ErrorCode::NumericalFailure, what), best_(std::move(best)) {}
    const MinNormResult& best() const noexcept { return best_; }

private:
    MinNormResult best_;
};

/// Minimum-norm point of the convex hull of the columns of `points`
/// (Wolfe's algorithm). `max_iter` = 0 selects the default cap of 50 * k.
MinNormResult min_norm_point(const Mat& points, int max_iter = 0);

/// Worst violation of the optimality condition <p - x, x> >= 0 over the
/// columns p, scaled by 1 + ||x|| ||p||. Nonpositive values are violations
/// of that size; the result is the minimum over points.
double min_norm_certificate(const Mat& points, const Vec& x);

struct SolverOptions {
    double tol = 1e-9;
    int max_iter = 10'000;
    int restarts = 10;
    std::uint64_t seed = 0;
    int threads = 0;  // 0: hardware concurrency
    bool record_trace = false;
};

struct SolverResult {
    ColorfulSelection selection;
    double residual = 0.0;
    int iterations = 0;
    int restarts_used = 0;
    bool converged = false;
    std::vector<double> trace;  // ||x|| after each min-norm solve, when recorded
};

/// Colourful pivoting from the given initial assignment: repeatedly take the
/// minimum-norm point x of the current colourful set and swap in, for a
/// colour outside the support of x, the class point minimising <p, x>.
SolverResult barany_onn_solve(const ColorClasses& classes, std::vector<Element> initial, const SolverOptions& opts);
/// Same, starting from a random assignment drawn from `seed`.
SolverResult barany_onn_solve(const ColorClasses& classes, const SolverOptions& opts, std::uint64_t seed);

inline constexpr double kBruteForceLimit = 1e7;

struct BruteForceResult {
    SolverResult best;
    std::uint64_t assignments = 0;
};

/// Exhaustive minimum over all r^N colourful selections. Ties within 1e-12
/// go to the lexicographically smallest assignment.
BruteForceResult brute_force_solve(const ColorClasses& classes);

/// Runs colourful pivoting from `restarts` seeded random starts and returns
/// the first converged run (lowest restart index) or the best residual.
SolverResult solve_with_restarts(const ColorClasses& classes, const SolverOptions& opts);

}  // namespace orbitpart
