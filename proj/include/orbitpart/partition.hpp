#pragma once

#include <vector>

#include "orbitpart/check.hpp"
#include "orbitpart/testmap.hpp"

namespace orbitpart {

/// Certificate of an orbit partition: subsets A_g, points x_g in their hulls
/// and a translated orbit a + rho(g) u matching them.
struct OrbitPartition {
    std::vector<std::vector<int>> subsets;           // per element, sorted 0-based point indices
    std::vector<std::vector<double>> hull_weights;   // aligned with subsets
    Mat witnesses;                                   // d x r, column g is x_g
    Vec center;                                      // a
    Vec generator;                                   // u
    double residual = 0.0;                           // max_g ||x_g - a - rho(g) u||
    bool free = false;
    bool full_dim = false;
};

/// Groups a zero of the test map into subsets and witnesses and recovers
/// a = r c0 and u = r c_rho. Throws NotAZero when the selection is not a
/// zero within `tol` or some join weight is away from 1/r.
OrbitPartition assemble(const TestMap& tm, const Representation& rep, const Configuration& config,
                        const ColorfulSelection& sel, double tol = 1e-8);

/// max_g ||x_g - a - rho(g) u||.
double orbit_residual(const Representation& rep, const Mat& witnesses, const Vec& center, const Vec& generator);

/// Recomputes every invariant of `partition` from the raw inputs.
CheckList verify(const OrbitPartition& partition, const Representation& rep, const Configuration& config,
                 double tol = 1e-8);

struct PolytopeReport {
    Mat vertices;  // d x r, a + rho(g) u
    bool is_free = false;
    int affine_dim = 0;
};

PolytopeReport polytope_report(const Representation& rep, const Vec& u, const Vec& a);

struct IntersectionReport {
    std::vector<std::vector<Element>> cosets;           // right cosets gK, representative first
    std::vector<std::vector<std::vector<int>>> subsets;  // subsets[i][j] = A_i^j
    Mat targets;                                         // d x r1
    std::vector<std::vector<double>> membership_residuals;
    bool targets_regular = false;
    double regularity_deviation = 0.0;
};

/// Groups the subsets of a partition for a non-faithful representation by
/// cosets of the kernel and certifies each coset target y_i = a + rho(g_i) u
/// lies in every hull of that coset (distance via min-norm point).
IntersectionReport intersection_report(const Representation& rep, const Configuration& config,
                                       const OrbitPartition& partition);

}  // namespace orbitpart
