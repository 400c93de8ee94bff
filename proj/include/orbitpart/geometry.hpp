#pragma once

#include <array>
#include <vector>

#include "orbitpart/linalg.hpp"

namespace orbitpart {

struct Regularity {
    bool is_regular = false;
    double max_deviation = 0.0;
};

/// Regular-polygon predicate for points in R^2 (columns): equal distances
/// to the centroid and equal consecutive central angles after angular sort.
Regularity polygon_regularity(const Mat& points, double tol = 1e-6);

/// Sorted pairwise distances between columns.
std::vector<double> distance_multiset(const Mat& points);

/// Counter-clockwise convex hull of planar points, as column indices.
std::vector<int> convex_hull_2d(const Mat& points);

struct Facet {
    Vec normal;
    double offset = 0.0;      // normal . x <= offset for every input point
    std::vector<int> vertices;  // counter-clockwise seen from outside
};

/// Facets of the convex hull of a full-dimensional point set in R^3.
/// Coplanar facet points are merged into one polygon. Brute force, meant for
/// the small sets produced by partitions.
std::vector<Facet> convex_hull_3d(const Mat& points);

/// Hull edges as vertex pairs (i < j), read off the facet polygons.
std::vector<std::array<int, 2>> hull_edges_3d(const std::vector<Facet>& facets);

}  // namespace orbitpart
