#include "orbitpart/geometry.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <numeric>

#include "orbitpart/error.hpp"

namespace orbitpart {

Regularity polygon_regularity(const Mat& points, double tol) {
    if (points.rows() != 2) fail(ErrorCode::InvalidParameter, "polygon regularity needs planar points");
    const int n = static_cast<int>(points.cols());
    if (n < 3) fail(ErrorCode::DegenerateInput, "need at least three points for a polygon");
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j)
            if ((points.col(i) - points.col(j)).norm() <= tol)
                fail(ErrorCode::DegenerateInput, "repeated polygon vertex");

    const Vec c = points.rowwise().mean();
    std::vector<double> radius(n), angle(n);
    for (int i = 0; i < n; ++i) {
        const Vec v = points.col(i) - c;
        radius[i] = v.norm();
        angle[i] = std::atan2(v(1), v(0));
    }
    const double rmean = std::accumulate(radius.begin(), radius.end(), 0.0) / n;
    if (rmean <= tol) fail(ErrorCode::DegenerateInput, "points collapse to their centroid");

    double dev = 0.0;
    for (double x : radius) dev = std::max(dev, std::abs(x - rmean) / rmean);
    std::sort(angle.begin(), angle.end());
    const double step = 2.0 * std::numbers::pi / n;
    for (int i = 0; i < n; ++i) {
        double gap = (i + 1 < n ? angle[i + 1] : angle[0] + 2.0 * std::numbers::pi) - angle[i];
        dev = std::max(dev, std::abs(gap - step));
    }
    return {dev <= tol, dev};
}

std::vector<double> distance_multiset(const Mat& points) {
    std::vector<double> out;
    for (Eigen::Index i = 0; i < points.cols(); ++i)
        for (Eigen::Index j = i + 1; j < points.cols(); ++j) out.push_back((points.col(i) - points.col(j)).norm());
    std::sort(out.begin(), out.end());
    return out;
}

std::vector<int> convex_hull_2d(const Mat& points) {
    const int n = static_cast<int>(points.cols());
    std::vector<int> idx(n);
    for (int i = 0; i < n; ++i) idx[i] = i;
    std::sort(idx.begin(), idx.end(), [&](int a, int b) {
        return points(0, a) < points(0, b) || (points(0, a) == points(0, b) && points(1, a) < points(1, b));
    });
    if (n < 3) return idx;
    auto cross = [&](int o, int a, int b) {
        return (points(0, a) - points(0, o)) * (points(1, b) - points(1, o)) -
               (points(1, a) - points(1, o)) * (points(0, b) - points(0, o));
    };
    std::vector<int> hull(2 * n);
    int k = 0;
    for (int i = 0; i < n; ++i) {
        while (k >= 2 && cross(hull[k - 2], hull[k - 1], idx[i]) <= 0) --k;
        hull[k++] = idx[i];
    }
    for (int i = n - 2, lower = k + 1; i >= 0; --i) {
        while (k >= lower && cross(hull[k - 2], hull[k - 1], idx[i]) <= 0) --k;
        hull[k++] = idx[i];
    }
    hull.resize(k - 1);
    return hull;
}

std::vector<Facet> convex_hull_3d(const Mat& points) {
    if (points.rows() != 3) fail(ErrorCode::InvalidParameter, "convex_hull_3d needs points in R^3");
    const int n = static_cast<int>(points.cols());
    double scale = 0.0;
    for (int i = 0; i < n; ++i) scale = std::max(scale, points.col(i).norm());
    const double eps = 1e-9 * std::max(1.0, scale);

    std::vector<Facet> facets;
    auto known = [&](const Eigen::Vector3d& nrm, double off) {
        for (const auto& f : facets)
            if ((f.normal - nrm).norm() < 1e-9 && std::abs(f.offset - off) < eps) return true;
        return false;
    };
    for (int a = 0; a < n; ++a)
        for (int b = a + 1; b < n; ++b)
            for (int c = b + 1; c < n; ++c) {
                Eigen::Vector3d pa = points.col(a), pb = points.col(b), pc = points.col(c);
                Eigen::Vector3d nrm = (pb - pa).cross(pc - pa);
                if (nrm.norm() <= eps * std::max(1.0, scale)) continue;
                nrm.normalize();
                double off = nrm.dot(pa);
                bool above = false, below = false;
                for (int i = 0; i < n; ++i) {
                    const double s = nrm.dot(Eigen::Vector3d(points.col(i))) - off;
                    above = above || s > eps;
                    below = below || s < -eps;
                }
                if (above && below) continue;
                if (above) {
                    nrm = -nrm;
                    off = -off;
                }
                if (known(nrm, off)) continue;

                Facet f;
                f.normal = nrm;
                f.offset = off;
                std::vector<int> on;
                for (int i = 0; i < n; ++i)
                    if (std::abs(nrm.dot(Eigen::Vector3d(points.col(i))) - off) <= eps) on.push_back(i);
                Eigen::Vector3d centre = Eigen::Vector3d::Zero();
                for (int i : on) centre += points.col(i);
                centre /= static_cast<double>(on.size());
                Eigen::Vector3d e1 = (Eigen::Vector3d(points.col(on[0])) - centre);
                if (e1.norm() <= eps) e1 = Eigen::Vector3d(points.col(on[1])) - centre;
                e1.normalize();
                const Eigen::Vector3d e2 = nrm.cross(e1);
                Mat planar(2, static_cast<Eigen::Index>(on.size()));
                for (std::size_t i = 0; i < on.size(); ++i) {
                    const Eigen::Vector3d v = Eigen::Vector3d(points.col(on[i])) - centre;
                    planar(0, static_cast<Eigen::Index>(i)) = v.dot(e1);
                    planar(1, static_cast<Eigen::Index>(i)) = v.dot(e2);
                }
                for (int i : convex_hull_2d(planar)) f.vertices.push_back(on[i]);
                facets.push_back(std::move(f));
            }
    return facets;
}

std::vector<std::array<int, 2>> hull_edges_3d(const std::vector<Facet>& facets) {
    std::vector<std::array<int, 2>> edges;
    for (const auto& f : facets) {
        const std::size_t m = f.vertices.size();
        for (std::size_t i = 0; i < m; ++i) {
            int a = f.vertices[i], b = f.vertices[(i + 1) % m];
            if (a > b) std::swap(a, b);
            edges.push_back({a, b});
        }
    }
    std::sort(edges.begin(), edges.end());
    edges.erase(std::unique(edges.begin(), edges.end()), edges.end());
    return edges;
}

}  // namespace orbitpart
