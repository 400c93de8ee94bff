#include "orbitpart/render.hpp"

#include <algorithm>
#include <cstdio>
#include <string>

#include "orbitpart/error.hpp"
#include "orbitpart/geometry.hpp"

namespace orbitpart {

namespace {

constexpr const char* kPalette[12] = {"#1f77b4", "#ff7f0e", "#2ca02c", "#d62728", "#9467bd", "#8c564b",
                                      "#e377c2", "#7f7f7f", "#bcbd22", "#17becf", "#393b79", "#637939"};

std::string num(double x) {
    char buf[32];
    std::snprintf(buf, sizeof buf, "%.6g", x);
    return buf;
}

std::string num17(double x) {
    char buf[32];
    std::snprintf(buf, sizeof buf, "%.17g", x);
    return buf;
}

Mat subset_points(const Configuration& config, const std::vector<int>& idx) {
    Mat out(config.dim(), static_cast<Eigen::Index>(idx.size()));
    for (std::size_t i = 0; i < idx.size(); ++i) out.col(static_cast<Eigen::Index>(i)) = config.points.col(idx[i]);
    return out;
}

// Polygon order of coplanar points in R^3 (or a segment), as local indices.
std::vector<int> planar_order(const Mat& pts) {
    const Vec c = pts.rowwise().mean();
    const Mat centred = pts.colwise() - c;
    Eigen::JacobiSVD<Mat> svd(centred, Eigen::ComputeThinU);
    const Mat basis = svd.matrixU().leftCols(std::min<Eigen::Index>(2, svd.matrixU().cols()));
    Mat planar = Mat::Zero(2, pts.cols());
    planar.topRows(basis.cols()) = basis.transpose() * centred;
    return convex_hull_2d(planar);
}

}  // namespace

std::string render_svg(const Configuration& config, const OrbitPartition& p) {
    if (config.dim() != 2) fail(ErrorCode::RenderUnsupported, "SVG output needs planar points");
    Mat all(2, config.count() + p.witnesses.cols());
    all << config.points, p.witnesses;
    const Eigen::Vector2d lo = all.rowwise().minCoeff(), hi = all.rowwise().maxCoeff();
    const double size = 800.0, margin = 0.05 * size;
    const double span = std::max({hi(0) - lo(0), hi(1) - lo(1), 1e-12});
    const double scale = (size - 2 * margin) / span;
    const double ox = margin + ((size - 2 * margin) - (hi(0) - lo(0)) * scale) / 2;
    const double oy = margin + ((size - 2 * margin) - (hi(1) - lo(1)) * scale) / 2;
    auto sx = [&](double x) { return num(ox + (x - lo(0)) * scale); };
    auto sy = [&](double y) { return num(size - oy - (y - lo(1)) * scale); };

    std::string out = "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"800\" height=\"800\" viewBox=\"0 0 800 800\">\n";
    out += "<rect width=\"800\" height=\"800\" fill=\"white\"/>\n";
    for (std::size_t g = 0; g < p.subsets.size(); ++g) {
        const char* colour = kPalette[g % 12];
        const Mat pts = subset_points(config, p.subsets[g]);
        const auto hull = convex_hull_2d(pts);
        if (hull.size() >= 2) {
            out += "<polygon fill=\"";
            out += colour;
            out += "\" fill-opacity=\"0.12\" stroke=\"";
            out += colour;
            out += "\" stroke-width=\"1.5\" points=\"";
            for (std::size_t k = 0; k < hull.size(); ++k) {
                if (k) out += ' ';
                out += sx(pts(0, hull[k])) + "," + sy(pts(1, hull[k]));
            }
            out += "\"/>\n";
        }
        for (Eigen::Index k = 0; k < pts.cols(); ++k)
            out += "<circle cx=\"" + sx(pts(0, k)) + "\" cy=\"" + sy(pts(1, k)) + "\" r=\"4\" fill=\"" + colour + "\"/>\n";
    }
    const auto whull = convex_hull_2d(p.witnesses);
    if (whull.size() >= 2) {
        out += "<polygon fill=\"none\" stroke=\"black\" stroke-width=\"2\" stroke-dasharray=\"6,4\" points=\"";
        for (std::size_t k = 0; k < whull.size(); ++k) {
            if (k) out += ' ';
            out += sx(p.witnesses(0, whull[k])) + "," + sy(p.witnesses(1, whull[k]));
        }
        out += "\"/>\n";
    }
    for (Eigen::Index g = 0; g < p.witnesses.cols(); ++g)
        out += "<rect x=\"" + num(ox + (p.witnesses(0, g) - lo(0)) * scale - 3) + "\" y=\"" +
               num(size - oy - (p.witnesses(1, g) - lo(1)) * scale - 3) +
               "\" width=\"6\" height=\"6\" fill=\"black\"/>\n";
    out += "</svg>\n";
    return out;
}

std::string render_obj(const Configuration& config, const OrbitPartition& p) {
    if (config.dim() != 3) fail(ErrorCode::RenderUnsupported, "OBJ output needs points in R^3");
    std::string out = "# orbit partition: " + std::to_string(config.count()) + " points, " +
                      std::to_string(p.subsets.size()) + " subsets\n";
    for (int j = 0; j < config.count(); ++j)
        out += "v " + num17(config.points(0, j)) + " " + num17(config.points(1, j)) + " " + num17(config.points(2, j)) + "\n";
    const int base = config.count();
    for (Eigen::Index g = 0; g < p.witnesses.cols(); ++g)
        out += "v " + num17(p.witnesses(0, g)) + " " + num17(p.witnesses(1, g)) + " " + num17(p.witnesses(2, g)) + "\n";

    for (std::size_t g = 0; g < p.subsets.size(); ++g) {
        const auto& idx = p.subsets[g];
        out += "g subset_" + std::to_string(g) + "\n";
        const Mat pts = subset_points(config, idx);
        const int dim = affine_dim_points(pts);
        if (dim == 3) {
            for (const auto& f : convex_hull_3d(pts)) {
                out += "f";
                for (int v : f.vertices) out += " " + std::to_string(idx[v] + 1);
                out += "\n";
            }
        } else if (dim == 2) {
            out += "f";
            for (int v : planar_order(pts)) out += " " + std::to_string(idx[v] + 1);
            out += "\n";
        } else if (dim == 1) {
            const auto ord = planar_order(pts);
            out += "l " + std::to_string(idx[ord.front()] + 1) + " " + std::to_string(idx[ord.back()] + 1) + "\n";
        }
    }

    out += "g witness\n";
    const int wdim = affine_dim_points(p.witnesses);
    if (wdim == 3) {
        for (const auto& e : hull_edges_3d(convex_hull_3d(p.witnesses)))
            out += "l " + std::to_string(base + e[0] + 1) + " " + std::to_string(base + e[1] + 1) + "\n";
    } else if (wdim >= 1) {
        const auto ord = planar_order(p.witnesses);
        for (std::size_t k = 0; k < ord.size(); ++k) {
            const std::size_t next = (k + 1) % ord.size();
            if (ord.size() == 2 && k == 1) break;
            out += "l " + std::to_string(base + ord[k] + 1) + " " + std::to_string(base + ord[next] + 1) + "\n";
        }
    }
    return out;
}

Rendering render(const Configuration& config, const OrbitPartition& p, std::optional<std::array<int, 3>> projection) {
    const int d = config.dim();
    if (projection) {
        const auto& ax = *projection;
        for (int a : ax)
            if (a < 0 || a >= d) fail(ErrorCode::InvalidParameter, "projection index out of range");
        if (ax[0] == ax[1] || ax[0] == ax[2] || ax[1] == ax[2])
            fail(ErrorCode::InvalidParameter, "projection indices must be distinct");
        Configuration c{Mat(3, config.count())};
        OrbitPartition q = p;
        q.witnesses.resize(3, p.witnesses.cols());
        for (int k = 0; k < 3; ++k) {
            c.points.row(k) = config.points.row(ax[k]);
            q.witnesses.row(k) = p.witnesses.row(ax[k]);
        }
        return {"obj", render_obj(c, q)};
    }
    if (d == 2) return {"svg", render_svg(config, p)};
    if (d == 3) return {"obj", render_obj(config, p)};
    fail(ErrorCode::RenderUnsupported, "cannot render points in R^" + std::to_string(d) +
                                           "; choose three coordinates with --project \"i,j,k\"");
}

}  // namespace orbitpart
