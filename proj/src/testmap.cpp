#include "orbitpart/testmap.hpp"

#include <cmath>

#include "orbitpart/catalog.hpp"
#include "orbitpart/error.hpp"

namespace orbitpart {

bool is_affinely_degenerate(const Configuration& config) {
    return affine_dim_points(config.points) < config.dim();
}

void validate_selection(const ColorfulSelection& sel, int n_points, int order) {
    if (sel.size() != n_points || static_cast<int>(sel.weights.size()) != n_points)
        fail(ErrorCode::InvalidParameter, "selection length does not match point count");
    double sum = 0.0;
    for (int j = 0; j < n_points; ++j) {
        if (sel.assignment[j] < 0 || sel.assignment[j] >= order)
            fail(ErrorCode::InvalidParameter, "selection uses an invalid group element");
        if (!(sel.weights[j] >= 0.0)) fail(ErrorCode::InvalidParameter, "selection weights must be nonnegative");
        sum += sel.weights[j];
    }
    if (std::abs(sum - 1.0) > 1e-12) fail(ErrorCode::InvalidParameter, "selection weights must sum to 1");
}

ColorClasses::ColorClasses(Mat columns, int n_colors, int class_size)
    : columns_(std::move(columns)), n_colors_(n_colors), class_size_(class_size) {
    if (n_colors < 1 || class_size < 1 || columns_.cols() != static_cast<Eigen::Index>(n_colors) * class_size)
        fail(ErrorCode::InvalidParameter, "colour class layout does not match column count");
}

double ColorClasses::max_relative_class_mean() const {
    double scale = 0.0;
    for (Eigen::Index c = 0; c < columns_.cols(); ++c) scale = std::max(scale, columns_.col(c).norm());
    if (scale == 0.0) return 0.0;
    double worst = 0.0;
    for (int j = 0; j < n_colors_; ++j) {
        const Vec sum = columns_.middleCols(static_cast<Eigen::Index>(j) * class_size_, class_size_).rowwise().sum();
        worst = std::max(worst, sum.norm());
    }
    return worst / scale;
}

Vec raw_F_column(const Representation& rep, const Configuration& config, int j, Element g) {
    const int d = rep.dim(), r = rep.order();
    const Vec f = config.points.col(j);
    const Vec twisted = rep.matrix(g).transpose() * f / r;
    Vec out(static_cast<Eigen::Index>(d) * r);
    for (int h = 0; h < r; ++h) {
        Vec block = -f / r - rep.matrix(h) * twisted;
        if (h == g) block += f;
        out.segment(static_cast<Eigen::Index>(h) * d, d) = block;
    }
    return out;
}

Vec raw_R_column(int r, Element g) {
    Vec out = Vec::Constant(r, -1.0 / r);
    out(g) += 1.0;
    return out;
}

TestMap TestMap::build(const Representation& rep, const Configuration& config, bool partition_mode) {
    const int d = rep.dim(), r = rep.order(), n = config.count();
    if (config.dim() != d)
        fail(ErrorCode::PointCount, "points have dimension " + std::to_string(config.dim()) + ", representation " +
                                        std::to_string(d));
    if (!config.points.allFinite()) fail(ErrorCode::PointCount, "points contain non-finite coordinates");
    if (n < 1) fail(ErrorCode::PointCount, "at least one point required");
    if (partition_mode) {
        const int need = required_N(r, d);
        if (n != need)
            fail(ErrorCode::PointCount, "representation of order " + std::to_string(r) + " in dimension " +
                                            std::to_string(d) + " requires " + std::to_string(need) +
                                            " points, got " + std::to_string(n));
    }

    TestMap tm;
    tm.w_ = orbitpart::basis_W(rep);
    tm.rperp_ = orbitpart::basis_Rperp(r);
    const int wdim = tm.w_.dim();
    const int codim = wdim + (r - 1);

    // W is orthogonal to V0 and Vrho, so projecting raw_F(j, g) onto W only
    // sees the e_g ⊗ f_j term; likewise R^⊥ only sees e_g.
    Mat columns(codim, static_cast<Eigen::Index>(n) * r);
    for (int j = 0; j < n; ++j) {
        const Vec f = config.points.col(j);
        for (int g = 0; g < r; ++g) {
            auto col = columns.col(static_cast<Eigen::Index>(j) * r + g);
            col.head(wdim).noalias() = tm.w_.basis.middleRows(static_cast<Eigen::Index>(g) * d, d).transpose() * f;
            col.tail(r - 1) = tm.rperp_.basis.row(g).transpose();
        }
    }
    tm.classes_ = ColorClasses(std::move(columns), n, r);
    return tm;
}

Vec evaluate_L(const ColorClasses& classes, const ColorfulSelection& sel) {
    validate_selection(sel, classes.n_colors(), classes.class_size());
    Vec out = Vec::Zero(classes.ambient_dim());
    for (int j = 0; j < sel.size(); ++j)
        if (sel.weights[j] != 0.0) out += sel.weights[j] * classes.column(j, sel.assignment[j]);
    return out;
}

Vec evaluate_L(const TestMap& tm, const ColorfulSelection& sel) { return evaluate_L(tm.classes(), sel); }

Vec c0(const Representation& rep, const Configuration& config, const ColorfulSelection& sel) {
    validate_selection(sel, config.count(), rep.order());
    Vec out = Vec::Zero(rep.dim());
    for (int j = 0; j < sel.size(); ++j) out += sel.weights[j] * config.points.col(j);
    return out / rep.order();
}

Vec c_rho(const Representation& rep, const Configuration& config, const ColorfulSelection& sel) {
    validate_selection(sel, config.count(), rep.order());
    Vec out = Vec::Zero(rep.dim());
    for (int j = 0; j < sel.size(); ++j)
        out += sel.weights[j] * (rep.matrix(sel.assignment[j]).transpose() * config.points.col(j));
    return out / rep.order();
}

}  // namespace orbitpart
