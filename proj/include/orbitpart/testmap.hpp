#pragma once

#include <vector>

#include "orbitpart/group.hpp"

namespace orbitpart {

/// The images f(v_1), ..., f(v_N) of the simplex vertices, one column each.
struct Configuration {
    Mat points;  // d x N

    int count() const noexcept { return static_cast<int>(points.cols()); }
    int dim() const noexcept { return static_cast<int>(points.rows()); }
};

/// True when the points lie in an affine hyperplane (relative rank 1e-8).
bool is_affinely_degenerate(const Configuration& config);

/// A point of the N-fold join G^{*N}: one group element and one simplex
/// weight per input point.
struct ColorfulSelection {
    std::vector<Element> assignment;
    std::vector<double> weights;

    int size() const noexcept { return static_cast<int>(assignment.size()); }
};

/// Throws unless weights are nonnegative, sum to 1 within 1e-12, and the
/// assignment uses valid elements.
void validate_selection(const ColorfulSelection& sel, int n_points, int order);

/// N colour classes of `class_size` vectors each; the vector for colour j
/// and element g is column j * class_size + g.
class ColorClasses {
public:
    ColorClasses() = default;
    ColorClasses(Mat columns, int n_colors, int class_size);

    int n_colors() const noexcept { return n_colors_; }
    int class_size() const noexcept { return class_size_; }
    int ambient_dim() const noexcept { return static_cast<int>(columns_.rows()); }
    const Mat& columns() const noexcept { return columns_; }
    auto column(int j, Element g) const { return columns_.col(static_cast<Eigen::Index>(j) * class_size_ + g); }

    /// max_j ||sum_g column(j, g)|| / max column norm.
    double max_relative_class_mean() const;

private:
    Mat columns_;
    int n_colors_ = 0;
    int class_size_ = 0;
};

/// Block h of the R^d[G] vector F(v_j^g): delta_{hg} f_j - f_j/r - rho(h) rho(g)^{-1} f_j / r.
Vec raw_F_column(const Representation& rep, const Configuration& config, int j, Element g);
/// Entry h is delta_{hg} - 1/r.
Vec raw_R_column(int r, Element g);

/// Affine equivariant test map on G^{*N}, stored through its values on the
/// joined vertices v_j^g in orthonormal coordinates of W ⊕ R^⊥[G].
class TestMap {
public:
    /// In partition mode the configuration must hold required_N(r, d)
    /// points; otherwise any positive count is accepted.
    static TestMap build(const Representation& rep, const Configuration& config, bool partition_mode = true);

    int n_points() const noexcept { return classes_.n_colors(); }
    int order() const noexcept { return classes_.class_size(); }
    int codim() const noexcept { return classes_.ambient_dim(); }
    const SubspaceBasis& basis_W() const noexcept { return w_; }
    const SubspaceBasis& basis_Rperp() const noexcept { return rperp_; }
    const ColorClasses& classes() const noexcept { return classes_; }
    auto column(int j, Element g) const { return classes_.column(j, g); }

private:
    SubspaceBasis w_;
    SubspaceBasis rperp_;
    ColorClasses classes_;
};

/// sum_j t_j column(j, g_j).
Vec evaluate_L(const TestMap& tm, const ColorfulSelection& sel);
Vec evaluate_L(const ColorClasses& classes, const ColorfulSelection& sel);

/// (1/r) sum_j t_j f(v_j).
Vec c0(const Representation& rep, const Configuration& config, const ColorfulSelection& sel);
/// (1/r) sum_j t_j rho(g_j)^{-1} f(v_j).
Vec c_rho(const Representation& rep, const Configuration& config, const ColorfulSelection& sel);

}  // namespace orbitpart
