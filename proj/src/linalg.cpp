#include "orbitpart/linalg.hpp"

#include <cmath>

namespace orbitpart {

double max_abs(const Mat& m) { return m.size() == 0 ? 0.0 : m.cwiseAbs().maxCoeff(); }

int numerical_rank(const Mat& m, double rel_tol) {
    if (m.size() == 0) return 0;
    Eigen::JacobiSVD<Mat> svd(m);
    const Vec& s = svd.singularValues();
    if (s.size() == 0 || s(0) == 0.0) return 0;
    int rank = 0;
    for (Eigen::Index i = 0; i < s.size(); ++i)
        if (s(i) > rel_tol * s(0)) ++rank;
    return rank;
}

Mat orthonormal_range(const Mat& m, double rel_tol) {
    if (m.size() == 0) return Mat(m.rows(), 0);
    Eigen::JacobiSVD<Mat> svd(m, Eigen::ComputeThinU);
    const Vec& s = svd.singularValues();
    int rank = 0;
    if (s.size() > 0 && s(0) > 0.0)
        for (Eigen::Index i = 0; i < s.size(); ++i)
            if (s(i) > rel_tol * s(0)) ++rank;
    return svd.matrixU().leftCols(rank);
}

Mat nullspace(const Mat& m, double rel_tol) {
    const Eigen::Index n = m.cols();
    if (m.rows() == 0) return Mat::Identity(n, n);
    Eigen::JacobiSVD<Mat> svd(m, Eigen::ComputeFullV);
    const Vec& s = svd.singularValues();
    int rank = 0;
    if (s.size() > 0 && s(0) > 0.0)
        for (Eigen::Index i = 0; i < s.size(); ++i)
            if (s(i) > rel_tol * s(0)) ++rank;
    return svd.matrixV().rightCols(n - rank);
}

Mat helmert_basis(int n) {
    Mat h = Mat::Zero(n - 1, n);
    for (int k = 1; k < n; ++k) {
        const double norm = std::sqrt(static_cast<double>(k) * (k + 1));
        for (int i = 0; i < k; ++i) h(k - 1, i) = 1.0 / norm;
        h(k - 1, k) = -static_cast<double>(k) / norm;
    }
    return h;
}

double max_principal_cosine(const Mat& a, const Mat& b) {
    if (a.cols() == 0 || b.cols() == 0) return 0.0;
    Eigen::JacobiSVD<Mat> svd(a.transpose() * b);
    return svd.singularValues()(0);
}

}  // namespace orbitpart
