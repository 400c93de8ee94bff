#include "orbitpart/partition.hpp"

#include <algorithm>
#include <cmath>

#include "orbitpart/error.hpp"
#include "orbitpart/geometry.hpp"
#include "orbitpart/solver.hpp"

namespace orbitpart {

OrbitPartition assemble(const TestMap& tm, const Representation& rep, const Configuration& config,
                        const ColorfulSelection& sel, double tol) {
    const int r = rep.order(), n = config.count();
    validate_selection(sel, n, r);
    const double l_norm = evaluate_L(tm, sel).norm();
    if (l_norm > tol) fail(ErrorCode::NotAZero, "selection is not a zero of the test map (|L| = " +
                                                    std::to_string(l_norm) + ")");

    OrbitPartition p;
    p.subsets.assign(r, {});
    p.hull_weights.assign(r, {});
    std::vector<double> lambda(r, 0.0);
    for (int j = 0; j < n; ++j) {
        if (sel.weights[j] > 0.0) {
            const Element g = sel.assignment[j];
            p.subsets[g].push_back(j);
            lambda[g] += sel.weights[j];
        }
    }
    p.witnesses = Mat::Zero(rep.dim(), r);
    for (int g = 0; g < r; ++g) {
        if (p.subsets[g].empty())
            fail(ErrorCode::NotAZero, "element " + rep.group().label(g) + " received no points");
        if (std::abs(lambda[g] - 1.0 / r) > 1e-6)
            fail(ErrorCode::NotAZero, "join weight of element " + rep.group().label(g) + " is " +
                                          std::to_string(lambda[g]) + ", expected 1/" + std::to_string(r));
        for (int j : p.subsets[g]) {
            const double w = sel.weights[j] / lambda[g];
            p.hull_weights[g].push_back(w);
            p.witnesses.col(g) += w * config.points.col(j);
        }
    }
    p.center = r * c0(rep, config, sel);
    p.generator = r * c_rho(rep, config, sel);
    p.residual = orbit_residual(rep, p.witnesses, p.center, p.generator);
    const auto report = polytope_report(rep, p.generator, p.center);
    p.free = report.is_free;
    p.full_dim = report.affine_dim == rep.dim();
    return p;
}

double orbit_residual(const Representation& rep, const Mat& witnesses, const Vec& center, const Vec& generator) {
    double worst = 0.0;
    for (int g = 0; g < rep.order(); ++g)
        worst = std::max(worst, (witnesses.col(g) - center - rep.matrix(g) * generator).norm());
    return worst;
}

CheckList verify(const OrbitPartition& p, const Representation& rep, const Configuration& config, double tol) {
    CheckList out;
    const int r = rep.order(), n = config.count(), d = rep.dim();

    const bool shape_ok = static_cast<int>(p.subsets.size()) == r && static_cast<int>(p.hull_weights.size()) == r &&
                          p.witnesses.rows() == d && p.witnesses.cols() == r && p.center.size() == d &&
                          p.generator.size() == d;
    out.add("shape", shape_ok);
    if (!shape_ok) return out;

    bool in_range = true, nonempty = true, aligned = true;
    std::vector<int> owner(n, -1);
    int overlaps = 0;
    for (int g = 0; g < r; ++g) {
        nonempty = nonempty && !p.subsets[g].empty();
        aligned = aligned && p.hull_weights[g].size() == p.subsets[g].size();
        for (int j : p.subsets[g]) {
            if (j < 0 || j >= n) {
                in_range = false;
                continue;
            }
            if (owner[j] >= 0) ++overlaps;
            owner[j] = g;
        }
    }
    out.add("indices in range", in_range);
    out.add("subsets nonempty", nonempty);
    out.add("subsets disjoint", overlaps == 0, overlaps, 0);
    out.add("weights aligned with subsets", aligned);
    if (!in_range || !aligned) return out;

    double min_weight = 0.0, sum_err = 0.0;
    for (int g = 0; g < r; ++g) {
        double s = 0.0;
        for (double w : p.hull_weights[g]) {
            min_weight = std::min(min_weight, w);
            s += w;
        }
        sum_err = std::max(sum_err, std::abs(s - 1.0));
    }
    out.add("hull weights nonnegative", min_weight >= -1e-12, min_weight, -1e-12);
    out.add("hull weights sum to one", sum_err <= 1e-12, sum_err, 1e-12);

    double scale = 1.0;
    for (Eigen::Index j = 0; j < config.points.cols(); ++j) scale = std::max(scale, config.points.col(j).norm());
    double mismatch = 0.0;
    for (int g = 0; g < r; ++g) {
        Vec x = Vec::Zero(d);
        for (std::size_t i = 0; i < p.subsets[g].size(); ++i) x += p.hull_weights[g][i] * config.points.col(p.subsets[g][i]);
        mismatch = std::max(mismatch, (x - p.witnesses.col(g)).norm());
    }
    out.add("witnesses are the stated convex combinations", mismatch <= 1e-12 * scale, mismatch, 1e-12 * scale);

    const double res = orbit_residual(rep, p.witnesses, p.center, p.generator);
    out.add("orbit equation residual", res <= tol, res, tol);
    out.add("stored residual matches", std::abs(res - p.residual) <= 1e-12 * scale, std::abs(res - p.residual),
            1e-12 * scale);

    const auto report = polytope_report(rep, p.generator, p.center);
    out.add("free flag matches", report.is_free == p.free, report.is_free ? 1.0 : 0.0);
    out.add("full-dimensional flag matches", (report.affine_dim == d) == p.full_dim, report.affine_dim, d);
    return out;
}

PolytopeReport polytope_report(const Representation& rep, const Vec& u, const Vec& a) {
    PolytopeReport out;
    out.vertices = orbit(rep, u).colwise() + a;
    out.is_free = stabilizer(rep, u) == kernel(rep);
    out.affine_dim = affine_dim_orbit(rep, u);
    return out;
}

IntersectionReport intersection_report(const Representation& rep, const Configuration& config,
                                       const OrbitPartition& p) {
    const auto k = kernel(rep);
    if (k.size() <= 1) fail(ErrorCode::NotApplicable, "representation is faithful; no hull intersections to report");
    const FiniteGroup& group = rep.group();
    const int r = rep.order();
    if (static_cast<int>(p.subsets.size()) != r) fail(ErrorCode::InvalidParameter, "partition does not match group");

    IntersectionReport out;
    std::vector<char> seen(r, 0);
    for (Element g = 0; g < r; ++g) {
        if (seen[g]) continue;
        std::vector<Element> coset;
        for (Element x : k) coset.push_back(group.mul(g, x));
        std::sort(coset.begin(), coset.end());
        for (Element x : coset) seen[x] = 1;
        out.cosets.push_back(std::move(coset));
    }

    const int r1 = static_cast<int>(out.cosets.size());
    out.targets.resize(rep.dim(), r1);
    for (int i = 0; i < r1; ++i) {
        const Element rep_g = out.cosets[i].front();
        out.targets.col(i) = p.center + rep.matrix(rep_g) * p.generator;
        std::vector<std::vector<int>> members;
        std::vector<double> residuals;
        for (Element g : out.cosets[i]) {
            members.push_back(p.subsets[g]);
            Mat shifted(rep.dim(), static_cast<Eigen::Index>(p.subsets[g].size()));
            for (std::size_t c = 0; c < p.subsets[g].size(); ++c)
                shifted.col(static_cast<Eigen::Index>(c)) = config.points.col(p.subsets[g][c]) - out.targets.col(i);
            residuals.push_back(min_norm_point(shifted).x.norm());
        }
        out.subsets.push_back(std::move(members));
        out.membership_residuals.push_back(std::move(residuals));
    }
    if (rep.dim() == 2 && r1 >= 3) {
        const auto reg = polygon_regularity(out.targets);
        out.targets_regular = reg.is_regular;
        out.regularity_deviation = reg.max_deviation;
    }
    return out;
}

}  // namespace orbitpart
