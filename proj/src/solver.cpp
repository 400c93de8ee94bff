#include "orbitpart/solver.hpp"

#include <algorithm>
#include <cmath>
#include <future>
#include <limits>
#include <random>
#include <thread>

namespace orbitpart {

namespace {

struct Corral {
    std::vector<int> index;
    std::vector<double> weight;
};

Vec combine(const Mat& pts, const Corral& c) {
    Vec x = Vec::Zero(pts.rows());
    for (std::size_t i = 0; i < c.index.size(); ++i) x += c.weight[i] * pts.col(c.index[i]);
    return x;
}

void remove_at(Corral& c, std::size_t pos) {
    c.index.erase(c.index.begin() + static_cast<std::ptrdiff_t>(pos));
    c.weight.erase(c.weight.begin() + static_cast<std::ptrdiff_t>(pos));
}

void renormalize(Corral& c) {
    double s = 0.0;
    for (double w : c.weight) s += w;
    for (double& w : c.weight) w /= s;
}

enum class WolfeStatus { Optimal, Small, Capped };

struct Wolfe {
    const Mat& pts;
    double max_norm = 0.0;

    explicit Wolfe(const Mat& p) : pts(p) {
        for (Eigen::Index i = 0; i < pts.cols(); ++i) max_norm = std::max(max_norm, pts.col(i).norm());
    }

    // Affine minimiser over the corral. Returns false when the corral is
    // affinely dependent, in which case `mu` holds a dependence (sum 0).
    bool affine_min(const Corral& c, std::vector<double>& mu) const {
        const std::size_t k = c.index.size();
        mu.assign(k, 0.0);
        if (k == 1) {
            mu[0] = 1.0;
            return true;
        }
        const Eigen::Index m = pts.rows();
        Mat b(m, static_cast<Eigen::Index>(k - 1));
        const Vec s0 = pts.col(c.index[0]);
        for (std::size_t i = 1; i < k; ++i) b.col(static_cast<Eigen::Index>(i - 1)) = pts.col(c.index[i]) - s0;
        Eigen::ColPivHouseholderQR<Mat> qr(b);
        qr.setThreshold(1e-11);
        if (qr.rank() < static_cast<Eigen::Index>(k - 1)) {
            Eigen::JacobiSVD<Mat> svd(b, Eigen::ComputeFullV);
            const Vec v = svd.matrixV().col(svd.matrixV().cols() - 1);
            mu[0] = -v.sum();
            for (std::size_t i = 1; i < k; ++i) mu[i] = v(static_cast<Eigen::Index>(i - 1));
            return false;
        }
        const Vec coef = qr.solve(Vec(-s0));
        mu[0] = 1.0 - coef.sum();
        for (std::size_t i = 1; i < k; ++i) mu[i] = coef(static_cast<Eigen::Index>(i - 1));
        return true;
    }

    // Moves weight along an affine dependence (x unchanged) until one corral
    // point drops out; the newest point is kept.
    void drop_dependent(Corral& c, std::vector<double> alpha, int newest) const {
        for (std::size_t i = 0; i < c.index.size(); ++i)
            if (c.index[i] == newest && alpha[i] > 0)
                for (double& a : alpha) a = -a;
        std::size_t drop = c.index.size();
        double theta = std::numeric_limits<double>::infinity();
        for (std::size_t i = 0; i < c.index.size(); ++i) {
            if (alpha[i] <= 0 || c.index[i] == newest) continue;
            const double t = c.weight[i] / alpha[i];
            if (t < theta || (t == theta && c.index[i] < c.index[drop])) {
                theta = t;
                drop = i;
            }
        }
        if (drop == c.index.size()) {
            // Dependence only through the newest point: discard it.
            for (std::size_t i = 0; i < c.index.size(); ++i)
                if (c.index[i] == newest) drop = i;
            remove_at(c, drop);
            renormalize(c);
            return;
        }
        for (std::size_t i = 0; i < c.index.size(); ++i) c.weight[i] = std::max(0.0, c.weight[i] - theta * alpha[i]);
        remove_at(c, drop);
        renormalize(c);
    }

    WolfeStatus run(Corral& c, Vec& x, int max_iter, double stop_norm, int& iterations) const {
        if (c.index.empty()) {
            Eigen::Index best = 0;
            pts.colwise().squaredNorm().minCoeff(&best);
            c.index = {static_cast<int>(best)};
            c.weight = {1.0};
        }
        x = combine(pts, c);
        std::vector<double> mu;
        while (true) {
            const double xx = x.squaredNorm();
            if (std::sqrt(xx) <= stop_norm) return WolfeStatus::Small;
            Eigen::Index j = 0;
            const Vec dots = pts.transpose() * x;
            dots.minCoeff(&j);
            const double gap = xx - dots(j);
            if (gap <= 1e-13 * (1.0 + std::sqrt(xx) * max_norm)) return WolfeStatus::Optimal;
            if (std::find(c.index.begin(), c.index.end(), static_cast<int>(j)) != c.index.end())
                return WolfeStatus::Optimal;
            const int newest = static_cast<int>(j);
            c.index.push_back(newest);
            c.weight.push_back(0.0);
            bool first_minor = true;
            while (true) {
                if (++iterations > max_iter) return WolfeStatus::Capped;
                if (!affine_min(c, mu)) {
                    drop_dependent(c, mu, newest);
                    x = combine(pts, c);
                    first_minor = false;
                    continue;
                }
                if (std::all_of(mu.begin(), mu.end(), [](double v) { return v > 0.0; })) {
                    c.weight = mu;
                    x = combine(pts, c);
                    break;
                }
                double theta = std::numeric_limits<double>::infinity();
                std::size_t drop = 0;
                for (std::size_t i = 0; i < mu.size(); ++i) {
                    if (mu[i] > 0.0) continue;
                    const double t = c.weight[i] / (c.weight[i] - mu[i]);
                    if (t < theta) {
                        theta = t;
                        drop = i;
                    }
                }
                if (first_minor && c.index[drop] == newest) {
                    // The incoming point cannot enter: optimal to working precision.
                    remove_at(c, drop);
                    renormalize(c);
                    x = combine(pts, c);
                    return WolfeStatus::Optimal;
                }
                for (std::size_t i = 0; i < mu.size(); ++i) c.weight[i] = (1.0 - theta) * c.weight[i] + theta * mu[i];
                c.weight[drop] = 0.0;
                for (std::size_t i = c.weight.size(); i-- > 0;)
                    if (c.weight[i] <= 0.0) remove_at(c, i);
                renormalize(c);
                x = combine(pts, c);
                first_minor = false;
            }
        }
    }
};

Vec coeffs_from(const Corral& c, Eigen::Index k) {
    Vec w = Vec::Zero(k);
    for (std::size_t i = 0; i < c.index.size(); ++i) w(c.index[i]) = c.weight[i];
    return w;
}

std::vector<Element> random_assignment(int n, int r, std::uint64_t seed) {
    std::mt19937_64 rng(seed);
    std::uniform_int_distribution<int> pick(0, r - 1);
    std::vector<Element> a(n);
    for (auto& g : a) g = pick(rng);
    return a;
}

std::uint64_t restart_seed(std::uint64_t seed, int restart) {
    std::seed_seq seq{static_cast<std::uint32_t>(seed), static_cast<std::uint32_t>(seed >> 32),
                      static_cast<std::uint32_t>(restart)};
    std::uint32_t out[2];
    seq.generate(out, out + 2);
    return (static_cast<std::uint64_t>(out[0]) << 32) | out[1];
}

bool better(const SolverResult& a, const SolverResult& b) {
    if (a.converged != b.converged) return a.converged;
    if (a.residual != b.residual) return a.residual < b.residual;
    return a.selection.assignment < b.selection.assignment;
}

}  // namespace

MinNormResult min_norm_point(const Mat& points, int max_iter) {
    if (points.cols() == 0) fail(ErrorCode::InvalidParameter, "min_norm_point needs at least one point");
    if (!points.allFinite()) fail(ErrorCode::InvalidParameter, "min_norm_point needs finite points");
    if (max_iter <= 0) max_iter = 50 * static_cast<int>(std::max<Eigen::Index>(points.cols(), points.rows() + 1));
    Wolfe wolfe(points);
    Corral corral;
    MinNormResult res;
    const WolfeStatus status = wolfe.run(corral, res.x, max_iter, 0.0, res.iterations);
    res.coeffs = coeffs_from(corral, points.cols());
    if (status == WolfeStatus::Capped) throw MinNormFailure("min_norm_point exceeded its iteration cap", res);
#ifndef NDEBUG
    if (min_norm_certificate(points, res.x) < -1e-10)
        fail(ErrorCode::NumericalFailure, "min_norm_point certificate violated");
#endif
    return res;
}

double min_norm_certificate(const Mat& points, const Vec& x) {
    double worst = std::numeric_limits<double>::infinity();
    const double xn = x.norm();
    for (Eigen::Index i = 0; i < points.cols(); ++i) {
        const double v = (points.col(i) - x).dot(x) / (1.0 + xn * points.col(i).norm());
        worst = std::min(worst, v);
    }
    return worst;
}

SolverResult barany_onn_solve(const ColorClasses& classes, std::vector<Element> initial, const SolverOptions& opts) {
    const int n = classes.n_colors(), r = classes.class_size();
    if (!(opts.tol > 0)) fail(ErrorCode::InvalidParameter, "solver tolerance must be positive");
    if (static_cast<int>(initial.size()) != n) fail(ErrorCode::InvalidParameter, "initial assignment has wrong length");
    if (classes.max_relative_class_mean() > 1e-8)
        fail(ErrorCode::Precondition, "colour classes do not have zero mean");

    Mat selected(classes.ambient_dim(), n);
    for (int j = 0; j < n; ++j) selected.col(j) = classes.column(j, initial[j]);

    const int inner_cap = 50 * std::max(n, classes.ambient_dim() + 1);
    Wolfe wolfe(selected);
    Corral corral;
    Vec x;
    SolverResult res;
    res.selection.assignment = std::move(initial);
    int last = n - 1;
    std::vector<char> in_corral(n);

    while (true) {
        int inner = 0;
        // The selected columns change between pivots; refresh the scale.
        wolfe.max_norm = 0.0;
        for (int j = 0; j < n; ++j) wolfe.max_norm = std::max(wolfe.max_norm, selected.col(j).norm());
        const WolfeStatus status = wolfe.run(corral, x, inner_cap, opts.tol, inner);
        const double xn = x.norm();
        if (opts.record_trace) res.trace.push_back(xn);
        res.residual = xn;
        if (status == WolfeStatus::Capped) break;
        if (xn <= opts.tol) {
            res.converged = true;
            break;
        }
        if (res.iterations >= opts.max_iter) break;

        std::fill(in_corral.begin(), in_corral.end(), 0);
        for (int i : corral.index) in_corral[i] = 1;
        const double xx = xn * xn;
        int color = -1;
        Element pick = 0;
        for (int step = 1; step <= n && color < 0; ++step) {
            const int c = (last + step) % n;
            if (in_corral[c]) continue;
            double best = std::numeric_limits<double>::infinity();
            Element arg = 0;
            for (int g = 0; g < r; ++g) {
                const double v = classes.column(c, g).dot(x);
                if (v < best) {
                    best = v;
                    arg = g;
                }
            }
            if (best - xx < 0.0) {
                color = c;
                pick = arg;
            }
        }
        if (color < 0) break;  // no improving colour outside the support
        selected.col(color) = classes.column(color, pick);
        res.selection.assignment[color] = pick;
        last = color;
        ++res.iterations;
    }

    res.selection.weights.assign(n, 0.0);
    for (std::size_t i = 0; i < corral.index.size(); ++i) res.selection.weights[corral.index[i]] = corral.weight[i];
    return res;
}

SolverResult barany_onn_solve(const ColorClasses& classes, const SolverOptions& opts, std::uint64_t seed) {
    return barany_onn_solve(classes, random_assignment(classes.n_colors(), classes.class_size(), seed), opts);
}

BruteForceResult brute_force_solve(const ColorClasses& classes) {
    const int n = classes.n_colors(), r = classes.class_size();
    const double count = std::pow(static_cast<double>(r), n);
    if (count > kBruteForceLimit)
        fail(ErrorCode::SizeGuard, "brute force needs " + std::to_string(r) + "^" + std::to_string(n) +
                                       " assignments, above the 1e7 limit");
    BruteForceResult out;
    out.best.residual = std::numeric_limits<double>::infinity();
    std::vector<Element> a(n, 0);
    Mat pts(classes.ambient_dim(), n);
    for (int j = 0; j < n; ++j) pts.col(j) = classes.column(j, 0);
    while (true) {
        const MinNormResult mn = min_norm_point(pts);
        const double res = mn.x.norm();
        ++out.assignments;
        if (res < out.best.residual - 1e-12) {
            out.best.residual = res;
            out.best.selection.assignment = a;
            out.best.selection.weights.assign(mn.coeffs.data(), mn.coeffs.data() + n);
        }
        // odometer, last colour fastest so enumeration is lexicographic
        int j = n - 1;
        while (j >= 0 && a[j] == r - 1) {
            a[j] = 0;
            pts.col(j) = classes.column(j, 0);
            --j;
        }
        if (j < 0) break;
        ++a[j];
        pts.col(j) = classes.column(j, a[j]);
    }
    out.best.iterations = static_cast<int>(std::min<std::uint64_t>(out.assignments, std::numeric_limits<int>::max()));
    out.best.restarts_used = 1;
    out.best.converged = out.best.residual <= SolverOptions{}.tol;
    return out;
}

SolverResult solve_with_restarts(const ColorClasses& classes, const SolverOptions& opts) {
    if (opts.restarts < 1) fail(ErrorCode::InvalidParameter, "restarts must be at least 1");
    int threads = opts.threads > 0 ? opts.threads : static_cast<int>(std::thread::hardware_concurrency());
    threads = std::clamp(threads, 1, opts.restarts);

    SolverResult best;
    bool have = false;
    for (int start = 0; start < opts.restarts; start += threads) {
        const int batch = std::min(threads, opts.restarts - start);
        std::vector<SolverResult> results(batch);
        if (batch == 1) {
            results[0] = barany_onn_solve(classes, opts, restart_seed(opts.seed, start));
        } else {
            std::vector<std::future<SolverResult>> jobs;
            for (int b = 0; b < batch; ++b)
                jobs.push_back(std::async(std::launch::async, [&, b] {
                    return barany_onn_solve(classes, opts, restart_seed(opts.seed, start + b));
                }));
            for (int b = 0; b < batch; ++b) results[b] = jobs[b].get();
        }
        for (int b = 0; b < batch; ++b) {
            results[b].restarts_used = start + b + 1;
            if (results[b].converged) return results[b];
            if (!have || better(results[b], best)) {
                best = results[b];
                have = true;
            }
        }
    }
    best.restarts_used = opts.restarts;
    return best;
}

}  // namespace orbitpart
