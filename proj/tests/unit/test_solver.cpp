#include <doctest.h>

#include <random>

#include "orbitpart/catalog.hpp"
#include "orbitpart/error.hpp"
#include "orbitpart/solver.hpp"
#include "support.hpp"

using namespace orbitpart;

TEST_SUITE("solver") {

TEST_CASE("min-norm point of a small triangle") {
    Mat pts(2, 3);
    pts << 1, 1, 3, 1, -1, 0;
    const auto res = min_norm_point(pts);
    CHECK(res.x(0) == doctest::Approx(1.0).epsilon(1e-14));
    CHECK(std::abs(res.x(1)) <= 1e-15);
    CHECK(res.coeffs(0) == doctest::Approx(0.5));
    CHECK(res.coeffs(1) == doctest::Approx(0.5));
    CHECK(res.coeffs(2) == 0.0);
}

TEST_CASE("min-norm point edge cases") {
    Mat one(3, 1);
    one << 1, 2, 2;
    CHECK(min_norm_point(one).x.norm() == doctest::Approx(3.0));

    Mat around(2, 4);
    around << 1, -1, 0, 0, 0, 0, 1, -1;
    CHECK(min_norm_point(around).x.norm() <= 1e-15);

    // collinear and repeated points
    Mat dup(2, 4);
    dup << 1, 2, 3, 1, 1, 2, 3, 1;
    const auto res = min_norm_point(dup);
    CHECK(res.x(0) == doctest::Approx(1.0));
    CHECK(res.coeffs.sum() == doctest::Approx(1.0));

    CHECK_THROWS_AS(min_norm_point(Mat(2, 0)), Error);
}

TEST_CASE("min-norm certificate on random instances") {
    std::mt19937_64 rng(17);
    std::uniform_int_distribution<int> dim(1, 8), cnt(1, 20);
    for (int t = 0; t < 300; ++t) {
        const int m = dim(rng), k = cnt(rng);
        Mat pts = testing::random_mat(m, k, rng);
        if (t % 3 == 0) pts.colwise() += testing::random_vec(m, rng);
        const auto res = min_norm_point(pts);
        CHECK(min_norm_certificate(pts, res.x) >= -1e-10);
        CHECK((pts * res.coeffs - res.x).norm() <= 1e-10 * (1.0 + pts.norm()));
        CHECK(res.coeffs.minCoeff() >= 0.0);
        CHECK(std::abs(res.coeffs.sum() - 1.0) <= 1e-12);
    }
}

TEST_CASE("pivoting finds zeros and the trace never increases") {
    for (const char* key : {"cyclic:3", "cyclic:6", "prism:4", "q8"}) {
        CAPTURE(key);
        const auto e = catalog_entry(key);
        const auto config = testing::random_points(e.d, e.n_bound, 21);
        const auto tm = TestMap::build(e.rep, config);
        SolverOptions o;
        o.record_trace = true;
        for (std::uint64_t seed = 0; seed < 5; ++seed) {
            const auto res = barany_onn_solve(tm.classes(), o, seed);
            CHECK(res.converged);
            CHECK(evaluate_L(tm, res.selection).norm() <= o.tol);
            for (std::size_t i = 1; i < res.trace.size(); ++i) CHECK(res.trace[i] <= res.trace[i - 1] + 1e-12);
        }
    }
}

TEST_CASE("restarts are deterministic and independent of thread count") {
    const auto e = catalog_entry("antiprism:3");
    const auto tm = TestMap::build(e.rep, testing::random_points(3, e.n_bound, 2));
    SolverOptions o;
    o.seed = 99;
    o.restarts = 6;
    o.threads = 1;
    const auto a = solve_with_restarts(tm.classes(), o);
    o.threads = 3;
    const auto b = solve_with_restarts(tm.classes(), o);
    CHECK(a.selection.assignment == b.selection.assignment);
    CHECK(a.selection.weights == b.selection.weights);
    CHECK(a.restarts_used == b.restarts_used);
}

TEST_CASE("classes without zero mean are rejected") {
    Mat cols(2, 4);
    cols << 1, 2, 1, 2, 0, 0, 1, 1;
    const ColorClasses classes(cols, 2, 2);
    CHECK_THROWS_AS(barany_onn_solve(classes, SolverOptions{}, 0), Error);
}

TEST_CASE("brute force agrees with pivoting on small instances") {
    for (std::uint64_t seed = 0; seed < 5; ++seed) {
        const auto e = cyclic_rotation(3);
        const auto tm = TestMap::build(e.rep, testing::random_points(2, 5, seed));
        const auto bf = brute_force_solve(tm.classes());
        CHECK(bf.assignments == 243);
        SolverOptions o;
        o.seed = seed;
        const auto piv = solve_with_restarts(tm.classes(), o);
        CHECK(std::abs(bf.best.residual - piv.residual) <= 1e-8);
    }
}

TEST_CASE("brute force ties keep the first assignment") {
    // every assignment reaches the origin
    Mat cols(1, 4);
    cols << 1, -1, 1, -1;
    const ColorClasses classes(cols, 2, 2);
    const auto bf = brute_force_solve(classes);
    CHECK(bf.assignments == 4);
    CHECK(bf.best.selection.assignment == std::vector<Element>{0, 1});
}

TEST_CASE("brute force size guard") {
    const auto e = cyclic_rotation(8);
    const auto tm = TestMap::build(e.rep, testing::random_points(2, e.n_bound, 1));
    try {
        brute_force_solve(tm.classes());
        FAIL("expected the size guard");
    } catch (const Error& err) {
        CHECK(err.code() == ErrorCode::SizeGuard);
    }
}

TEST_CASE("impossible tolerance is reported as non-convergence") {
    const auto e = cyclic_rotation(4);
    const auto tm = TestMap::build(e.rep, testing::random_points(2, 8, 1));
    SolverOptions o;
    o.tol = 1e-300;
    o.restarts = 2;
    const auto res = solve_with_restarts(tm.classes(), o);
    CHECK_FALSE(res.converged);
    CHECK(res.residual < 1e-12);
    CHECK(res.restarts_used == 2);
}

}  // TEST_SUITE
