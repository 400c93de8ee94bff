#pragma once

#include <cstdint>
#include <random>

#include "orbitpart/catalog.hpp"
#include "orbitpart/io.hpp"
#include "orbitpart/partition.hpp"
#include "orbitpart/solver.hpp"

namespace testing {

using namespace orbitpart;

inline Configuration random_points(int d, int n, std::uint64_t seed) { return generate_points(d, n, seed); }

inline Vec random_vec(int d, std::mt19937_64& rng) {
    std::normal_distribution<double> nd;
    Vec v(d);
    for (int i = 0; i < d; ++i) v(i) = nd(rng);
    return v;
}

inline Mat random_mat(int rows, int cols, std::mt19937_64& rng) {
    std::normal_distribution<double> nd;
    Mat m(rows, cols);
    for (Eigen::Index i = 0; i < m.size(); ++i) m.data()[i] = nd(rng);
    return m;
}

struct Solved {
    Configuration config;
    TestMap tm;
    SolverResult result;
};

inline Solved solve_entry(const CatalogEntry& e, std::uint64_t seed) {
    Configuration c = random_points(e.d, e.n_bound, seed);
    TestMap tm = TestMap::build(e.rep, c);
    SolverOptions o;
    o.seed = seed;
    o.threads = 1;
    auto res = solve_with_restarts(tm.classes(), o);
    return {std::move(c), std::move(tm), std::move(res)};
}

}  // namespace testing
