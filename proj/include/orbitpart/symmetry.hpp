#pragma once

#include <cstdint>
#include <vector>

#include "orbitpart/group.hpp"

namespace orbitpart {

/// r x r matrix of inner products <rho(g) u, rho(h) u>.
Mat gram(const Representation& rep, const Vec& u);

struct SymmetryReport {
    Mat gram;
    std::uint64_t osym_order = 0;
    bool order_saturated = false;  // true when the order overflowed 64 bits
    std::vector<std::vector<Element>> osym_generators;
    bool contains_left_regular = false;
    double quantization = 1e-6;
    int distinct_values = 0;
};

/// Permutations of G preserving the Gram matrix of the orbit of u, i.e. the
/// isometry group of the orbit polytope. Gram entries are normalised by
/// ||u||^2 and merged into classes whose consecutive sorted values differ by
/// at most `quantization`; the count comes from a stabiliser chain built by
/// backtracking with forward checking.
SymmetryReport osym(const Representation& rep, const Vec& u, double quantization = 1e-6);

/// Order of the colour-preserving permutation group of a symmetric integer
/// colour matrix, with strong generators. Exposed for testing.
struct AutomorphismGroup {
    std::uint64_t order = 1;
    bool saturated = false;
    std::vector<std::vector<int>> generators;
};
AutomorphismGroup edge_colored_automorphisms(const std::vector<int>& colors, int n);

}  // namespace orbitpart
