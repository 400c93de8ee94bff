#pragma once

#include <optional>
#include <string>
#include <vector>

#include "orbitpart/group.hpp"

namespace orbitpart {

/// A named group/representation pair together with the polytope its free
/// orbits trace out and the point count that guarantees a partition.
struct CatalogEntry {
    std::string key;
    Representation rep;
    int r = 0;
    int d = 0;
    int n_bound = 0;
    std::string polytope_name;
    std::optional<int> expected_iso_order;
    bool faithful = false;
    bool full_dimensional = false;
};

/// (r - 2)(d + 1) + 2: the number of generic points that can always be
/// partitioned by a translated, scaled orbit of an order-r group in R^d.
int required_N(int r, int d);

/// Plane rotations by 2*pi*k/r.
CatalogEntry cyclic_rotation(int r);
/// Standard action of the order-2n dihedral group on the plane.
CatalogEntry dihedral_rep(int n);
CatalogEntry prism_rep(int n);
CatalogEntry antiprism_rep(int n);

enum class QuaternionKind { BinaryDihedral, BinaryTetrahedral, BinaryIcosahedral };
/// Finite subgroups of unit quaternions acting on R^4 = H by left
/// multiplication. `param` is the n of the binary dihedral group D_n^*
/// (order 4n); n = 2 gives Q8.
CatalogEntry quaternion_group_rep(QuaternionKind kind, int param = 2);

enum class RotationKind { Tetrahedral, Octahedral, Icosahedral };
CatalogEntry rotation_group_rep(RotationKind kind);

enum class FullPolyhedralKind { FullOctahedral, FullOctahedralX2, FullIcosahedralX2 };
CatalogEntry full_polyhedral_rep(FullPolyhedralKind kind);

/// S_n permuting coordinates of the sum-zero hyperplane of R^n (d = n - 1).
CatalogEntry symmetric_permutahedron_rep(int n);
/// G permuting the coordinates of R^r by the right-regular action,
/// restricted to the sum-zero subspace.
CatalogEntry regular_perp_rep(const FiniteGroup& group, const std::string& key = "regular_perp");
/// Z_r acting on the plane through rotation by 2*pi*k/r1; kernel of order r/r1.
CatalogEntry nonfaithful_cyclic(int r, int r1);

/// Resolves a key such as "cyclic:4", "prism:3", "q8", "nonfaithful:12:4".
CatalogEntry catalog_entry(const std::string& key);
/// Keys of the entries reported by `catalog list`.
std::vector<std::string> catalog_keys();

/// 4x4 matrix of left multiplication by the quaternion (a, b, c, d).
Mat quaternion_left_matrix(double a, double b, double c, double d);

}  // namespace orbitpart
