#include "orbitpart/catalog.hpp"

#include <algorithm>
#include <array>
#include <charconv>
#include <cmath>
#include <numbers>

#include "orbitpart/error.hpp"

namespace orbitpart {

namespace {

constexpr double kPi = std::numbers::pi;
constexpr double kPhi = std::numbers::phi;

Mat rotation2(double angle) {
    Mat m(2, 2);
    m << std::cos(angle), -std::sin(angle), std::sin(angle), std::cos(angle);
    return m;
}

Mat block_diag(const Mat& a, const Mat& b) {
    Mat m = Mat::Zero(a.rows() + b.rows(), a.cols() + b.cols());
    m.topLeftCorner(a.rows(), a.cols()) = a;
    m.bottomRightCorner(b.rows(), b.cols()) = b;
    return m;
}

Mat mat3(std::initializer_list<double> entries) {
    Mat m(3, 3);
    auto it = entries.begin();
    for (int i = 0; i < 3; ++i)
        for (int j = 0; j < 3; ++j) m(i, j) = *it++;
    return m;
}

CatalogEntry make_entry(std::string key, Representation rep, std::string name, std::optional<int> iso) {
    const int r = rep.order(), d = rep.dim();
    CatalogEntry e{std::move(key), std::move(rep), r, d, 0, std::move(name), iso, false, false};
    e.n_bound = required_N(r, d);
    e.faithful = is_faithful(e.rep);
    e.full_dimensional = max_orbit_dim(e.rep, 8, 0) == d;
    if (!e.full_dimensional) fail(ErrorCode::NotFullDimensional, "entry " + e.key + " is not full-dimensional");
    return e;
}

// Generators of the chiral polyhedral groups, with the coordinate axes as
// two-fold axes and (1,1,1) as a three-fold axis.
const Mat& cyclic_xyz() {
    static const Mat m = mat3({0, 0, 1, 1, 0, 0, 0, 1, 0});
    return m;
}
const Mat& half_turn_x() {
    static const Mat m = mat3({1, 0, 0, 0, -1, 0, 0, 0, -1});
    return m;
}
const Mat& quarter_turn_z() {
    static const Mat m = mat3({0, -1, 0, 1, 0, 0, 0, 0, 1});
    return m;
}
const Mat& fifth_turn() {
    static const Mat m = 0.5 * mat3({1, -kPhi, 1 / kPhi, kPhi, 1 / kPhi, -1, 1 / kPhi, 1, kPhi});
    return m;
}
const Mat& swap_xy() {
    static const Mat m = mat3({0, 1, 0, 1, 0, 0, 0, 0, 1});
    return m;
}

Representation closure(std::vector<Mat> gens) { return group_from_generators(gens).rep; }

std::string perm_label(const std::vector<int>& p) {
    std::string s;
    for (int x : p) s += std::to_string(x + 1);
    return s;
}

int parse_int(const std::string& key, std::string_view text) {
    int value = 0;
    const auto [ptr, ec] = std::from_chars(text.data(), text.data() + text.size(), value);
    if (ec != std::errc() || ptr != text.data() + text.size())
        fail(ErrorCode::InvalidParameter, "malformed catalog key '" + key + "'");
    return value;
}

}  // namespace

int required_N(int r, int d) {
    if (r < 3) fail(ErrorCode::InvalidOrder, "group order must be at least 3 (got " + std::to_string(r) + ")");
    if (d < 1) fail(ErrorCode::InvalidParameter, "dimension must be positive");
    return (r - 2) * (d + 1) + 2;
}

Mat quaternion_left_matrix(double a, double b, double c, double d) {
    Mat m(4, 4);
    m << a, -b, -c, -d,
         b, a, -d, c,
         c, d, a, -b,
         d, -c, b, a;
    return m;
}

CatalogEntry cyclic_rotation(int r) {
    if (r < 3) fail(ErrorCode::NotFullDimensional, "cyclic rotation groups need r >= 3");
    std::vector<Mat> mats;
    for (int k = 0; k < r; ++k) mats.push_back(rotation2(2 * kPi * k / r));
    return make_entry("cyclic:" + std::to_string(r), Representation(cyclic_group(r), std::move(mats)),
                      "regular " + std::to_string(r) + "-gon", 2 * r);
}

CatalogEntry dihedral_rep(int n) {
    if (n < 2) fail(ErrorCode::InvalidParameter, "dihedral group needs n >= 2");
    std::vector<Mat> mats;
    std::vector<std::string> labels;
    Mat flip(2, 2);
    flip << 1, 0, 0, -1;
    for (int k = 0; k < n; ++k) {
        mats.push_back(rotation2(2 * kPi * k / n));
        labels.push_back("r" + std::to_string(k));
    }
    for (int k = 0; k < n; ++k) {
        mats.push_back(rotation2(2 * kPi * k / n) * flip);
        labels.push_back("s" + std::to_string(k));
    }
    return make_entry("dihedral:" + std::to_string(n), group_from_elements(std::move(mats), std::move(labels)),
                      "equiangular " + std::to_string(2 * n) + "-gon", 2 * n);
}

CatalogEntry prism_rep(int n) {
    if (n < 3) fail(ErrorCode::InvalidParameter, "prism needs n >= 3");
    FiniteGroup g = direct_product(cyclic_group(n), cyclic_group(2));
    std::vector<Mat> mats;
    for (int e = 0; e < 2 * n; ++e) {
        Mat sign(1, 1);
        sign(0, 0) = (e % 2 == 0) ? 1.0 : -1.0;
        mats.push_back(block_diag(rotation2(2 * kPi * (e / 2) / n), sign));
    }
    return make_entry("prism:" + std::to_string(n), Representation(std::move(g), std::move(mats)),
                      "right regular " + std::to_string(n) + "-prism", 4 * n);
}

CatalogEntry antiprism_rep(int n) {
    if (n < 2) fail(ErrorCode::InvalidParameter, "antiprism needs n >= 2");
    std::vector<Mat> mats;
    for (int k = 0; k < 2 * n; ++k) {
        Mat sign(1, 1);
        sign(0, 0) = (k % 2 == 0) ? 1.0 : -1.0;
        mats.push_back(block_diag(rotation2(kPi * k / n), sign));
    }
    std::string name = n == 2 ? "isosceles tetrahedron"
                       : n == 3 ? "octahedron"
                                : "right regular " + std::to_string(n) + "-antiprism";
    return make_entry("antiprism:" + std::to_string(n), Representation(cyclic_group(2 * n), std::move(mats)),
                      std::move(name), 4 * n);
}

CatalogEntry quaternion_group_rep(QuaternionKind kind, int param) {
    std::vector<std::array<double, 4>> units;
    std::string key, name;
    std::optional<int> iso;
    switch (kind) {
        case QuaternionKind::BinaryDihedral: {
            if (param < 2) fail(ErrorCode::InvalidParameter, "binary dihedral group needs n >= 2");
            for (int k = 0; k < 2 * param; ++k) {
                const double t = kPi * k / param;
                units.push_back({std::cos(t), std::sin(t), 0, 0});
            }
            for (int k = 0; k < 2 * param; ++k) {
                const double t = kPi * k / param;
                units.push_back({0, 0, std::cos(t), std::sin(t)});  // e^{it} j
            }
            if (param == 2) {
                key = "q8";
                name = "4-dimensional cross-polytope";
                iso = 384;
            } else {
                key = "binary_dihedral:" + std::to_string(param);
                name = "fusil on two regular " + std::to_string(2 * param) + "-gons";
                iso = 2 * (4 * param) * (4 * param);
            }
            break;
        }
        case QuaternionKind::BinaryTetrahedral:
        case QuaternionKind::BinaryIcosahedral: {
            for (int i = 0; i < 4; ++i)
                for (double s : {1.0, -1.0}) {
                    std::array<double, 4> q{0, 0, 0, 0};
                    q[i] = s;
                    units.push_back(q);
                }
            for (int mask = 0; mask < 16; ++mask)
                units.push_back({(mask & 1) ? -0.5 : 0.5, (mask & 2) ? -0.5 : 0.5, (mask & 4) ? -0.5 : 0.5,
                                 (mask & 8) ? -0.5 : 0.5});
            if (kind == QuaternionKind::BinaryTetrahedral) {
                key = "binary_tetrahedral";
                name = "24-cell";
                iso = 1152;
                break;
            }
            // The remaining 96 icosians: even permutations of (0, 1, 1/phi, phi)/2 with all signs.
            const std::array<double, 4> base{0.0, 0.5, 0.5 / kPhi, 0.5 * kPhi};
            std::array<int, 4> perm{0, 1, 2, 3};
            do {
                int inversions = 0;
                for (int a = 0; a < 4; ++a)
                    for (int b = a + 1; b < 4; ++b) inversions += perm[a] > perm[b];
                if (inversions % 2) continue;
                for (int mask = 0; mask < 8; ++mask) {
                    std::array<double, 4> q{};
                    for (int i = 0; i < 4; ++i) q[perm[i]] = base[i];
                    // signs on the three nonzero entries of base
                    for (int bit = 0; bit < 3; ++bit)
                        if (mask & (1 << bit)) q[perm[bit + 1]] = -q[perm[bit + 1]];
                    units.push_back(q);
                }
            } while (std::next_permutation(perm.begin(), perm.end()));
            key = "binary_icosahedral";
            name = "600-cell";
            iso = 14400;
            break;
        }
    }
    std::vector<Mat> mats;
    mats.reserve(units.size());
    for (const auto& q : units) mats.push_back(quaternion_left_matrix(q[0], q[1], q[2], q[3]));
    std::vector<std::string> labels;
    if (kind == QuaternionKind::BinaryDihedral && param == 2)
        labels = {"1", "i", "-1", "-i", "j", "k", "-j", "-k"};
    return make_entry(std::move(key), group_from_elements(std::move(mats), std::move(labels)), std::move(name), iso);
}

CatalogEntry rotation_group_rep(RotationKind kind) {
    switch (kind) {
        case RotationKind::Tetrahedral:
            return make_entry("rotation_tetrahedral", closure({cyclic_xyz(), half_turn_x()}),
                              "icosahedron (snub tetrahedron)", 12);
        case RotationKind::Octahedral:
            return make_entry("rotation_octahedral", closure({cyclic_xyz(), quarter_turn_z()}), "snub cube", 24);
        case RotationKind::Icosahedral:
            return make_entry("rotation_icosahedral", closure({cyclic_xyz(), half_turn_x(), fifth_turn()}),
                              "snub dodecahedron", 60);
    }
    fail(ErrorCode::InvalidParameter, "unknown rotation group");
}

CatalogEntry full_polyhedral_rep(FullPolyhedralKind kind) {
    const Mat minus = -Mat::Identity(3, 3);
    switch (kind) {
        case FullPolyhedralKind::FullOctahedral:
            return make_entry("full_octahedral", closure({cyclic_xyz(), half_turn_x(), swap_xy()}),
                              "truncated octahedron", 24);
        case FullPolyhedralKind::FullOctahedralX2:
            return make_entry("full_octahedral_x2", closure({cyclic_xyz(), quarter_turn_z(), minus}),
                              "truncated cuboctahedron", 48);
        case FullPolyhedralKind::FullIcosahedralX2:
            return make_entry("full_icosahedral_x2", closure({cyclic_xyz(), half_turn_x(), fifth_turn(), minus}),
                              "truncated icosidodecahedron", 120);
    }
    fail(ErrorCode::InvalidParameter, "unknown reflection group");
}

CatalogEntry symmetric_permutahedron_rep(int n) {
    if (n < 3 || n > 5) fail(ErrorCode::InvalidParameter, "permutahedron supports 3 <= n <= 5");
    std::vector<std::vector<int>> perms;
    std::vector<int> p(n);
    for (int i = 0; i < n; ++i) p[i] = i;
    do perms.push_back(p);
    while (std::next_permutation(p.begin(), p.end()));
    const int r = static_cast<int>(perms.size());

    auto index_of = [&](const std::vector<int>& q) {
        return static_cast<int>(std::lower_bound(perms.begin(), perms.end(), q) - perms.begin());
    };
    std::vector<Element> mul(static_cast<std::size_t>(r) * r);
    std::vector<int> comp(n);
    for (int a = 0; a < r; ++a)
        for (int b = 0; b < r; ++b) {
            for (int i = 0; i < n; ++i) comp[i] = perms[a][perms[b][i]];
            mul[static_cast<std::size_t>(a) * r + b] = index_of(comp);
        }
    std::vector<std::string> labels;
    for (const auto& q : perms) labels.push_back(perm_label(q));

    const Mat h = helmert_basis(n);
    std::vector<Mat> mats;
    for (const auto& q : perms) {
        Mat pm = Mat::Zero(n, n);
        for (int i = 0; i < n; ++i) pm(q[i], i) = 1.0;
        mats.push_back(h * pm * h.transpose());
    }
    std::optional<int> iso = r;
    return make_entry("permutahedron:" + std::to_string(n),
                      Representation(FiniteGroup(std::move(mul), std::move(labels)), std::move(mats)),
                      "permutahedron", iso);
}

CatalogEntry regular_perp_rep(const FiniteGroup& group, const std::string& key) {
    const int r = group.order();
    if (r < 3) fail(ErrorCode::InvalidOrder, "regular-perp representation needs |G| >= 3");
    const Mat h = helmert_basis(r);
    std::vector<Mat> mats;
    for (int x = 0; x < r; ++x) {
        // x sends e_g to e_{g x^{-1}}
        Mat pm = Mat::Zero(r, r);
        for (int g = 0; g < r; ++g) pm(group.mul(g, group.inv(x)), g) = 1.0;
        mats.push_back(h * pm * h.transpose());
    }
    return make_entry(key, Representation(group, std::move(mats)), "regular-action simplex", std::nullopt);
}

CatalogEntry nonfaithful_cyclic(int r, int r1) {
    if (r1 < 3) fail(ErrorCode::NotFullDimensional, "nonfaithful cyclic entry needs r1 >= 3");
    if (r < r1 || r % r1 != 0) fail(ErrorCode::InvalidParameter, "r1 must divide r");
    std::vector<Mat> mats;
    for (int k = 0; k < r; ++k) mats.push_back(rotation2(2 * kPi * (k % r1) / r1));
    std::string key = "nonfaithful:" + std::to_string(r) + ":" + std::to_string(r1);
    std::string name = r == r1 ? "regular " + std::to_string(r1) + "-gon"
                               : "regular " + std::to_string(r1) + "-gon of " + std::to_string(r / r1) +
                                     "-fold hull intersections";
    return make_entry(std::move(key), Representation(cyclic_group(r), std::move(mats)), std::move(name),
                      r == r1 ? std::optional<int>(2 * r) : std::nullopt);
}

CatalogEntry catalog_entry(const std::string& key) {
    std::vector<std::string_view> parts;
    std::string_view rest(key);
    while (true) {
        const auto pos = rest.find(':');
        parts.push_back(rest.substr(0, pos));
        if (pos == std::string_view::npos) break;
        rest.remove_prefix(pos + 1);
    }
    const std::string_view head = parts[0];
    auto arg = [&](std::size_t i) {
        if (parts.size() <= i) fail(ErrorCode::InvalidParameter, "catalog key '" + key + "' is missing a parameter");
        return parse_int(key, parts[i]);
    };
    auto arity = [&](std::size_t n) {
        if (parts.size() != n + 1) fail(ErrorCode::InvalidParameter, "malformed catalog key '" + key + "'");
    };

    if (head == "cyclic") return arity(1), cyclic_rotation(arg(1));
    if (head == "dihedral") return arity(1), dihedral_rep(arg(1));
    if (head == "prism") return arity(1), prism_rep(arg(1));
    if (head == "antiprism") return arity(1), antiprism_rep(arg(1));
    if (head == "q8") return arity(0), quaternion_group_rep(QuaternionKind::BinaryDihedral, 2);
    if (head == "binary_dihedral") return arity(1), quaternion_group_rep(QuaternionKind::BinaryDihedral, arg(1));
    if (head == "binary_tetrahedral") return arity(0), quaternion_group_rep(QuaternionKind::BinaryTetrahedral);
    if (head == "binary_icosahedral") return arity(0), quaternion_group_rep(QuaternionKind::BinaryIcosahedral);
    if (head == "rotation_tetrahedral") return arity(0), rotation_group_rep(RotationKind::Tetrahedral);
    if (head == "rotation_octahedral") return arity(0), rotation_group_rep(RotationKind::Octahedral);
    if (head == "rotation_icosahedral") return arity(0), rotation_group_rep(RotationKind::Icosahedral);
    if (head == "full_octahedral") return arity(0), full_polyhedral_rep(FullPolyhedralKind::FullOctahedral);
    if (head == "full_octahedral_x2") return arity(0), full_polyhedral_rep(FullPolyhedralKind::FullOctahedralX2);
    if (head == "full_icosahedral_x2") return arity(0), full_polyhedral_rep(FullPolyhedralKind::FullIcosahedralX2);
    if (head == "permutahedron") return arity(1), symmetric_permutahedron_rep(arg(1));
    if (head == "regular_perp") {
        arity(1);
        const int r = arg(1);
        if (r < 1 || r > kMaxGroupOrder) fail(ErrorCode::InvalidOrder, "group order out of range");
        return regular_perp_rep(cyclic_group(r), key);
    }
    if (head == "nonfaithful") return arity(2), nonfaithful_cyclic(arg(1), arg(2));
    fail(ErrorCode::InvalidParameter, "unknown catalog key '" + key + "'");
}

std::vector<std::string> catalog_keys() {
    std::vector<std::string> keys;
    for (int r = 3; r <= 8; ++r) keys.push_back("cyclic:" + std::to_string(r));
    for (int n = 2; n <= 4; ++n) keys.push_back("dihedral:" + std::to_string(n));
    for (int n = 3; n <= 5; ++n) keys.push_back("prism:" + std::to_string(n));
    for (int n = 2; n <= 5; ++n) keys.push_back("antiprism:" + std::to_string(n));
    keys.insert(keys.end(), {"q8", "binary_dihedral:3", "binary_tetrahedral", "binary_icosahedral",
                             "full_octahedral", "full_octahedral_x2", "full_icosahedral_x2", "rotation_tetrahedral",
                             "rotation_octahedral", "rotation_icosahedral", "permutahedron:3", "permutahedron:4",
                             "permutahedron:5", "regular_perp:3", "regular_perp:4", "regular_perp:5",
                             "nonfaithful:12:4", "nonfaithful:12:3"});
    return keys;
}

}  // namespace orbitpart
