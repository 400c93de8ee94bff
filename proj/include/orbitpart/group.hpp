#pragma once

#include <cstdint>
#include <span>
#include <string>
#include <vector>

#include "orbitpart/check.hpp"
#include "orbitpart/linalg.hpp"

namespace orbitpart {

using Element = int;

inline constexpr int kMaxGroupOrder = 1024;
inline constexpr double kOrthoTol = 1e-10;
inline constexpr double kKernelTol = 1e-8;

/// Abstract finite group on the index set 0..r-1, given by its Cayley table.
/// The constructor validates every group axiom and derives identity and
/// inverses; a constructed FiniteGroup is immutable.
class FiniteGroup {
public:
    /// `mul` is row-major r x r: mul[a * r + b] = a * b.
    explicit FiniteGroup(std::vector<Element> mul, std::vector<std::string> labels = {});

    int order() const noexcept { return order_; }
    Element identity() const noexcept { return identity_; }
    Element mul(Element a, Element b) const { return mul_[static_cast<std::size_t>(a) * order_ + b]; }
    Element inv(Element a) const { return inv_[a]; }
    const std::string& label(Element a) const { return labels_[a]; }
    const std::vector<std::string>& labels() const noexcept { return labels_; }
    std::span<const Element> table() const noexcept { return mul_; }
    std::span<const Element> inverses() const noexcept { return inv_; }

    /// Order of a single element.
    int element_order(Element a) const;
    /// Least common multiple of element orders.
    int exponent() const;

private:
    int order_ = 0;
    Element identity_ = 0;
    std::vector<Element> mul_;
    std::vector<Element> inv_;
    std::vector<std::string> labels_;
};

FiniteGroup cyclic_group(int r);
/// Pairs (g, h) are encoded as g * |H| + h.
FiniteGroup direct_product(const FiniteGroup& g, const FiniteGroup& h);

/// Orthogonal representation rho: G -> O(d). Matrices are indexed by element.
class Representation {
public:
    Representation(FiniteGroup group, std::vector<Mat> mats, double tol_ortho = kOrthoTol);

    const FiniteGroup& group() const noexcept { return group_; }
    int order() const noexcept { return group_.order(); }
    int dim() const noexcept { return dim_; }
    const Mat& matrix(Element g) const { return mats_[g]; }
    const std::vector<Mat>& matrices() const noexcept { return mats_; }
    double tol_ortho() const noexcept { return tol_; }

    double orthogonality_residual() const;
    double homomorphism_residual() const;

private:
    FiniteGroup group_;
    int dim_ = 0;
    std::vector<Mat> mats_;
    double tol_ = kOrthoTol;
};

struct GeneratedGroup {
    FiniteGroup group;
    Representation rep;
};

/// Closes a set of orthogonal matrices under multiplication. Element 0 is
/// the identity; matrices are matched within 1e-8.
GeneratedGroup group_from_generators(std::span<const Mat> generators, int cap = kMaxGroupOrder,
                                     std::vector<std::string> labels = {});

/// Builds the table of a finite matrix group from its full element list
/// (which must already be closed). Element order is preserved.
Representation group_from_elements(std::vector<Mat> elements, std::vector<std::string> labels = {},
                                   double match_tol = 1e-9);

std::vector<Element> kernel(const Representation& rep);
bool is_faithful(const Representation& rep);

/// (1/r) sum_g rho(g): the orthogonal projector onto the fixed space.
Mat fixed_projector(const Representation& rep);
bool has_trivial_subrep(const Representation& rep);

enum class SubspaceName { V0, Vrho, W0, Wrho, W, RperpG };
const char* to_string(SubspaceName name) noexcept;

struct SubspaceBasis {
    int ambient_dim = 0;
    Mat basis;  // orthonormal columns
    SubspaceName name = SubspaceName::W;

    int dim() const noexcept { return static_cast<int>(basis.cols()); }
};

// Vectors of R^d[G] are stored blockwise: entry g * d + i is coordinate i
// of the g-th block.

SubspaceBasis basis_V0(const Representation& rep);
SubspaceBasis basis_W0(const Representation& rep);
SubspaceBasis basis_V_rho(const Representation& rep);
SubspaceBasis basis_W_rho(const Representation& rep);
/// W = W0 ∩ Wrho, of dimension d(r-2) when rep has no trivial subrepresentation.
SubspaceBasis basis_W(const Representation& rep);
/// Orthonormal basis of the sum-zero subspace of R^r (r-1 columns).
SubspaceBasis basis_Rperp(int r);

/// Left action of h on R^d[G]: (h.w)_g = w_{gh}.
Vec act_on_blocks(const FiniteGroup& group, int d, Element h, const Vec& w);

CheckList verify_decomposition(const Representation& rep);

/// Columns rho(g) u in element order.
Mat orbit(const Representation& rep, const Vec& u);
std::vector<Element> stabilizer(const Representation& rep, const Vec& u);
int affine_dim_orbit(const Representation& rep, const Vec& u);
int affine_dim_points(const Mat& columns);
int max_orbit_dim(const Representation& rep, int samples = 8, std::uint64_t seed = 0);

/// (1/r) sum_g tr(rho(g))^2. 1 for absolutely irreducible, 2 for an
/// irreducible real representation of complex type.
double character_norm(const Representation& rep);

}  // namespace orbitpart
