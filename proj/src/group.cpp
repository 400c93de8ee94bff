#include "orbitpart/group.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <random>

#include "orbitpart/error.hpp"

namespace orbitpart {

const char* to_string(SubspaceName name) noexcept {
    switch (name) {
        case SubspaceName::V0: return "V0";
        case SubspaceName::Vrho: return "Vrho";
        case SubspaceName::W0: return "W0";
        case SubspaceName::Wrho: return "Wrho";
        case SubspaceName::W: return "W";
        case SubspaceName::RperpG: return "RperpG";
    }
    return "?";
}

FiniteGroup::FiniteGroup(std::vector<Element> table, std::vector<std::string> labels)
    : mul_(std::move(table)), labels_(std::move(labels)) {
    const auto n = static_cast<std::size_t>(std::llround(std::sqrt(static_cast<double>(mul_.size()))));
    if (n == 0 || n * n != mul_.size()) fail(ErrorCode::InvalidOrder, "multiplication table is not square");
    if (n > static_cast<std::size_t>(kMaxGroupOrder))
        fail(ErrorCode::InvalidOrder, "group order " + std::to_string(n) + " exceeds 1024");
    order_ = static_cast<int>(n);
    const int r = order_;

    std::vector<char> seen(n);
    for (int a = 0; a < r; ++a) {
        std::fill(seen.begin(), seen.end(), 0);
        for (int b = 0; b < r; ++b) {
            const Element c = mul(a, b);
            if (c < 0 || c >= r || seen[c]) fail(ErrorCode::InvalidOrder, "table is not a Latin square");
            seen[c] = 1;
        }
    }
    for (int b = 0; b < r; ++b) {
        std::fill(seen.begin(), seen.end(), 0);
        for (int a = 0; a < r; ++a) {
            const Element c = mul(a, b);
            if (seen[c]) fail(ErrorCode::InvalidOrder, "table is not a Latin square");
            seen[c] = 1;
        }
    }

    identity_ = -1;
    for (int e = 0; e < r && identity_ < 0; ++e) {
        bool ok = true;
        for (int g = 0; g < r && ok; ++g) ok = mul(e, g) == g && mul(g, e) == g;
        if (ok) identity_ = e;
    }
    if (identity_ < 0) fail(ErrorCode::InvalidOrder, "table has no identity");

    inv_.assign(n, -1);
    for (int g = 0; g < r; ++g)
        for (int h = 0; h < r; ++h)
            if (mul(g, h) == identity_) inv_[g] = h;
    for (int g = 0; g < r; ++g)
        if (mul(inv_[g], g) != identity_) fail(ErrorCode::InvalidOrder, "element without two-sided inverse");

    auto assoc = [&](Element a, Element b, Element c) { return mul(mul(a, b), c) == mul(a, mul(b, c)); };
    if (r <= 128) {
        for (int a = 0; a < r; ++a)
            for (int b = 0; b < r; ++b)
                for (int c = 0; c < r; ++c)
                    if (!assoc(a, b, c)) fail(ErrorCode::InvalidOrder, "table is not associative");
    } else {
        // Large tables: a fixed pseudo-random sample of triples.
        std::mt19937_64 rng(0x9e3779b97f4a7c15ULL);
        std::uniform_int_distribution<int> pick(0, r - 1);
        for (int t = 0; t < 2'000'000; ++t)
            if (!assoc(pick(rng), pick(rng), pick(rng))) fail(ErrorCode::InvalidOrder, "table is not associative");
    }

    if (labels_.empty()) {
        labels_.reserve(n);
        for (int g = 0; g < r; ++g) labels_.push_back(std::to_string(g));
    } else if (labels_.size() != n) {
        fail(ErrorCode::InvalidParameter, "label count does not match group order");
    }
    auto sorted = labels_;
    std::sort(sorted.begin(), sorted.end());
    if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end())
        fail(ErrorCode::InvalidParameter, "element labels must be distinct");
}

int FiniteGroup::element_order(Element a) const {
    int k = 1;
    for (Element x = a; x != identity_; x = mul(x, a)) ++k;
    return k;
}

int FiniteGroup::exponent() const {
    int e = 1;
    for (int g = 0; g < order_; ++g) e = std::lcm(e, element_order(g));
    return e;
}

FiniteGroup cyclic_group(int r) {
    if (r < 1) fail(ErrorCode::InvalidOrder, "cyclic group order must be at least 1");
    if (r > kMaxGroupOrder) fail(ErrorCode::InvalidOrder, "group order exceeds 1024");
    std::vector<Element> mul(static_cast<std::size_t>(r) * r);
    for (int a = 0; a < r; ++a)
        for (int b = 0; b < r; ++b) mul[static_cast<std::size_t>(a) * r + b] = (a + b) % r;
    return FiniteGroup(std::move(mul));
}

FiniteGroup direct_product(const FiniteGroup& g, const FiniteGroup& h) {
    const int m = g.order(), n = h.order();
    const int r = m * n;
    if (r > kMaxGroupOrder) fail(ErrorCode::InvalidOrder, "group order exceeds 1024");
    std::vector<Element> mul(static_cast<std::size_t>(r) * r);
    std::vector<std::string> labels(r);
    for (int a = 0; a < r; ++a) {
        labels[a] = "(" + g.label(a / n) + "," + h.label(a % n) + ")";
        for (int b = 0; b < r; ++b)
            mul[static_cast<std::size_t>(a) * r + b] = g.mul(a / n, b / n) * n + h.mul(a % n, b % n);
    }
    return FiniteGroup(std::move(mul), std::move(labels));
}

// ---------------------------------------------------------------------------
// Representation

Representation::Representation(FiniteGroup group, std::vector<Mat> mats, double tol_ortho)
    : group_(std::move(group)), mats_(std::move(mats)), tol_(tol_ortho) {
    const int r = group_.order();
    if (static_cast<int>(mats_.size()) != r) fail(ErrorCode::InvalidMatrix, "one matrix per element required");
    dim_ = static_cast<int>(mats_[0].rows());
    if (dim_ < 1) fail(ErrorCode::InvalidMatrix, "representation dimension must be positive");
    for (const auto& m : mats_) {
        if (m.rows() != dim_ || m.cols() != dim_) fail(ErrorCode::InvalidMatrix, "matrices must be d x d");
        if (!m.allFinite()) fail(ErrorCode::InvalidMatrix, "non-finite matrix entry");
    }
    const Element e = group_.identity();
    if (max_abs(mats_[e] - Mat::Identity(dim_, dim_)) > tol_)
        fail(ErrorCode::InvalidMatrix, "identity element is not represented by I");
    mats_[e] = Mat::Identity(dim_, dim_);

    const double ortho = orthogonality_residual();
    if (ortho > tol_)
        fail(ErrorCode::InvalidMatrix, "matrix is not orthogonal (residual " + std::to_string(ortho) + ")");
    const double hom = homomorphism_residual();
    if (hom > tol_)
        fail(ErrorCode::InvalidMatrix, "matrices do not form a homomorphism (residual " + std::to_string(hom) + ")");
}

double Representation::orthogonality_residual() const {
    double worst = 0.0;
    const Mat id = Mat::Identity(dim_, dim_);
    for (const auto& m : mats_) worst = std::max(worst, max_abs(m.transpose() * m - id));
    return worst;
}

double Representation::homomorphism_residual() const {
    double worst = 0.0;
    const int r = group_.order();
    Mat prod(dim_, dim_);
    for (int g = 0; g < r; ++g)
        for (int h = 0; h < r; ++h) {
            prod.noalias() = mats_[g] * mats_[h];
            worst = std::max(worst, max_abs(mats_[group_.mul(g, h)] - prod));
        }
    return worst;
}

namespace {

int find_matrix(const std::vector<Mat>& list, const Mat& m, double tol) {
    for (std::size_t i = 0; i < list.size(); ++i)
        if (max_abs(list[i] - m) <= tol) return static_cast<int>(i);
    return -1;
}

}  // namespace

GeneratedGroup group_from_generators(std::span<const Mat> generators, int cap, std::vector<std::string> labels) {
    if (generators.empty()) fail(ErrorCode::InvalidMatrix, "at least one generator required");
    const Eigen::Index d = generators[0].rows();
    for (const auto& s : generators) {
        if (s.rows() != d || s.cols() != d) fail(ErrorCode::InvalidMatrix, "generators must be square of equal size");
        if (max_abs(s.transpose() * s - Mat::Identity(d, d)) > kOrthoTol)
            fail(ErrorCode::InvalidMatrix, "generator is not orthogonal");
    }
    cap = std::min(cap, kMaxGroupOrder);
    const int k = static_cast<int>(generators.size());
    constexpr double match = 1e-8;

    // Breadth-first closure under right multiplication by generators.
    std::vector<Mat> elems{Mat::Identity(d, d)};
    std::vector<int> parent{-1}, via{-1};
    std::vector<std::vector<int>> right;  // right[a][s] = index of elems[a] * gen[s]
    for (std::size_t a = 0; a < elems.size(); ++a) {
        right.emplace_back(k, -1);
        for (int s = 0; s < k; ++s) {
            Mat prod = elems[a] * generators[s];
            int idx = find_matrix(elems, prod, match);
            if (idx < 0) {
                if (static_cast<int>(elems.size()) >= cap)
                    fail(ErrorCode::NotFiniteWithinCap,
                         "generated group exceeds cap of " + std::to_string(cap) + " elements");
                idx = static_cast<int>(elems.size());
                elems.push_back(std::move(prod));
                parent.push_back(static_cast<int>(a));
                via.push_back(s);
            }
            right[a][s] = idx;
        }
    }

    // mul[a][b] follows b's BFS word: a * b = (a * parent(b)) * gen(via(b)).
    const int r = static_cast<int>(elems.size());
    std::vector<Element> mul(static_cast<std::size_t>(r) * r);
    for (int a = 0; a < r; ++a) {
        mul[static_cast<std::size_t>(a) * r] = a;
        for (int b = 1; b < r; ++b) {
            const int left = mul[static_cast<std::size_t>(a) * r + parent[b]];
            mul[static_cast<std::size_t>(a) * r + b] = right[left][via[b]];
        }
    }
    FiniteGroup group(std::move(mul), std::move(labels));
    Representation rep(group, std::move(elems));
    return {std::move(group), std::move(rep)};
}

Representation group_from_elements(std::vector<Mat> elements, std::vector<std::string> labels, double match_tol) {
    const int r = static_cast<int>(elements.size());
    if (r == 0) fail(ErrorCode::InvalidMatrix, "empty element list");
    if (r > kMaxGroupOrder) fail(ErrorCode::InvalidOrder, "group order exceeds 1024");
    std::vector<Element> mul(static_cast<std::size_t>(r) * r);
    for (int a = 0; a < r; ++a)
        for (int b = 0; b < r; ++b) {
            const int idx = find_matrix(elements, elements[a] * elements[b], match_tol);
            if (idx < 0) fail(ErrorCode::InvalidMatrix, "element list is not closed under multiplication");
            mul[static_cast<std::size_t>(a) * r + b] = idx;
        }
    return Representation(FiniteGroup(std::move(mul), std::move(labels)), std::move(elements));
}

// ---------------------------------------------------------------------------
// Kernel, projector, subspaces

std::vector<Element> kernel(const Representation& rep) {
    std::vector<Element> k;
    const Mat id = Mat::Identity(rep.dim(), rep.dim());
    for (int g = 0; g < rep.order(); ++g)
        if (max_abs(rep.matrix(g) - id) <= kKernelTol) k.push_back(g);
    return k;
}

bool is_faithful(const Representation& rep) { return kernel(rep).size() == 1; }

Mat fixed_projector(const Representation& rep) {
    Mat p = Mat::Zero(rep.dim(), rep.dim());
    for (const auto& m : rep.matrices()) p += m;
    return p / static_cast<double>(rep.order());
}

bool has_trivial_subrep(const Representation& rep) { return max_abs(fixed_projector(rep)) > kOrthoTol; }

namespace {

// Stacked d x dr matrices [I I ... I] and [rho(g)^T ...].
Mat sum_constraint(const Representation& rep) {
    const int d = rep.dim(), r = rep.order();
    Mat c(d, static_cast<Eigen::Index>(d) * r);
    for (int g = 0; g < r; ++g) c.middleCols(static_cast<Eigen::Index>(g) * d, d).setIdentity();
    return c;
}

Mat twisted_constraint(const Representation& rep) {
    const int d = rep.dim(), r = rep.order();
    Mat c(d, static_cast<Eigen::Index>(d) * r);
    for (int g = 0; g < r; ++g) c.middleCols(static_cast<Eigen::Index>(g) * d, d) = rep.matrix(g).transpose();
    return c;
}

}  // namespace

SubspaceBasis basis_V0(const Representation& rep) {
    return {rep.dim() * rep.order(), sum_constraint(rep).transpose() / std::sqrt(rep.order()), SubspaceName::V0};
}

SubspaceBasis basis_V_rho(const Representation& rep) {
    // Columns (rho(g) e_i)_g / sqrt(r) are already orthonormal.
    return {rep.dim() * rep.order(), twisted_constraint(rep).transpose() / std::sqrt(rep.order()),
            SubspaceName::Vrho};
}

SubspaceBasis basis_W0(const Representation& rep) {
    return {rep.dim() * rep.order(), nullspace(sum_constraint(rep)), SubspaceName::W0};
}

SubspaceBasis basis_W_rho(const Representation& rep) {
    return {rep.dim() * rep.order(), nullspace(twisted_constraint(rep)), SubspaceName::Wrho};
}

SubspaceBasis basis_W(const Representation& rep) {
    if (has_trivial_subrep(rep))
        fail(ErrorCode::Precondition, "representation contains a trivial subrepresentation");
    const int d = rep.dim(), r = rep.order();
    Mat stacked(2 * d, static_cast<Eigen::Index>(d) * r);
    stacked << sum_constraint(rep), twisted_constraint(rep);
    Mat w = nullspace(stacked);
    if (w.cols() != static_cast<Eigen::Index>(d) * (r - 2))
        fail(ErrorCode::DegenerateRepresentation, "dim W is " + std::to_string(w.cols()) + ", expected " +
                                                      std::to_string(d * (r - 2)));
    return {d * r, std::move(w), SubspaceName::W};
}

SubspaceBasis basis_Rperp(int r) {
    if (r < 1) fail(ErrorCode::InvalidOrder, "r must be positive");
    return {r, helmert_basis(r).transpose(), SubspaceName::RperpG};
}

Vec act_on_blocks(const FiniteGroup& group, int d, Element h, const Vec& w) {
    Vec out(w.size());
    for (int g = 0; g < group.order(); ++g)
        out.segment(static_cast<Eigen::Index>(g) * d, d) =
            w.segment(static_cast<Eigen::Index>(group.mul(g, h)) * d, d);
    return out;
}

CheckList verify_decomposition(const Representation& rep) {
    CheckList report;
    const int dr = rep.dim() * rep.order();
    const auto v_rho = basis_V_rho(rep);
    const auto w_rho = basis_W_rho(rep);
    report.add("dim Vrho = d", v_rho.dim() == rep.dim(), v_rho.dim(), rep.dim());
    report.add("dim Vrho + dim Wrho = dr", v_rho.dim() + w_rho.dim() == dr, v_rho.dim() + w_rho.dim(), dr);
    const double cos_rho = max_principal_cosine(v_rho.basis, w_rho.basis);
    report.add("Vrho ∩ Wrho = 0", cos_rho <= 1.0 - 1e-8, cos_rho, 1.0 - 1e-8);

    const bool trivial = has_trivial_subrep(rep);
    report.add("no trivial subrepresentation", !trivial, max_abs(fixed_projector(rep)), kOrthoTol);
    if (!trivial) {
        Mat both(dr, 2 * rep.dim());
        both << basis_V0(rep).basis, v_rho.basis;
        const Mat v_prime = orthonormal_range(both);
        report.add("V0 ∩ Vrho = 0", v_prime.cols() == 2 * rep.dim(), static_cast<double>(v_prime.cols()),
                   2.0 * rep.dim());
        const auto w = basis_W(rep);
        report.add("dim V' + dim W = dr", v_prime.cols() + w.dim() == dr, static_cast<double>(v_prime.cols() + w.dim()),
                   dr);
        const double cos_w = max_principal_cosine(v_prime, w.basis);
        report.add("V' ∩ W = 0", cos_w <= 1.0 - 1e-8, cos_w, 1.0 - 1e-8);
    }
    return report;
}

// ---------------------------------------------------------------------------
// Orbits

Mat orbit(const Representation& rep, const Vec& u) {
    Mat pts(rep.dim(), rep.order());
    for (int g = 0; g < rep.order(); ++g) pts.col(g) = rep.matrix(g) * u;
    return pts;
}

std::vector<Element> stabilizer(const Representation& rep, const Vec& u) {
    std::vector<Element> s;
    const double tol = 1e-8 * (1.0 + u.norm());
    for (int g = 0; g < rep.order(); ++g)
        if ((rep.matrix(g) * u - u).norm() <= tol) s.push_back(g);
    return s;
}

int affine_dim_points(const Mat& columns) {
    if (columns.cols() == 0) return 0;
    const Vec centroid = columns.rowwise().mean();
    return numerical_rank(columns.colwise() - centroid);
}

int affine_dim_orbit(const Representation& rep, const Vec& u) { return affine_dim_points(orbit(rep, u)); }

int max_orbit_dim(const Representation& rep, int samples, std::uint64_t seed) {
    std::mt19937_64 rng(seed);
    std::normal_distribution<double> normal;
    int best = 0;
    Vec u(rep.dim());
    for (int s = 0; s < std::max(samples, 1); ++s) {
        for (int i = 0; i < rep.dim(); ++i) u(i) = normal(rng);
        best = std::max(best, affine_dim_orbit(rep, u));
    }
    return best;
}

double character_norm(const Representation& rep) {
    double sum = 0.0;
    for (const auto& m : rep.matrices()) {
        const double chi = m.trace();
        sum += chi * chi;
    }
    return sum / rep.order();
}

}  // namespace orbitpart
