#include "orbitpart/symmetry.hpp"

#include <algorithm>
#include <numeric>

#include "orbitpart/error.hpp"

namespace orbitpart {

namespace {

class Search {
public:
    Search(const std::vector<int>& colors, int n) : c_(colors), n_(n) {}

    // Looks for an automorphism fixing `fixed` pointwise and sending
    // `from` to `to`.
    bool find(const std::vector<int>& fixed, int from, int to, std::vector<int>& perm) {
        perm.assign(n_, -1);
        std::vector<std::vector<int>> cand(n_);
        for (int i = 0; i < n_; ++i)
            for (int j = 0; j < n_; ++j)
                if (at(i, i) == at(j, j)) cand[i].push_back(j);
        for (int b : fixed)
            if (!assign(b, b, perm, cand)) return false;
        if (perm[from] >= 0) return perm[from] == to;
        if (std::find(cand[from].begin(), cand[from].end(), to) == cand[from].end()) return false;
        if (!assign(from, to, perm, cand)) return false;
        return extend(perm, cand);
    }

private:
    int at(int i, int j) const { return c_[static_cast<std::size_t>(i) * n_ + j]; }

    bool assign(int i, int t, std::vector<int>& perm, std::vector<std::vector<int>>& cand) const {
        perm[i] = t;
        for (int k = 0; k < n_; ++k) {
            if (perm[k] >= 0) continue;
            auto& ck = cand[k];
            const int want = at(k, i);
            ck.erase(std::remove_if(ck.begin(), ck.end(), [&](int x) { return x == t || at(x, t) != want; }),
                     ck.end());
            if (ck.empty()) return false;
        }
        return true;
    }

    bool extend(std::vector<int>& perm, std::vector<std::vector<int>>& cand) const {
        int pick = -1;
        for (int k = 0; k < n_; ++k)
            if (perm[k] < 0 && (pick < 0 || cand[k].size() < cand[pick].size())) pick = k;
        if (pick < 0) return true;
        const auto options = cand[pick];
        for (int t : options) {
            auto trial_perm = perm;
            auto trial_cand = cand;
            if (assign(pick, t, trial_perm, trial_cand) && extend(trial_perm, trial_cand)) {
                perm = std::move(trial_perm);
                return true;
            }
        }
        return false;
    }

    const std::vector<int>& c_;
    int n_;
};

bool discrete_after_fixing(const std::vector<int>& colors, int n, const std::vector<int>& fixed) {
    std::vector<std::vector<int>> sig(n);
    for (int i = 0; i < n; ++i) {
        sig[i].push_back(colors[static_cast<std::size_t>(i) * n + i]);
        for (int b : fixed) sig[i].push_back(colors[static_cast<std::size_t>(i) * n + b]);
    }
    std::sort(sig.begin(), sig.end());
    return std::adjacent_find(sig.begin(), sig.end()) == sig.end();
}

bool mul_saturating(std::uint64_t& acc, std::uint64_t x) {
    if (x != 0 && acc > UINT64_MAX / x) {
        acc = UINT64_MAX;
        return false;
    }
    acc *= x;
    return true;
}

}  // namespace

Mat gram(const Representation& rep, const Vec& u) {
    const Mat o = orbit(rep, u);
    return o.transpose() * o;
}

AutomorphismGroup edge_colored_automorphisms(const std::vector<int>& colors, int n) {
    if (n < 0 || colors.size() != static_cast<std::size_t>(n) * n)
        fail(ErrorCode::InvalidParameter, "colour matrix must be n x n");
    AutomorphismGroup out;
    Search search(colors, n);
    std::vector<int> fixed;
    std::vector<int> perm;
    for (int b = 0; b < n; ++b) {
        if (discrete_after_fixing(colors, n, fixed)) break;
        std::vector<int> orb{b};
        std::vector<char> in_orbit(n, 0);
        in_orbit[b] = 1;
        std::vector<std::vector<int>> level_gens;
        for (int t = 0; t < n; ++t) {
            if (in_orbit[t]) continue;
            if (!search.find(fixed, b, t, perm)) continue;
            level_gens.push_back(perm);
            out.generators.push_back(perm);
            // a new generator can enlarge the orbit of earlier points too
            bool grown = true;
            while (grown) {
                grown = false;
                for (std::size_t q = 0; q < orb.size(); ++q)
                    for (const auto& gen : level_gens) {
                        const int y = gen[orb[q]];
                        if (!in_orbit[y]) {
                            in_orbit[y] = 1;
                            orb.push_back(y);
                            grown = true;
                        }
                    }
            }
        }
        if (!mul_saturating(out.order, orb.size())) out.saturated = true;
        fixed.push_back(b);
    }
    return out;
}

SymmetryReport osym(const Representation& rep, const Vec& u, double quantization) {
    const int r = rep.order(), d = rep.dim();
    if (u.size() != d) fail(ErrorCode::InvalidParameter, "u has the wrong dimension");
    const double nu = u.squaredNorm();
    if (nu == 0.0) fail(ErrorCode::Precondition, "u must be nonzero");
    if (r > 200) fail(ErrorCode::SizeGuard, "symmetry computation is limited to groups of order at most 200");
    if (affine_dim_orbit(rep, u) < d)
        fail(ErrorCode::Precondition, "orbit of u is not full-dimensional");

    SymmetryReport out;
    out.quantization = quantization;
    out.gram = gram(rep, u);
    const Mat normalised = out.gram / nu;

    std::vector<std::pair<double, std::size_t>> entries;
    entries.reserve(static_cast<std::size_t>(r) * r);
    for (int i = 0; i < r; ++i)
        for (int j = 0; j < r; ++j) entries.emplace_back(normalised(i, j), static_cast<std::size_t>(i) * r + j);
    std::sort(entries.begin(), entries.end());
    std::vector<int> colors(entries.size());
    int cls = 0;
    for (std::size_t k = 0; k < entries.size(); ++k) {
        if (k > 0 && entries[k].first - entries[k - 1].first > quantization) ++cls;
        colors[entries[k].second] = cls;
    }
    out.distinct_values = entries.empty() ? 0 : cls + 1;

    const auto aut = edge_colored_automorphisms(colors, r);
    out.osym_order = aut.order;
    out.order_saturated = aut.saturated;
    out.osym_generators = aut.generators;

    const FiniteGroup& group = rep.group();
    out.contains_left_regular = true;
    for (Element g = 0; g < r && out.contains_left_regular; ++g)
        for (Element h = 0; h < r && out.contains_left_regular; ++h)
            for (Element k = 0; k < r; ++k)
                if (colors[static_cast<std::size_t>(group.mul(g, h)) * r + group.mul(g, k)] !=
                    colors[static_cast<std::size_t>(h) * r + k]) {
                    out.contains_left_regular = false;
                    break;
                }
    return out;
}

}  // namespace orbitpart
