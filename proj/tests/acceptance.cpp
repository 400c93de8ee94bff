// Acceptance run: prints one PASS/FAIL line per criterion and exits non-zero
// if any gating criterion fails.

#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <functional>
#include <map>
#include <random>
#include <string>
#include <vector>

#include <json.hpp>

#include "orbitpart/catalog.hpp"
#include "orbitpart/error.hpp"
#include "orbitpart/geometry.hpp"
#include "orbitpart/group.hpp"
#include "orbitpart/io.hpp"
#include "orbitpart/partition.hpp"
#include "orbitpart/solver.hpp"
#include "orbitpart/symmetry.hpp"

using namespace orbitpart;
using Clock = std::chrono::steady_clock;

namespace {

struct Outcome {
    bool passed = true;
    std::string detail;
    void fail(const std::string& why) {
        if (passed) detail = why;
        passed = false;
    }
};

double seconds_since(Clock::time_point t0) {
    return std::chrono::duration<double>(Clock::now() - t0).count();
}

bool trace_monotone(const std::vector<double>& trace) {
    for (std::size_t i = 1; i < trace.size(); ++i)
        if (trace[i] > trace[i - 1] + 1e-12) return false;
    return true;
}

std::size_t g_traces_checked = 0;
bool g_traces_ok = true;

PartitionRun solve(const CatalogEntry& e, std::uint64_t seed) {
    const auto config = generate_points(e.d, e.n_bound, seed);
    SolverOptions o;
    o.seed = seed;
    o.threads = 1;
    o.record_trace = true;
    auto run = run_partition(e.key, e.rep, config, o);
    ++g_traces_checked;
    if (!trace_monotone(run.solver.trace)) g_traces_ok = false;
    return run;
}

std::vector<std::string> criterion2_keys() {
    std::vector<std::string> keys;
    for (int r = 3; r <= 8; ++r) keys.push_back("cyclic:" + std::to_string(r));
    for (int n = 3; n <= 5; ++n) keys.push_back("prism:" + std::to_string(n));
    for (int n = 2; n <= 5; ++n) keys.push_back("antiprism:" + std::to_string(n));
    keys.insert(keys.end(), {"q8", "rotation_tetrahedral", "permutahedron:3"});
    return keys;
}

// Partitions from criterion 2, reused by the witness checks.
std::map<std::string, std::vector<PartitionRun>> g_runs;

Outcome criterion1() {
    Outcome o;
    const std::vector<std::pair<std::string, int>> expected{
        {"q8", 32},           {"binary_tetrahedral", 112}, {"binary_icosahedral", 592},
        {"full_octahedral", 90}, {"full_octahedral_x2", 186}, {"full_icosahedral_x2", 474},
        {"rotation_tetrahedral", 42}, {"rotation_octahedral", 90}, {"rotation_icosahedral", 234},
        {"nonfaithful:12:4", 32}, {"nonfaithful:12:3", 32}};
    std::vector<CatalogEntry> entries;
    for (const auto& k : catalog_keys()) entries.push_back(catalog_entry(k));
    const auto doc = nlohmann::json::parse(catalog_to_json(entries));
    std::map<std::string, int> bound;
    for (const auto& item : doc) bound[item["key"].get<std::string>()] = item["N_bound"].get<int>();
    for (const auto& [k, n] : expected)
        if (bound[k] != n) o.fail(k + " lists " + std::to_string(bound[k]) + ", expected " + std::to_string(n));
    for (int r = 3; r <= 8; ++r) {
        const auto k = "cyclic:" + std::to_string(r);
        if (bound[k] != 3 * r - 4) o.fail(k + " bound is not 3r-4");
    }
    for (int n = 3; n <= 5; ++n)
        for (const auto* kind : {"prism:", "antiprism:"}) {
            const auto k = kind + std::to_string(n);
            if (bound[k] != 8 * n - 6) o.fail(k + " bound is not 8n-6");
        }
    if (o.passed) o.detail = std::to_string(expected.size() + 12) + " bounds match";
    return o;
}

Outcome criterion2() {
    Outcome o;
    double worst_time = 0.0, worst_residual = 0.0;
    std::string slowest;
    int instances = 0;
    for (const auto& key : criterion2_keys()) {
        const auto e = catalog_entry(key);
        for (std::uint64_t seed = 1; seed <= 20; ++seed) {
            const auto t0 = Clock::now();
            auto run = solve(e, seed);
            const double dt = seconds_since(t0);
            if (dt > worst_time) {
                worst_time = dt;
                slowest = key;
            }
            ++instances;
            const std::string tag = key + " seed " + std::to_string(seed);
            if (!run.partition) {
                o.fail(tag + " did not converge");
                continue;
            }
            const auto& p = *run.partition;
            worst_residual = std::max(worst_residual, p.residual);
            if (p.residual > 1e-8) o.fail(tag + " residual " + std::to_string(p.residual));
            if (!run.checks.ok()) o.fail(tag + " failed verification");
            if (!p.free) o.fail(tag + " witness orbit is not free");
            if (!p.full_dim) o.fail(tag + " witness orbit is not full-dimensional");
            if (dt > 5.0) o.fail(tag + " took " + std::to_string(dt) + " s");
            g_runs[key].push_back(std::move(run));
        }
    }
    char buf[200];
    std::snprintf(buf, sizeof buf, "%d instances, max residual %.2e, slowest %s %.3f s", instances, worst_residual,
                  slowest.c_str(), worst_time);
    if (o.passed) o.detail = buf;
    return o;
}

Outcome criterion3() {
    Outcome o;
    double worst = 0.0;
    for (int r = 3; r <= 8; ++r)
        for (const auto& run : g_runs["cyclic:" + std::to_string(r)]) {
            const auto reg = polygon_regularity(run.partition->witnesses);
            worst = std::max(worst, reg.max_deviation);
            if (!reg.is_regular) o.fail("cyclic:" + std::to_string(r) + " witnesses are not a regular polygon");
        }
    for (const auto& run : g_runs["q8"]) {
        const auto& p = *run.partition;
        // diagonals x_g - x_{-g}; element labels pair up as g and -g
        const auto e = catalog_entry("q8");
        std::vector<Vec> diag;
        std::vector<bool> used(8, false);
        for (Element g = 0; g < 8; ++g) {
            if (used[g]) continue;
            Element minus = -1;
            for (Element h = 0; h < 8; ++h)
                if ((e.rep.matrix(h) + e.rep.matrix(g)).norm() <= 1e-12) minus = h;
            if (minus < 0) {
                o.fail("q8 has no antipodal element");
                break;
            }
            used[g] = used[minus] = true;
            diag.push_back(p.witnesses.col(g) - p.witnesses.col(minus));
        }
        if (diag.size() != 4) {
            o.fail("q8 witnesses do not pair into 4 diagonals");
            continue;
        }
        const double len = diag[0].norm();
        for (int i = 0; i < 4; ++i) {
            const double dl = std::abs(diag[i].norm() - len) / len;
            worst = std::max(worst, dl);
            if (dl > 1e-6) o.fail("q8 diagonals have different lengths");
            for (int j = i + 1; j < 4; ++j) {
                const double c = std::abs(diag[i].dot(diag[j])) / (len * len);
                worst = std::max(worst, c);
                if (c > 1e-6) o.fail("q8 diagonals are not orthogonal");
            }
        }
    }
    for (const auto& run : g_runs["antiprism:3"]) {
        const Mat& w = run.partition->witnesses;
        const auto facets = convex_hull_3d(w);
        const auto edges = hull_edges_3d(facets);
        std::vector<int> degree(6, 0);
        for (const auto& e : edges) {
            ++degree[e[0]];
            ++degree[e[1]];
        }
        bool octahedral = facets.size() == 8 && edges.size() == 12;
        for (const auto& f : facets) octahedral = octahedral && f.vertices.size() == 3;
        for (int k : degree) octahedral = octahedral && k == 4;
        if (!octahedral) o.fail("antiprism:3 witness hull is not an octahedron");

        // two congruent triangles, six equal lateral edges, three equal long diagonals
        const auto dist = distance_multiset(w);
        std::vector<int> classes;
        std::size_t start = 0;
        for (std::size_t i = 1; i <= dist.size(); ++i)
            if (i == dist.size() || dist[i] - dist[i - 1] > 1e-6 * dist.back()) {
                classes.push_back(static_cast<int>(i - start));
                worst = std::max(worst, (dist[i - 1] - dist[start]) / dist.back());
                start = i;
            }
        std::sort(classes.begin(), classes.end());
        const bool antiprism_classes = classes == std::vector<int>{3, 6, 6} || classes == std::vector<int>{3, 12};
        if (!antiprism_classes) o.fail("antiprism:3 distance multiset does not have the antiprism pattern");
    }
    char buf[120];
    std::snprintf(buf, sizeof buf, "max deviation %.2e", worst);
    if (o.passed) o.detail = buf;
    return o;
}

Outcome criterion4() {
    Outcome o;
    double worst = 0.0;
    for (int r : {3, 4}) {
        const auto e = cyclic_rotation(r);
        for (std::uint64_t seed = 1; seed <= 20; ++seed) {
            SolverOptions opts;
            opts.seed = seed;
            opts.threads = 1;
            const auto rep = run_oracle(e.rep, generate_points(2, e.n_bound, 1000 + seed), false, opts);
            const double diff = std::abs(*rep.pivoting_residual - rep.brute_force_residual);
            worst = std::max(worst, diff);
            if (diff > 1e-8)
                o.fail("r=" + std::to_string(r) + " seed " + std::to_string(seed) + " differs by " + std::to_string(diff));
            const std::uint64_t expect = r == 3 ? 243 : 65536;
            if (rep.assignments != expect) o.fail("unexpected assignment count");
        }
    }
    char buf[120];
    std::snprintf(buf, sizeof buf, "40 instances, max |pivot - brute force| %.2e", worst);
    if (o.passed) o.detail = buf;
    return o;
}

Outcome criterion5() {
    Outcome o;
    const auto e = cyclic_rotation(3);
    int above = 0;
    double smallest = INFINITY;
    for (std::uint64_t seed = 1; seed <= 100; ++seed) {
        const auto rep = run_oracle(e.rep, generate_points(2, e.n_bound - 1, 5000 + seed), true, SolverOptions{});
        smallest = std::min(smallest, rep.brute_force_residual);
        if (rep.brute_force_residual > 1e-6) ++above;
    }
    char buf[120];
    std::snprintf(buf, sizeof buf, "%d/100 seeds with minimum residual > 1e-6 (smallest %.3e)", above, smallest);
    o.detail = buf;
    if (above < 99) o.fail(buf);
    return o;
}

Outcome criterion6() {
    Outcome o;
    double worst_member = 0.0, worst_reg = 0.0;
    for (auto [r1, per] : {std::pair{4, 3}, std::pair{3, 4}}) {
        const auto e = nonfaithful_cyclic(12, r1);
        for (std::uint64_t seed = 1; seed <= 5; ++seed) {
            const std::string tag = e.key + " seed " + std::to_string(seed);
            const auto run = solve(e, seed);
            if (!run.partition || !run.checks.ok()) {
                o.fail(tag + " has no verified partition");
                continue;
            }
            if (run.partition->subsets.size() != 12) o.fail(tag + " does not have 12 subsets");
            if (!run.intersection) {
                o.fail(tag + " has no intersection report");
                continue;
            }
            const auto& ir = *run.intersection;
            if (static_cast<int>(ir.cosets.size()) != r1) o.fail(tag + " wrong number of targets");
            for (const auto& row : ir.membership_residuals) {
                if (static_cast<int>(row.size()) != per) o.fail(tag + " wrong number of hulls per target");
                for (double m : row) {
                    worst_member = std::max(worst_member, m);
                    if (m > 1e-8) o.fail(tag + " target outside a hull");
                }
            }
            worst_reg = std::max(worst_reg, ir.regularity_deviation);
            if (!ir.targets_regular || ir.regularity_deviation > 1e-6) o.fail(tag + " targets are not regular");
        }
    }
    char buf[160];
    std::snprintf(buf, sizeof buf, "max membership residual %.2e, max regularity deviation %.2e", worst_member,
                  worst_reg);
    if (o.passed) o.detail = buf;
    return o;
}

Outcome criterion7() {
    Outcome o;
    std::vector<std::string> keys;
    for (int n = 3; n <= 5; ++n) keys.push_back("prism:" + std::to_string(n));
    for (int n = 2; n <= 5; ++n) keys.push_back("antiprism:" + std::to_string(n));
    keys.push_back("rotation_tetrahedral");
    for (int r = 3; r <= 8; ++r) keys.push_back("cyclic:" + std::to_string(r));
    int checked = 0;
    for (const auto& key : keys) {
        const auto e = catalog_entry(key);
        if (!e.expected_iso_order) {
            o.fail(key + " has no expected order");
            continue;
        }
        const auto& runs = g_runs[key];
        for (std::size_t i = 0; i < runs.size() && i < 10; ++i) {
            const auto rep = osym(e.rep, runs[i].partition->generator);
            ++checked;
            if (rep.osym_order != static_cast<std::uint64_t>(*e.expected_iso_order))
                o.fail(key + " order " + std::to_string(rep.osym_order) + ", expected " +
                       std::to_string(*e.expected_iso_order));
        }
    }
    if (o.passed) o.detail = std::to_string(checked) + " orbit polytopes match";
    return o;
}

Outcome criterion8() {
    Outcome o;
    for (const auto& key : catalog_keys()) {
        const auto e = catalog_entry(key);
        const auto& g = e.rep.group();
        const int r = g.order();
        bool axioms = true;
        for (Element a = 0; a < r; ++a) {
            axioms = axioms && g.mul(a, g.identity()) == a && g.mul(g.identity(), a) == a;
            axioms = axioms && g.mul(a, g.inv(a)) == g.identity();
            for (Element b = 0; b < r; ++b)
                for (Element c = 0; c < r; ++c) axioms = axioms && g.mul(g.mul(a, b), c) == g.mul(a, g.mul(b, c));
        }
        if (!axioms) o.fail(key + " group axioms");
        if (e.rep.orthogonality_residual() > 1e-10 || e.rep.homomorphism_residual() > 1e-10)
            o.fail(key + " representation residual");
        const Mat p = fixed_projector(e.rep);
        if (max_abs(p * p - p) > 1e-10) o.fail(key + " projector is not idempotent");
        if (basis_W(e.rep).dim() != e.d * (r - 2)) o.fail(key + " dim W");
        if (r <= 60) {
            const auto config = generate_points(e.d, e.n_bound, 31);
            const auto tm = TestMap::build(e.rep, config);
            if (tm.classes().max_relative_class_mean() > 1e-9) o.fail(key + " colour class mean");
            double eq = 0.0;
            for (int j = 0; j < std::min(3, e.n_bound); ++j)
                for (Element a = 0; a < r; ++a)
                    for (Element h = 0; h < r; ++h) {
                        const Vec lhs = raw_F_column(e.rep, config, j, g.mul(a, g.inv(h)));
                        const Vec rhs = act_on_blocks(g, e.d, h, raw_F_column(e.rep, config, j, a));
                        eq = std::max(eq, (lhs - rhs).norm());
                    }
            if (eq > 1e-10) o.fail(key + " equivariance " + std::to_string(eq));
        }
    }
    std::mt19937_64 rng(2024);
    std::uniform_int_distribution<int> dim(1, 10), cnt(1, 30);
    std::normal_distribution<double> nd;
    for (int t = 0; t < 1000; ++t) {
        Mat pts(dim(rng), cnt(rng));
        for (Eigen::Index i = 0; i < pts.size(); ++i) pts.data()[i] = nd(rng);
        if (t % 2) pts.colwise() += Vec::Constant(pts.rows(), 2.0);
        const auto res = min_norm_point(pts);
        if (min_norm_certificate(pts, res.x) < -1e-10) o.fail("min-norm certificate fails on instance " + std::to_string(t));
    }
    if (!g_traces_ok) o.fail("a pivot trace increased");
    if (o.passed)
        o.detail = std::to_string(catalog_keys().size()) + " representations, 1000 min-norm instances, " +
                   std::to_string(g_traces_checked) + " traces";
    return o;
}

Outcome criterion9() {
    Outcome o;
    std::vector<std::pair<std::string, double>> expected;
    for (const char* k : {"dihedral:3", "dihedral:4", "permutahedron:3", "permutahedron:4", "rotation_tetrahedral",
                          "rotation_octahedral", "rotation_icosahedral"})
        expected.emplace_back(k, 1.0);
    for (int r = 3; r <= 8; ++r) expected.emplace_back("cyclic:" + std::to_string(r), 2.0);
    double worst = 0.0;
    for (const auto& [k, v] : expected) {
        const double cn = character_norm(catalog_entry(k).rep);
        worst = std::max(worst, std::abs(cn - v));
        if (std::abs(cn - v) > 1e-8) o.fail(k + " character norm " + std::to_string(cn));
    }
    char buf[120];
    std::snprintf(buf, sizeof buf, "%zu representations, max deviation %.2e", expected.size(), worst);
    if (o.passed) o.detail = buf;
    return o;
}

void stretch(const std::string& key, double budget) {
    const auto e = catalog_entry(key);
    const auto t0 = Clock::now();
    const auto run = solve(e, 1);
    const double dt = seconds_since(t0);
    const bool ok = run.partition && run.checks.ok() && dt <= budget;
    std::printf("stretch %s (N=%d): %s, %.1f s, residual %.2e (non-gating)\n", key.c_str(), e.n_bound,
                ok ? "converged" : "not converged", dt, run.solver.residual);
}

}  // namespace

int main(int argc, char** argv) {
    const bool full_stretch = argc > 1 && std::string(argv[1]) == "--stretch";
    const std::vector<std::function<Outcome()>> criteria{criterion1, criterion2, criterion3, criterion4, criterion5,
                                                         criterion6, criterion7, criterion8, criterion9};
    int failures = 0;
    for (std::size_t i = 0; i < criteria.size(); ++i) {
        Outcome o;
        const auto t0 = Clock::now();
        try {
            o = criteria[i]();
        } catch (const std::exception& ex) {
            o.fail(std::string("exception: ") + ex.what());
        }
        std::printf("criterion %zu: %s  %s  [%.1f s]\n", i + 1, o.passed ? "PASS" : "FAIL", o.detail.c_str(),
                    seconds_since(t0));
        std::fflush(stdout);
        if (!o.passed) ++failures;
    }
    stretch("binary_tetrahedral", 600.0);
    if (full_stretch) stretch("binary_icosahedral", 3600.0);
    return failures == 0 ? 0 : 1;
}
