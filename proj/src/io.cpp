#include "orbitpart/io.hpp"

#include <charconv>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <random>
#include <sstream>

#include <json.hpp>

#include "orbitpart/error.hpp"

namespace orbitpart {

using json = nlohmann::ordered_json;

namespace {

json parse_json(const std::string& text, const std::string& source) {
    try {
        return json::parse(text);
    } catch (const json::parse_error& e) {
        fail(ErrorCode::Parse, source + ": parse error at byte " + std::to_string(e.byte) + ": " + e.what());
    }
}

[[noreturn]] void bad_field(const std::string& source, const std::string& field, const std::string& why) {
    fail(ErrorCode::Parse, source + ": field '" + field + "' " + why);
}

const json& require(const json& obj, const char* field, const std::string& source) {
    if (!obj.is_object() || !obj.contains(field)) bad_field(source, field, "is missing");
    return obj.at(field);
}

template <class T>
T get_as(const json& j, const std::string& field, const std::string& source) {
    try {
        return j.get<T>();
    } catch (const json::exception& e) {
        bad_field(source, field, std::string("has the wrong type: ") + e.what());
    }
}

json vec_json(const Vec& v) {
    json a = json::array();
    for (Eigen::Index i = 0; i < v.size(); ++i) a.push_back(v(i));
    return a;
}

Vec vec_from(const json& j, int d, const std::string& field, const std::string& source) {
    const auto xs = get_as<std::vector<double>>(j, field, source);
    if (d >= 0 && static_cast<int>(xs.size()) != d) bad_field(source, field, "has the wrong length");
    return Eigen::Map<const Vec>(xs.data(), static_cast<Eigen::Index>(xs.size()));
}

std::vector<int> one_based(const std::vector<int>& idx) {
    std::vector<int> out;
    for (int i : idx) out.push_back(i + 1);
    return out;
}

Element element_by_label(const Representation& rep, const std::string& label, const std::string& source) {
    const auto& labels = rep.group().labels();
    for (Element g = 0; g < rep.order(); ++g)
        if (labels[g] == label) return g;
    fail(ErrorCode::Parse, source + ": unknown element label '" + label + "'");
}

std::string fmt17(double x) {
    char buf[32];
    std::snprintf(buf, sizeof buf, "%.17g", x);
    return buf;
}

json check_json(const CheckList& checks) {
    json out = json::object();
    for (const auto& c : checks.checks) out[c.name] = {{"passed", c.passed}, {"value", c.value}, {"threshold", c.threshold}};
    return out;
}

CheckList checks_from(const json& j, const std::string& source) {
    CheckList out;
    if (!j.is_object()) bad_field(source, "checks", "must be an object");
    for (const auto& [name, c] : j.items())
        out.add(name, get_as<bool>(require(c, "passed", source), "passed", source),
                get_as<double>(require(c, "value", source), "value", source),
                get_as<double>(require(c, "threshold", source), "threshold", source));
    return out;
}

json intersection_json(const IntersectionReport& rep_out, const Representation& rep) {
    json cosets = json::array(), subsets = json::array(), targets = json::array(), res = json::array();
    for (std::size_t i = 0; i < rep_out.cosets.size(); ++i) {
        json labels = json::array(), groups = json::array();
        for (Element g : rep_out.cosets[i]) labels.push_back(rep.group().label(g));
        for (const auto& s : rep_out.subsets[i]) groups.push_back(one_based(s));
        cosets.push_back(labels);
        subsets.push_back(groups);
        targets.push_back(vec_json(rep_out.targets.col(static_cast<Eigen::Index>(i))));
        res.push_back(rep_out.membership_residuals[i]);
    }
    return {{"cosets", cosets},
            {"subsets", subsets},
            {"targets", targets},
            {"membership_residuals", res},
            {"targets_regular", rep_out.targets_regular},
            {"regularity_deviation", rep_out.regularity_deviation}};
}

IntersectionReport intersection_from(const json& j, const Representation& rep, const std::string& source) {
    IntersectionReport out;
    const auto& cosets = require(j, "cosets", source);
    const auto& subsets = require(j, "subsets", source);
    const auto& targets = require(j, "targets", source);
    const auto& res = require(j, "membership_residuals", source);
    const std::size_t m = cosets.size();
    if (subsets.size() != m || targets.size() != m || res.size() != m)
        bad_field(source, "intersection", "has inconsistent lengths");
    out.targets.resize(rep.dim(), static_cast<Eigen::Index>(m));
    for (std::size_t i = 0; i < m; ++i) {
        std::vector<Element> coset;
        for (const auto& l : cosets[i]) coset.push_back(element_by_label(rep, get_as<std::string>(l, "cosets", source), source));
        out.cosets.push_back(coset);
        std::vector<std::vector<int>> groups;
        for (const auto& s : subsets[i]) {
            auto idx = get_as<std::vector<int>>(s, "subsets", source);
            for (int& k : idx) --k;
            groups.push_back(idx);
        }
        out.subsets.push_back(groups);
        out.targets.col(static_cast<Eigen::Index>(i)) = vec_from(targets[i], rep.dim(), "targets", source);
        out.membership_residuals.push_back(get_as<std::vector<double>>(res[i], "membership_residuals", source));
    }
    out.targets_regular = get_as<bool>(require(j, "targets_regular", source), "targets_regular", source);
    out.regularity_deviation =
        get_as<double>(require(j, "regularity_deviation", source), "regularity_deviation", source);
    return out;
}

}  // namespace

std::string read_text_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) fail(ErrorCode::Io, "cannot open " + path);
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

void write_text_file(const std::string& path, const std::string& content) {
    std::ofstream out(path, std::ios::binary);
    if (!out) fail(ErrorCode::Io, "cannot write " + path);
    out << content;
    if (!out) fail(ErrorCode::Io, "write failed for " + path);
}

std::string representation_to_json(const Representation& rep) {
    const auto& group = rep.group();
    json mats = json::array();
    for (Element g = 0; g < rep.order(); ++g) {
        json m = json::array();
        const Mat& a = rep.matrix(g);
        for (int i = 0; i < rep.dim(); ++i)
            for (int k = 0; k < rep.dim(); ++k) m.push_back(a(i, k));
        mats.push_back(m);
    }
    json out = {{"order", rep.order()},
                {"mul", std::vector<int>(group.table().begin(), group.table().end())},
                {"labels", group.labels()},
                {"dim", rep.dim()},
                {"mats", mats}};
    return out.dump(2) + "\n";
}

Representation representation_from_json(const std::string& text, const std::string& source) {
    const json j = parse_json(text, source);
    const int r = get_as<int>(require(j, "order", source), "order", source);
    const int d = get_as<int>(require(j, "dim", source), "dim", source);
    if (r < 1) bad_field(source, "order", "must be positive");
    if (d < 1) bad_field(source, "dim", "must be positive");
    auto mul = get_as<std::vector<int>>(require(j, "mul", source), "mul", source);
    if (mul.size() != static_cast<std::size_t>(r) * r) bad_field(source, "mul", "must have order^2 entries");
    std::vector<std::string> labels;
    if (j.contains("labels")) labels = get_as<std::vector<std::string>>(j.at("labels"), "labels", source);
    const auto& mats_j = require(j, "mats", source);
    if (!mats_j.is_array() || static_cast<int>(mats_j.size()) != r)
        bad_field(source, "mats", "must hold one matrix per element");
    std::vector<Mat> mats;
    for (const auto& mj : mats_j) {
        const auto xs = get_as<std::vector<double>>(mj, "mats", source);
        if (xs.size() != static_cast<std::size_t>(d) * d) bad_field(source, "mats", "entries must be dim x dim");
        mats.push_back(Eigen::Map<const Eigen::Matrix<double, Eigen::Dynamic, Eigen::Dynamic, Eigen::RowMajor>>(
            xs.data(), d, d));
    }
    return Representation(FiniteGroup(std::move(mul), std::move(labels)), std::move(mats));
}

Configuration generate_points(int d, int count, std::uint64_t seed) {
    if (d < 1 || count < 1) fail(ErrorCode::InvalidParameter, "dimension and count must be positive");
    std::mt19937_64 rng(seed);
    std::normal_distribution<double> normal;
    Configuration c{Mat(d, count)};
    for (int j = 0; j < count; ++j)
        for (int i = 0; i < d; ++i) c.points(i, j) = normal(rng);
    return c;
}

std::string points_to_csv(const Configuration& config) {
    std::string out;
    for (int j = 0; j < config.count(); ++j) {
        for (int i = 0; i < config.dim(); ++i) {
            if (i) out += ',';
            out += fmt17(config.points(i, j));
        }
        out += '\n';
    }
    return out;
}

std::string points_to_json(const Configuration& config) {
    json pts = json::array();
    for (int j = 0; j < config.count(); ++j) pts.push_back(vec_json(config.points.col(j)));
    return json{{"points", pts}}.dump(2) + "\n";
}

Configuration points_from_text(const std::string& text, const std::string& source) {
    std::size_t first = text.find_first_not_of(" \t\r\n");
    if (first == std::string::npos) fail(ErrorCode::Parse, source + ": parse error at byte " + std::to_string(text.size() + 1) + ": no points");
    std::vector<std::vector<double>> rows;
    if (text[first] == '{' || text[first] == '[') {
        const json j = parse_json(text, source);
        const json& pts = j.is_object() ? require(j, "points", source) : j;
        rows = get_as<std::vector<std::vector<double>>>(pts, "points", source);
    } else {
        std::size_t pos = 0;
        while (pos < text.size()) {
            std::size_t eol = text.find('\n', pos);
            if (eol == std::string::npos) eol = text.size();
            std::size_t end = eol;
            if (end > pos && text[end - 1] == '\r') --end;
            if (text.find_first_not_of(" \t", pos) < end) {
                std::vector<double> row;
                std::size_t p = pos;
                while (true) {
                    while (p < end && (text[p] == ' ' || text[p] == '\t')) ++p;
                    double x = 0.0;
                    const char* b = text.data() + p;
                    if (p < end && text[p] == '+') ++b;
                    auto [ptr, ec] = std::from_chars(b, text.data() + end, x);
                    if (ec != std::errc() || !std::isfinite(x))
                        fail(ErrorCode::Parse, source + ": parse error at byte " + std::to_string(p + 1) + ": expected a number");
                    p = static_cast<std::size_t>(ptr - text.data());
                    row.push_back(x);
                    while (p < end && (text[p] == ' ' || text[p] == '\t')) ++p;
                    if (p == end) break;
                    if (text[p] != ',')
                        fail(ErrorCode::Parse, source + ": parse error at byte " + std::to_string(p + 1) + ": expected ','");
                    ++p;
                }
                if (!rows.empty() && row.size() != rows.front().size())
                    fail(ErrorCode::Parse, source + ": parse error at byte " + std::to_string(pos + 1) +
                                               ": row has " + std::to_string(row.size()) + " columns, expected " +
                                               std::to_string(rows.front().size()));
                rows.push_back(std::move(row));
            }
            pos = eol + 1;
        }
    }
    if (rows.empty() || rows.front().empty()) fail(ErrorCode::Parse, source + ": no points");
    const auto d = rows.front().size();
    Configuration c{Mat(static_cast<Eigen::Index>(d), static_cast<Eigen::Index>(rows.size()))};
    for (std::size_t j = 0; j < rows.size(); ++j) {
        if (rows[j].size() != d) fail(ErrorCode::Parse, source + ": point " + std::to_string(j + 1) + " has the wrong dimension");
        for (std::size_t i = 0; i < d; ++i) {
            if (!std::isfinite(rows[j][i])) fail(ErrorCode::Parse, source + ": non-finite coordinate");
            c.points(static_cast<Eigen::Index>(i), static_cast<Eigen::Index>(j)) = rows[j][i];
        }
    }
    return c;
}

Configuration read_points(const std::string& path) { return points_from_text(read_text_file(path), path); }

PartitionRun run_partition(const std::string& rep_key, const Representation& rep, const Configuration& config,
                           const SolverOptions& options) {
    PartitionRun run;
    run.rep_key = rep_key;
    run.r = rep.order();
    run.d = rep.dim();
    run.n_points = config.count();
    run.options = options;
    const TestMap tm = TestMap::build(rep, config, true);
    if (is_affinely_degenerate(config))
        run.warnings.push_back("points lie in an affine hyperplane; no full-dimensional orbit polytope can partition them");
    run.solver = solve_with_restarts(tm.classes(), options);
    if (!run.solver.converged) return run;
    run.partition = assemble(tm, rep, config, run.solver.selection, std::max(10 * options.tol, 1e-8));
    run.checks = verify(*run.partition, rep, config);
    if (!run.partition->free) run.warnings.push_back("orbit polytope is not free at this generator");
    if (!run.partition->full_dim) run.warnings.push_back("orbit polytope is not full-dimensional at this generator");
    if (!is_faithful(rep)) run.intersection = intersection_report(rep, config, *run.partition);
    return run;
}

std::string partition_to_json(const PartitionRun& run, const Representation& rep) {
    const auto& group = rep.group();
    json out;
    out["rep_key"] = run.rep_key;
    out["r"] = run.r;
    out["d"] = run.d;
    out["n_points"] = run.n_points;
    out["converged"] = run.solver.converged;
    if (run.partition) {
        const auto& p = *run.partition;
        json subsets = json::object(), weights = json::object(), witnesses = json::object();
        for (Element g = 0; g < rep.order(); ++g) {
            subsets[group.label(g)] = one_based(p.subsets[g]);
            weights[group.label(g)] = p.hull_weights[g];
            witnesses[group.label(g)] = vec_json(p.witnesses.col(g));
        }
        out["subsets"] = subsets;
        out["weights"] = weights;
        out["witnesses"] = witnesses;
        out["center"] = vec_json(p.center);
        out["generator"] = vec_json(p.generator);
        out["residual"] = p.residual;
        out["free"] = p.free;
        out["full_dim"] = p.full_dim;
        out["checks"] = check_json(run.checks);
    }
    json assignment = json::array();
    for (Element g : run.solver.selection.assignment) assignment.push_back(group.label(g));
    out["solver"] = {{"converged", run.solver.converged},
                     {"residual", run.solver.residual},
                     {"iterations", run.solver.iterations},
                     {"restarts_used", run.solver.restarts_used},
                     {"tol", run.options.tol},
                     {"max_iter", run.options.max_iter},
                     {"restarts", run.options.restarts},
                     {"seed", run.options.seed},
                     {"assignment", assignment},
                     {"selection_weights", run.solver.selection.weights}};
    out["warnings"] = run.warnings;
    if (run.intersection) out["intersection"] = intersection_json(*run.intersection, rep);
    return out.dump(2) + "\n";
}

PartitionRun partition_from_json(const std::string& text, const Representation& rep, const std::string& source) {
    const json j = parse_json(text, source);
    if (!j.is_object()) fail(ErrorCode::Parse, source + ": partition document must be a JSON object");
    PartitionRun run;
    run.rep_key = get_as<std::string>(require(j, "rep_key", source), "rep_key", source);
    run.r = get_as<int>(require(j, "r", source), "r", source);
    run.d = get_as<int>(require(j, "d", source), "d", source);
    run.n_points = get_as<int>(require(j, "n_points", source), "n_points", source);
    if (run.r != rep.order() || run.d != rep.dim())
        fail(ErrorCode::Parse, source + ": partition was computed for a different representation");

    const auto& s = require(j, "solver", source);
    run.solver.converged = get_as<bool>(require(s, "converged", source), "converged", source);
    run.solver.residual = get_as<double>(require(s, "residual", source), "residual", source);
    run.solver.iterations = get_as<int>(require(s, "iterations", source), "iterations", source);
    run.solver.restarts_used = get_as<int>(require(s, "restarts_used", source), "restarts_used", source);
    run.options.tol = get_as<double>(require(s, "tol", source), "tol", source);
    run.options.max_iter = get_as<int>(require(s, "max_iter", source), "max_iter", source);
    run.options.restarts = get_as<int>(require(s, "restarts", source), "restarts", source);
    run.options.seed = get_as<std::uint64_t>(require(s, "seed", source), "seed", source);
    for (const auto& l : require(s, "assignment", source))
        run.solver.selection.assignment.push_back(
            element_by_label(rep, get_as<std::string>(l, "assignment", source), source));
    run.solver.selection.weights =
        get_as<std::vector<double>>(require(s, "selection_weights", source), "selection_weights", source);
    run.warnings = get_as<std::vector<std::string>>(require(j, "warnings", source), "warnings", source);

    if (j.contains("subsets")) {
        OrbitPartition p;
        const int r = rep.order();
        p.subsets.assign(r, {});
        p.hull_weights.assign(r, {});
        p.witnesses = Mat::Zero(rep.dim(), r);
        std::vector<char> seen(r, 0);
        const auto& subsets = require(j, "subsets", source);
        const auto& weights = require(j, "weights", source);
        const auto& witnesses = require(j, "witnesses", source);
        if (!subsets.is_object()) bad_field(source, "subsets", "must be an object keyed by element label");
        for (const auto& [label, idx] : subsets.items()) {
            const Element g = element_by_label(rep, label, source);
            seen[g] = 1;
            auto v = get_as<std::vector<int>>(idx, "subsets", source);
            for (int& k : v) --k;
            p.subsets[g] = v;
            p.hull_weights[g] = get_as<std::vector<double>>(require(weights, label.c_str(), source), "weights", source);
            p.witnesses.col(g) = vec_from(require(witnesses, label.c_str(), source), rep.dim(), "witnesses", source);
        }
        for (Element g = 0; g < r; ++g)
            if (!seen[g]) bad_field(source, "subsets", "has no entry for element " + rep.group().label(g));
        p.center = vec_from(require(j, "center", source), rep.dim(), "center", source);
        p.generator = vec_from(require(j, "generator", source), rep.dim(), "generator", source);
        p.residual = get_as<double>(require(j, "residual", source), "residual", source);
        p.free = get_as<bool>(require(j, "free", source), "free", source);
        p.full_dim = get_as<bool>(require(j, "full_dim", source), "full_dim", source);
        run.partition = std::move(p);
        run.checks = checks_from(require(j, "checks", source), source);
    }
    if (j.contains("intersection")) run.intersection = intersection_from(j.at("intersection"), rep, source);
    return run;
}

std::string checks_to_json(const CheckList& checks) {
    return json{{"passed", checks.ok()}, {"checks", check_json(checks)}}.dump(2) + "\n";
}

OracleReport run_oracle(const Representation& rep, const Configuration& config, bool below_threshold,
                        const SolverOptions& options) {
    OracleReport out;
    out.below_threshold = below_threshold;
    out.n_points = config.count();
    const int n_req = required_N(rep.order(), rep.dim());
    if (below_threshold && config.count() >= n_req)
        fail(ErrorCode::PointCount, "below-threshold oracle requires fewer than " + std::to_string(n_req) + " points");
    const TestMap tm = TestMap::build(rep, config, !below_threshold);
    const auto bf = brute_force_solve(tm.classes());
    out.assignments = bf.assignments;
    out.brute_force_residual = bf.best.residual;
    out.brute_force_assignment = bf.best.selection.assignment;
    if (!below_threshold) {
        const auto piv = solve_with_restarts(tm.classes(), options);
        out.pivoting_residual = piv.residual;
        out.pivoting_converged = piv.converged;
    }
    return out;
}

std::string oracle_to_json(const OracleReport& report) {
    json out = {{"below_threshold", report.below_threshold},
                {"n_points", report.n_points},
                {"assignments", report.assignments},
                {"brute_force_residual", report.brute_force_residual},
                {"brute_force_assignment", report.brute_force_assignment}};
    if (report.pivoting_residual) {
        out["pivoting_residual"] = *report.pivoting_residual;
        out["pivoting_converged"] = *report.pivoting_converged;
        out["difference"] = std::abs(*report.pivoting_residual - report.brute_force_residual);
    }
    return out.dump(2) + "\n";
}

std::string symmetry_to_json(const SymmetryReport& report, const Representation& rep, const Vec& u) {
    json gram = json::array();
    for (Eigen::Index i = 0; i < report.gram.rows(); ++i) gram.push_back(vec_json(report.gram.row(i).transpose()));
    json gens = json::array();
    for (const auto& perm : report.osym_generators) {
        json p = json::array();
        for (Element g : perm) p.push_back(rep.group().label(g));
        gens.push_back(p);
    }
    json out = {{"u", vec_json(u)},
                {"osym_order", report.osym_order},
                {"order_saturated", report.order_saturated},
                {"observed_generic_order", report.osym_order},
                {"contains_left_regular", report.contains_left_regular},
                {"quantization", report.quantization},
                {"distinct_gram_values", report.distinct_values},
                {"osym_generators", gens},
                {"gram", gram}};
    return out.dump(2) + "\n";
}

std::string catalog_to_json(const std::vector<CatalogEntry>& entries) {
    json out = json::array();
    for (const auto& e : entries) {
        json item = {{"key", e.key},
                     {"r", e.r},
                     {"d", e.d},
                     {"N_bound", e.n_bound},
                     {"polytope_name", e.polytope_name},
                     {"expected_iso_order", nullptr},
                     {"faithful", e.faithful},
                     {"full_dimensional", e.full_dimensional}};
        if (e.expected_iso_order) item["expected_iso_order"] = *e.expected_iso_order;
        out.push_back(item);
    }
    return out.dump(2) + "\n";
}

std::string irreducibility_to_json(const Representation& rep, const std::string& key) {
    const double cn = character_norm(rep);
    const bool absolute = std::abs(cn - 1.0) <= 1e-8;
    json out = {{"rep_key", key},
                {"r", rep.order()},
                {"d", rep.dim()},
                {"character_norm", cn},
                {"absolutely_irreducible", absolute}};
    return out.dump(2) + "\n";
}

}  // namespace orbitpart
