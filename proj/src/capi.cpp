#include "orbitpart/orbitpart.h"

#include <cstdlib>
#include <cstring>
#include <filesystem>
#include <new>
#include <string>

#include "orbitpart/catalog.hpp"
#include "orbitpart/error.hpp"
#include "orbitpart/io.hpp"
#include "orbitpart/render.hpp"

using namespace orbitpart;

struct op_rep {
    std::string key;
    Representation rep;
};

struct op_points {
    Configuration config;
};

struct op_partition {
    PartitionRun run;
};

namespace {

thread_local std::string g_last_error;

op_status status_for(ErrorCode code) {
    switch (code) {
        case ErrorCode::SizeGuard: return OP_ERR_SIZE_GUARD;
        case ErrorCode::NumericalFailure:
        case ErrorCode::Internal: return OP_ERR_INTERNAL;
        default: return OP_ERR_INPUT;
    }
}

template <class F>
op_status guarded(F&& body) {
    g_last_error.clear();
    try {
        return body();
    } catch (const Error& e) {
        g_last_error = e.what();
        return status_for(e.code());
    } catch (const std::bad_alloc&) {
        g_last_error = "out of memory";
    } catch (const std::exception& e) {
        g_last_error = e.what();
    } catch (...) {
        g_last_error = "unknown failure";
    }
    return OP_ERR_INTERNAL;
}

char* dup(const std::string& s) {
    char* out = static_cast<char*>(std::malloc(s.size() + 1));
    if (!out) throw std::bad_alloc();
    std::memcpy(out, s.c_str(), s.size() + 1);
    return out;
}

void need(const void* p, const char* what) {
    if (!p) fail(ErrorCode::InvalidParameter, std::string(what) + " must not be null");
}

SolverOptions to_options(const op_solver_options* o) {
    SolverOptions s;
    if (!o) return s;
    if (!(o->tol > 0.0)) fail(ErrorCode::InvalidParameter, "tol must be positive");
    if (o->restarts < 1) fail(ErrorCode::InvalidParameter, "restarts must be at least 1");
    if (o->max_iter < 1) fail(ErrorCode::InvalidParameter, "max_iter must be at least 1");
    if (o->threads < 0) fail(ErrorCode::InvalidParameter, "threads must be nonnegative");
    s.tol = o->tol;
    s.restarts = o->restarts;
    s.max_iter = o->max_iter;
    s.seed = o->seed;
    s.threads = o->threads;
    return s;
}

const OrbitPartition& partition_of(const op_partition* p) {
    if (!p->run.partition) fail(ErrorCode::NotAZero, "partition document holds no partition (solver did not converge)");
    return *p->run.partition;
}

}  // namespace

extern "C" {

const char* op_version(void) { return "0.1.0"; }

const char* op_last_error(void) { return g_last_error.c_str(); }

void op_string_free(char* s) { std::free(s); }

void op_solver_options_default(op_solver_options* opts) {
    if (!opts) return;
    const SolverOptions s;
    opts->tol = s.tol;
    opts->restarts = s.restarts;
    opts->max_iter = s.max_iter;
    opts->seed = s.seed;
    opts->threads = s.threads;
}

op_status op_catalog_list_json(char** out) {
    return guarded([&] {
        need(out, "out");
        std::vector<CatalogEntry> entries;
        for (const auto& k : catalog_keys()) entries.push_back(catalog_entry(k));
        *out = dup(catalog_to_json(entries));
        return OP_OK;
    });
}

op_status op_rep_create(const char* key, op_rep** out) {
    return guarded([&] {
        need(key, "key");
        need(out, "out");
        *out = nullptr;
        const std::string k = key;
        const bool is_file = k.size() > 5 && k.compare(k.size() - 5, 5, ".json") == 0;
        if (is_file) {
            if (!std::filesystem::exists(k)) fail(ErrorCode::Io, "representation file not found: " + k);
            *out = new op_rep{k, representation_from_json(read_text_file(k), k)};
        } else {
            *out = new op_rep{k, catalog_entry(k).rep};
        }
        return OP_OK;
    });
}

void op_rep_free(op_rep* rep) { delete rep; }

op_status op_rep_info(const op_rep* rep, int* order, int* dim, int* required_points) {
    return guarded([&] {
        need(rep, "rep");
        if (order) *order = rep->rep.order();
        if (dim) *dim = rep->rep.dim();
        if (required_points) *required_points = rep->rep.order() >= 3 ? required_N(rep->rep.order(), rep->rep.dim()) : 0;
        return OP_OK;
    });
}

op_status op_rep_to_json(const op_rep* rep, char** out) {
    return guarded([&] {
        need(rep, "rep");
        need(out, "out");
        *out = dup(representation_to_json(rep->rep));
        return OP_OK;
    });
}

op_status op_points_generate(const op_rep* rep, uint64_t seed, int count, op_points** out) {
    return guarded([&] {
        need(rep, "rep");
        need(out, "out");
        *out = nullptr;
        if (count < 0) fail(ErrorCode::InvalidParameter, "count must be nonnegative");
        const int n = count > 0 ? count : required_N(rep->rep.order(), rep->rep.dim());
        *out = new op_points{generate_points(rep->rep.dim(), n, seed)};
        return OP_OK;
    });
}

op_status op_points_read(const char* path, op_points** out) {
    return guarded([&] {
        need(path, "path");
        need(out, "out");
        *out = nullptr;
        *out = new op_points{read_points(path)};
        return OP_OK;
    });
}

op_status op_points_to_csv(const op_points* points, char** out) {
    return guarded([&] {
        need(points, "points");
        need(out, "out");
        *out = dup(points_to_csv(points->config));
        return OP_OK;
    });
}

op_status op_points_info(const op_points* points, int* count, int* dim) {
    return guarded([&] {
        need(points, "points");
        if (count) *count = points->config.count();
        if (dim) *dim = points->config.dim();
        return OP_OK;
    });
}

void op_points_free(op_points* points) { delete points; }

op_status op_partition_compute(const op_rep* rep, const op_points* points, const op_solver_options* opts,
                               op_partition** out) {
    return guarded([&] {
        need(rep, "rep");
        need(points, "points");
        need(out, "out");
        *out = nullptr;
        auto run = run_partition(rep->key, rep->rep, points->config, to_options(opts));
        const bool converged = run.solver.converged;
        *out = new op_partition{std::move(run)};
        if (!converged) {
            g_last_error = "pivoting did not converge (best residual " + std::to_string((*out)->run.solver.residual) + ")";
            return OP_ERR_NOT_CONVERGED;
        }
        return OP_OK;
    });
}

op_status op_partition_read(const op_rep* rep, const char* path, op_partition** out) {
    return guarded([&] {
        need(rep, "rep");
        need(path, "path");
        need(out, "out");
        *out = nullptr;
        *out = new op_partition{partition_from_json(read_text_file(path), rep->rep, path)};
        return OP_OK;
    });
}

op_status op_partition_to_json(const op_rep* rep, const op_partition* partition, char** out) {
    return guarded([&] {
        need(rep, "rep");
        need(partition, "partition");
        need(out, "out");
        *out = dup(partition_to_json(partition->run, rep->rep));
        return OP_OK;
    });
}

void op_partition_free(op_partition* partition) { delete partition; }

op_status op_verify_json(const op_rep* rep, const op_points* points, const op_partition* partition, double tol,
                         char** out, int* passed) {
    return guarded([&] {
        need(rep, "rep");
        need(points, "points");
        need(partition, "partition");
        need(out, "out");
        if (!(tol > 0.0)) fail(ErrorCode::InvalidParameter, "tol must be positive");
        const auto checks = verify(partition_of(partition), rep->rep, points->config, tol);
        *out = dup(checks_to_json(checks));
        if (passed) *passed = checks.ok() ? 1 : 0;
        return OP_OK;
    });
}

op_status op_oracle_json(const op_rep* rep, const op_points* points, int below_threshold,
                         const op_solver_options* opts, char** out) {
    return guarded([&] {
        need(rep, "rep");
        need(points, "points");
        need(out, "out");
        *out = dup(oracle_to_json(run_oracle(rep->rep, points->config, below_threshold != 0, to_options(opts))));
        return OP_OK;
    });
}

op_status op_symmetry_json(const op_rep* rep, const double* u, int len, double quantization, char** out) {
    return guarded([&] {
        need(rep, "rep");
        need(u, "u");
        need(out, "out");
        if (len != rep->rep.dim()) fail(ErrorCode::InvalidParameter, "u must have " + std::to_string(rep->rep.dim()) + " coordinates");
        if (!(quantization > 0.0)) fail(ErrorCode::InvalidParameter, "quantization must be positive");
        const Vec v = Eigen::Map<const Vec>(u, len);
        *out = dup(symmetry_to_json(osym(rep->rep, v, quantization), rep->rep, v));
        return OP_OK;
    });
}

op_status op_irreducibility_json(const op_rep* rep, char** out) {
    return guarded([&] {
        need(rep, "rep");
        need(out, "out");
        *out = dup(irreducibility_to_json(rep->rep, rep->key));
        return OP_OK;
    });
}

op_status op_render(const op_points* points, const op_partition* partition, const int* projection, char** out,
                    const char** format) {
    return guarded([&] {
        need(points, "points");
        need(partition, "partition");
        need(out, "out");
        std::optional<std::array<int, 3>> proj;
        if (projection) proj = std::array<int, 3>{projection[0], projection[1], projection[2]};
        const auto& p = partition_of(partition);
        if (p.witnesses.rows() != points->config.dim())
            fail(ErrorCode::InvalidParameter, "points and partition have different dimensions");
        if (p.subsets.size() != static_cast<std::size_t>(partition->run.r))
            fail(ErrorCode::InvalidParameter, "partition does not match representation");
        for (const auto& s : p.subsets)
            for (int j : s)
                if (j < 0 || j >= points->config.count())
                    fail(ErrorCode::InvalidParameter, "partition refers to point " + std::to_string(j + 1) +
                                                          " but only " + std::to_string(points->config.count()) +
                                                          " points were given");
        auto r = render(points->config, p, proj);
        *out = dup(r.content);
        if (format) *format = r.format == "svg" ? "svg" : "obj";
        return OP_OK;
    });
}

}  // extern "C"
