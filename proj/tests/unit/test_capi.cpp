#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cstring>
#include <string>

#include "orbitpart/orbitpart.h"

namespace {

std::string take(char* s) {
    std::string out = s ? s : "";
    op_string_free(s);
    return out;
}

}  // namespace

TEST_SUITE("capi") {

TEST_CASE("version and catalog") {
    CHECK(std::strlen(op_version()) > 0);
    char* list = nullptr;
    REQUIRE(op_catalog_list_json(&list) == OP_OK);
    CHECK(take(list).find("\"binary_icosahedral\"") != std::string::npos);
}

TEST_CASE("representation handles") {
    op_rep* rep = nullptr;
    REQUIRE(op_rep_create("prism:3", &rep) == OP_OK);
    int order = 0, dim = 0, n = 0;
    REQUIRE(op_rep_info(rep, &order, &dim, &n) == OP_OK);
    CHECK(order == 6);
    CHECK(dim == 3);
    CHECK(n == 18);
    char* json = nullptr;
    REQUIRE(op_rep_to_json(rep, &json) == OP_OK);
    CHECK(take(json).find("\"mats\"") != std::string::npos);
    op_rep_free(rep);

    op_rep* bad = nullptr;
    CHECK(op_rep_create("nope", &bad) == OP_ERR_INPUT);
    CHECK(bad == nullptr);
    CHECK(std::strlen(op_last_error()) > 0);
    CHECK(op_rep_create(nullptr, &bad) == OP_ERR_INPUT);
    op_rep_free(nullptr);
}

TEST_CASE("end to end through the handles") {
    op_rep* rep = nullptr;
    REQUIRE(op_rep_create("cyclic:4", &rep) == OP_OK);
    op_points* pts = nullptr;
    REQUIRE(op_points_generate(rep, 11, 0, &pts) == OP_OK);
    int count = 0, dim = 0;
    REQUIRE(op_points_info(pts, &count, &dim) == OP_OK);
    CHECK(count == 8);
    CHECK(dim == 2);

    op_solver_options opts;
    op_solver_options_default(&opts);
    CHECK(opts.tol == 1e-9);
    opts.seed = 11;
    op_partition* part = nullptr;
    REQUIRE(op_partition_compute(rep, pts, &opts, &part) == OP_OK);
    char* json = nullptr;
    REQUIRE(op_partition_to_json(rep, part, &json) == OP_OK);
    CHECK(take(json).find("\"converged\": true") != std::string::npos);

    char* report = nullptr;
    int passed = 0;
    REQUIRE(op_verify_json(rep, pts, part, 1e-8, &report, &passed) == OP_OK);
    CHECK(passed == 1);
    take(report);

    char* svg = nullptr;
    const char* format = nullptr;
    REQUIRE(op_render(pts, part, nullptr, &svg, &format) == OP_OK);
    CHECK(std::string(format) == "svg");
    CHECK(take(svg).rfind("<svg", 0) == 0);

    op_partition_free(part);
    op_points_free(pts);
    op_rep_free(rep);
}

TEST_CASE("status codes") {
    op_rep* rep = nullptr;
    REQUIRE(op_rep_create("cyclic:8", &rep) == OP_OK);
    op_points* pts = nullptr;
    REQUIRE(op_points_generate(rep, 1, 0, &pts) == OP_OK);

    op_solver_options opts;
    op_solver_options_default(&opts);
    char* out = nullptr;
    CHECK(op_oracle_json(rep, pts, 0, &opts, &out) == OP_ERR_SIZE_GUARD);
    CHECK(out == nullptr);

    opts.tol = 1e-300;
    opts.restarts = 1;
    op_partition* part = nullptr;
    CHECK(op_partition_compute(rep, pts, &opts, &part) == OP_ERR_NOT_CONVERGED);
    CHECK(part != nullptr);
    op_partition_free(part);

    opts.tol = -1.0;
    part = nullptr;
    CHECK(op_partition_compute(rep, pts, &opts, &part) == OP_ERR_INPUT);

    op_rep* other = nullptr;
    REQUIRE(op_rep_create("cyclic:4", &other) == OP_OK);
    op_solver_options_default(&opts);
    CHECK(op_partition_compute(other, pts, &opts, &part) == OP_ERR_INPUT);
    CHECK(std::string(op_last_error()).find("requires 8 points") != std::string::npos);

    const double u[2] = {1.0, 0.0};
    REQUIRE(op_symmetry_json(other, u, 2, 1e-6, &out) == OP_OK);
    CHECK(take(out).find("\"osym_order\": 8") != std::string::npos);
    CHECK(op_symmetry_json(other, u, 1, 1e-6, &out) == OP_ERR_INPUT);

    op_rep_free(other);
    op_points_free(pts);
    op_rep_free(rep);
}

}  // TEST_SUITE
