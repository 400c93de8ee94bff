#include <doctest.h>

#include <sstream>
#include <string>

#include "orbitpart/catalog.hpp"
#include "orbitpart/error.hpp"
#include "orbitpart/render.hpp"
#include "support.hpp"

using namespace orbitpart;

namespace {

OrbitPartition partition_for(const CatalogEntry& e, Configuration& c) {
    auto s = testing::solve_entry(e, 5);
    REQUIRE(s.result.converged);
    c = s.config;
    return assemble(s.tm, e.rep, s.config, s.result.selection);
}

int count_prefix(const std::string& text, const std::string& prefix) {
    std::istringstream in(text);
    std::string line;
    int n = 0;
    while (std::getline(in, line))
        if (line.rfind(prefix, 0) == 0) ++n;
    return n;
}

}  // namespace

TEST_SUITE("render") {

TEST_CASE("planar partitions render as svg") {
    Configuration c;
    const auto p = partition_for(cyclic_rotation(5), c);
    const auto out = render(c, p);
    CHECK(out.format == "svg");
    CHECK(out.content.rfind("<svg", 0) == 0);
    CHECK(out.content.find("viewBox=\"0 0 800 800\"") != std::string::npos);
    CHECK(out.content.find("</svg>") != std::string::npos);
}

TEST_CASE("spatial partitions render as obj") {
    Configuration c;
    const auto e = catalog_entry("antiprism:3");
    const auto p = partition_for(e, c);
    const auto out = render(c, p);
    CHECK(out.format == "obj");
    CHECK(count_prefix(out.content, "v ") == e.n_bound + e.r);
    CHECK(count_prefix(out.content, "g subset_") == e.r);
    // octahedron has 12 edges
    const auto pos = out.content.find("g witness");
    REQUIRE(pos != std::string::npos);
    CHECK(count_prefix(out.content.substr(pos), "l ") == 12);
}

TEST_CASE("higher dimensions need a projection") {
    Configuration c;
    const auto p = partition_for(catalog_entry("q8"), c);
    try {
        render(c, p);
        FAIL("expected an error");
    } catch (const Error& err) {
        CHECK(err.code() == ErrorCode::RenderUnsupported);
    }
    const auto out = render(c, p, std::array<int, 3>{0, 1, 3});
    CHECK(out.format == "obj");
    CHECK(count_prefix(out.content, "v ") == 32 + 8);
    CHECK_THROWS_AS(render(c, p, std::array<int, 3>{0, 1, 4}), Error);
}

}  // TEST_SUITE
