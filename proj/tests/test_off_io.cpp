#include <doctest.h>

#include <cstdio>
#include <random>
#include <sstream>
#include <string>

#include "support/fixtures.hpp"

using namespace fixtures;
using hasse::load_off;
using hasse::OffParseError;
using hasse::write_off;

namespace {

const char* kTetbOff =
    "OFF\n"
    "4 4 0\n"
    "0 0 0\n"
    "1 0 0\n"
    "0 1 0\n"
    "0 0 1\n"
    "3 0 1 2\n"
    "3 0 1 3\n"
    "3 0 2 3\n"
    "3 1 2 3\n";

std::string write_to_string(const SurfaceMesh& m) {
    std::ostringstream out;
    write_off(m, out);
    return out.str();
}

} // namespace

TEST_CASE("loading a tetrahedron boundary") {
    std::istringstream in(kTetbOff);
    auto m = load_off(in);
    CHECK(m.counts().levels == std::vector<std::size_t>{4, 6, 4});
    CHECK(m.get_simplex<0>(SimplexName{2})->data().position == hasse::Vec3{0, 1, 0});
    CHECK(m.contains({0, 1, 2}));
    CHECK(validate(m).empty());
}

TEST_CASE("write then load reproduces names and positions") {
    std::istringstream in(kTetbOff);
    auto m = load_off(in);
    const std::string first = write_to_string(m);

    std::istringstream back(first);
    auto m2 = load_off(back);
    CHECK(all_names(m2) == all_names(m));
    for (auto v : m.level<0>()) {
        auto v2 = m2.get_simplex<0>(v.name());
        REQUIRE(bool(v2));
        CHECK(v2->data().position == v.data().position);
    }
    CHECK(write_to_string(m2) == first); // byte-stable
}

TEST_CASE("awkward coordinates survive the round trip exactly") {
    SurfaceMesh m;
    m.insert<0>(SimplexName{0}, hasse::Vertex{{0.1, -1.0 / 3.0, 1e-17}});
    m.insert<0>(SimplexName{1}, hasse::Vertex{{1e300, -2.5e-300, 12345.6789012345678}});
    m.insert<0>(SimplexName{2}, hasse::Vertex{{-0.0, 3.0, 7.0}});
    m.insert<2>(SimplexName{0, 1, 2});

    std::istringstream back(write_to_string(m));
    auto m2 = load_off(back);
    for (auto v : m.level<0>()) {
        auto v2 = m2.get_simplex<0>(v.name());
        CHECK(v2->data().position == v.data().position);
    }
}

TEST_CASE("vertices are written in key order, faces in name order") {
    SurfaceMesh a = make_hex_mesh();
    SurfaceMesh b;
    // same mesh, different insertion history
    auto facets = hex_facets();
    std::reverse(facets.begin(), facets.end());
    for (const auto& f : facets) b.insert<2>(f);
    for (auto v : a.level<0>())
        b.get_simplex<0>(v.name())->data().position = v.data().position;
    CHECK(write_to_string(a) == write_to_string(b));
}

TEST_CASE("blank lines, comments, and CRLF are tolerated") {
    std::istringstream in("OFF\r\n# a comment\n\n3 1 0\r\n0 0 0\n1 0 0\n0 1 0\n3 0 1 2\n");
    auto m = load_off(in);
    CHECK(m.counts().levels == std::vector<std::size_t>{3, 3, 1});
}

TEST_CASE("extra per-vertex fields are ignored") {
    std::istringstream in("OFF\n3 1 0\n0 0 0 255 0 0\n1 0 0 0 255 0\n0 1 0 0 0 255\n3 0 1 2\n");
    auto m = load_off(in);
    CHECK(m.get_simplex<0>(SimplexName{1})->data().position == hasse::Vec3{1, 0, 0});
}

TEST_CASE("an empty OFF file is valid") {
    std::istringstream in("OFF\n0 0 0\n");
    auto m = load_off(in);
    CHECK(m.simplex_count() == 0);
}

TEST_CASE("parse errors carry the offending line number") {
    SUBCASE("quad faces are unsupported") {
        std::istringstream in("OFF\n4 1 0\n0 0 0\n1 0 0\n0 1 0\n0 0 1\n4 0 1 2 3\n");
        CHECK_THROWS_AS(load_off(in), OffParseError);
        std::istringstream again("OFF\n4 1 0\n0 0 0\n1 0 0\n0 1 0\n0 0 1\n4 0 1 2 3\n");
        try {
            load_off(again);
        } catch (const OffParseError& e) {
            CHECK(e.line() == 7);
        }
    }
    SUBCASE("face indices must be in range") {
        std::istringstream in("OFF\n4 2 0\n0 0 0\n1 0 0\n0 1 0\n0 0 1\n3 0 1 2\n3 0 1 9\n");
        try {
            load_off(in);
            FAIL("expected a parse error");
        } catch (const OffParseError& e) {
            CHECK(e.line() == 8);
        }
    }
    SUBCASE("missing header") {
        std::istringstream in("3 1 0\n0 0 0\n1 0 0\n0 1 0\n3 0 1 2\n");
        CHECK_THROWS_AS(load_off(in), OffParseError);
    }
    SUBCASE("short counts line") {
        std::istringstream in("OFF\n3 1\n");
        CHECK_THROWS_AS(load_off(in), OffParseError);
    }
    SUBCASE("truncated vertex block") {
        std::istringstream in("OFF\n3 1 0\n0 0 0\n");
        CHECK_THROWS_AS(load_off(in), OffParseError);
    }
    SUBCASE("repeated vertices in a face") {
        std::istringstream in("OFF\n3 1 0\n0 0 0\n1 0 0\n0 1 0\n3 0 0 1\n");
        try {
            load_off(in);
            FAIL("expected a parse error");
        } catch (const OffParseError& e) {
            CHECK(e.line() == 6);
        }
    }
    SUBCASE("streams with windows line endings still report lines") {
        std::istringstream in("OFF\r\n3 1 0\r\n0 0 0\r\nx y z\r\n0 1 0\r\n3 0 1 2\r\n");
        try {
            load_off(in);
            FAIL("expected a parse error");
        } catch (const OffParseError& e) {
            CHECK(e.line() == 4);
        }
    }
}

TEST_CASE("path-based IO round-trips through a file") {
    auto m = make_tetb_mesh();
    const std::string path = "roundtrip_test.off";
    write_off(m, path);
    auto m2 = load_off(path);
    CHECK(all_names(m2).size() == all_names(m).size());
    std::remove(path.c_str());
    CHECK_THROWS_AS(load_off("does_not_exist.off"), std::runtime_error);
}
