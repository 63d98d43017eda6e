#include <doctest.h>

#include <jsurf/normal.hpp>

#include <algorithm>

#include "helpers.hpp"

using namespace jsurf;

namespace {

Triangulation fixture(const char* rel) { return Triangulation::parse(read_fixture(rel)); }

const NormalSurface& find_surface(const std::vector<NormalSurface>& fs,
                                  const std::vector<long>& coords) {
    for (const auto& s : fs)
        if (s.coords == coords) return s;
    REQUIRE(false);
    return fs.front();
}

}  // namespace

TEST_CASE("matching equations shape") {
    // single unglued tetrahedron: no interior faces, empty system
    Triangulation lone = Triangulation::parse("tet 0\n");
    auto M0 = matching_equations(lone);
    CHECK(M0.cols == 7);
    CHECK(M0.rows.empty());

    auto M1 = matching_equations(fixture("tri/solid_torus_1tet.tri"));
    CHECK(M1.cols == 7);
    CHECK(M1.rows.size() == 3);  // one interior face pair

    auto M2 = matching_equations(fixture("tri/solid_torus_2tet.tri"));
    CHECK(M2.cols == 14);
    CHECK(M2.rows.size() == 9);  // three interior face pairs
}

TEST_CASE("fundamental surfaces of the one-tetrahedron solid torus") {
    Triangulation T = fixture("tri/solid_torus_1tet.tri");
    auto M = matching_equations(T);
    auto fs = fundamental_surfaces(T, {});
    REQUIRE(fs.size() == 5);
    long admissible = std::count_if(fs.begin(), fs.end(),
                                    [](const NormalSurface& s) { return s.admissible; });
    CHECK(admissible == 4);
    for (const auto& s : fs) {
        CHECK_FALSE(s.is_zero());
        CHECK(M.solves(s.coords));
        CHECK(s.admissible == is_admissible(T, s.coords));
    }

    const auto& disc = find_surface(fs, {0, 0, 1, 1, 0, 0, 1});
    CHECK(euler_characteristic(T, disc) == 1);
    auto bd = boundary_data(T, disc);
    CHECK(bd.sheets == 1);
    CHECK(bd.boundary_count == 1);
    CHECK(bd.coherent);
    CHECK(bd.slope == Slope(0, 1));

    const auto& link = find_surface(fs, {1, 1, 1, 1, 0, 0, 0});
    CHECK(euler_characteristic(T, link) == 1);
    auto lbd = boundary_data(T, link);
    CHECK(lbd.boundary_count == 0);
    CHECK(lbd.trivial_curves == 1);
}

TEST_CASE("fundamental surfaces of the two-tetrahedron solid torus") {
    Triangulation T = fixture("tri/solid_torus_2tet.tri");
    auto M = matching_equations(T);
    auto fs = fundamental_surfaces(T, {});
    REQUIRE(fs.size() == 15);
    long admissible = std::count_if(fs.begin(), fs.end(),
                                    [](const NormalSurface& s) { return s.admissible; });
    CHECK(admissible == 7);
    for (const auto& s : fs) CHECK(M.solves(s.coords));

    struct Expect {
        std::vector<long> coords;
        long chi, sheets, boundary;
        Slope slope;
    };
    const Expect expected[] = {
        {{0, 0, 0, 0, 0, 1, 0, 0, 0, 0, 0, 0, 1, 0}, 0, 1, 1, Slope(-2, 1)},
        {{0, 0, 1, 1, 0, 0, 1, 0, 0, 1, 1, 0, 0, 1}, 1, 1, 1, Slope(0, 1)},
        {{1, 1, 0, 0, 1, 0, 0, 0, 0, 0, 0, 2, 0, 0}, -2, 2, 2, Slope(-1, 1)},
        {{1, 1, 0, 0, 1, 0, 0, 2, 2, 0, 0, 0, 0, 0}, 0, 2, 2, Slope(-3, 1)},
        {{1, 1, 1, 1, 0, 0, 0, 0, 0, 1, 1, 1, 0, 0}, 0, 2, 2, Slope(-1, 1)},
    };
    for (const auto& e : expected) {
        const auto& s = find_surface(fs, e.coords);
        CHECK(s.admissible);
        CHECK(euler_characteristic(T, s) == e.chi);
        auto bd = boundary_data(T, s);
        CHECK(bd.sheets == e.sheets);
        CHECK(bd.boundary_count == e.boundary);
        CHECK(bd.coherent);
        CHECK(bd.slope == e.slope);
    }

    // trivial-boundary pieces
    const auto& punctured = find_surface(fs, {1, 1, 0, 0, 1, 0, 0, 1, 1, 0, 0, 1, 0, 0});
    CHECK(euler_characteristic(T, punctured) == -1);
    CHECK(boundary_data(T, punctured).boundary_count == 0);
    const auto& link = find_surface(fs, {1, 1, 1, 1, 0, 0, 0, 1, 1, 1, 1, 0, 0, 0});
    CHECK(euler_characteristic(T, link) == 1);
    CHECK(boundary_data(T, link).trivial_curves == 1);
}

TEST_CASE("edge weights are class invariants") {
    Triangulation T = fixture("tri/solid_torus_2tet.tri");
    for (const auto& s : fundamental_surfaces(T, {})) {
        std::vector<long> weight(T.edge_class_count(), -1);
        for (int t = 0; t < T.tet_count(); ++t)
            for (int e = 0; e < 6; ++e) {
                long w = s.edge_weight(T, t, e);
                long& slot = weight[T.edge_class(t, e)];
                if (slot < 0)
                    slot = w;
                else
                    CHECK(slot == w);
            }
    }
}

TEST_CASE("haken sums add coordinates, euler characteristic and sheets") {
    Triangulation T = fixture("tri/solid_torus_2tet.tri");
    auto fs = fundamental_surfaces(T, {});
    auto M = matching_equations(T);
    int pairs = 0;
    for (size_t i = 0; i < fs.size(); ++i)
        for (size_t j = i; j < fs.size(); ++j) {
            if (!fs[i].admissible || !fs[j].admissible) continue;
            if (!compatible(fs[i], fs[j])) {
                CHECK_THROWS_WITH_AS(haken_sum(T, fs[i], fs[j]),
                                     "incompatible quadrilateral types", std::runtime_error);
                continue;
            }
            ++pairs;
            NormalSurface sum = haken_sum(T, fs[i], fs[j]);
            CHECK(sum.admissible);
            CHECK(M.solves(sum.coords));
            for (size_t k = 0; k < sum.coords.size(); ++k)
                CHECK(sum.coords[k] == fs[i].coords[k] + fs[j].coords[k]);
            CHECK(euler_characteristic(T, sum) ==
                  euler_characteristic(T, fs[i]) + euler_characteristic(T, fs[j]));
            auto bd = boundary_data(T, sum);
            CHECK(bd.sheets == boundary_data(T, fs[i]).sheets +
                                   boundary_data(T, fs[j]).sheets);
        }
    CHECK(pairs > 0);

    // doubling keeps the slope
    const auto& s2 = find_surface(fs, {1, 1, 0, 0, 1, 0, 0, 0, 0, 0, 0, 2, 0, 0});
    NormalSurface dbl = haken_sum(T, s2, s2);
    auto bd = boundary_data(T, dbl);
    CHECK(bd.slope == Slope(-1, 1));
    CHECK(bd.sheets == 4);
    CHECK(bd.boundary_count == 4);
}

TEST_CASE("incompatible quad types are detected") {
    Triangulation T = fixture("tri/solid_torus_2tet.tri");
    auto fs = fundamental_surfaces(T, {});
    const auto& quad0 = find_surface(fs, {1, 1, 0, 0, 1, 0, 0, 0, 0, 0, 0, 2, 0, 0});
    const auto& quad1 = find_surface(fs, {0, 0, 0, 0, 0, 1, 0, 0, 0, 0, 0, 0, 1, 0});
    CHECK_FALSE(compatible(quad0, quad1));
    CHECK(compatible(quad0, quad0));
}

TEST_CASE("degenerate inputs") {
    Triangulation T = fixture("tri/solid_torus_1tet.tri");
    NormalSurface zero = NormalSurface::from_coords(T, {0, 0, 0, 0, 0, 0, 0});
    CHECK(zero.is_zero());
    CHECK(zero.admissible);
    CHECK(euler_characteristic(T, zero) == 0);

    NormalSurface bad = NormalSurface::from_coords(T, {0, 0, 0, 0, 1, 1, 0});
    CHECK_FALSE(bad.admissible);
    CHECK_THROWS_WITH_AS(euler_characteristic(T, bad), "not an embedded surface",
                         std::runtime_error);
    CHECK_THROWS_AS(boundary_data(T, bad), std::runtime_error);
}

TEST_CASE("closed triangulations have closed surfaces") {
    Triangulation T = Triangulation::parse(
        "tet 0\n"
        "face 0 -> tet 0 perm 1230\n"
        "face 1 -> tet 0 perm 3012\n"
        "face 2 -> tet 0 perm 1230\n"
        "face 3 -> tet 0 perm 3012\n");
    auto fs = fundamental_surfaces(T, {});
    REQUIRE(fs.size() == 3);
    int admissible = 0;
    for (const auto& s : fs) {
        if (!s.admissible) continue;
        ++admissible;
        CHECK_THROWS_WITH_AS(boundary_data(T, s), "no boundary", std::runtime_error);
    }
    CHECK(admissible == 2);
    // the vertex link is a sphere
    const auto& link = find_surface(fs, {1, 1, 1, 1, 0, 0, 0});
    CHECK(euler_characteristic(T, link) == 2);
}

TEST_CASE("fundamental bases verify against brute force") {
    for (const char* fix : {"tri/solid_torus_1tet.tri", "tri/solid_torus_2tet.tri"}) {
        Triangulation T = fixture(fix);
        auto M = matching_equations(T);
        auto fs = fundamental_surfaces(T, {});
        std::vector<std::vector<long>> basis;
        for (const auto& s : fs) basis.push_back(s.coords);
        auto check = verify_basis(M, basis, 8);
        CHECK(check.all_solve);
        CHECK(check.minimal);
        CHECK(check.complete);
    }
}
