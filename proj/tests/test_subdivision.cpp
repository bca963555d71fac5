#include <catch2/catch_amalgamated.hpp>

#include "dualcx/builders.hpp"
#include "dualcx/fundamental_group.hpp"
#include "dualcx/homology.hpp"
#include "dualcx/simplicial_complex.hpp"
#include "dualcx/subdivision.hpp"
#include "fixtures.hpp"

using namespace dualcx;

TEST_CASE("subdivision of an edge is a path of two edges", "[subdivision]") {
    auto edge = to_delta(fixtures::from_facets(2, {{0, 1}}));
    auto bd = barycentric_delta(edge);
    REQUIRE(validate(bd).ok);
    REQUIRE(bd.cell_count(0) == 3);
    REQUIRE(bd.cell_count(1) == 2);
    REQUIRE(betti(bd) == std::vector<int>{1, 0});
}

TEST_CASE("subdivision of a triangle has 6 triangles", "[subdivision]") {
    auto tri = to_delta(fixtures::from_facets(3, {{0, 1, 2}}));
    auto bd = barycentric_delta(tri);
    REQUIRE(validate(bd).ok);
    REQUIRE(bd.cell_count(0) == 7);
    REQUIRE(bd.cell_count(1) == 12);
    REQUIRE(bd.cell_count(2) == 6);
    REQUIRE(euler_characteristic(bd) == 1);
}

TEST_CASE("subdivision map sends cells to vertices by dimension order", "[subdivision]") {
    auto kx = simplex_boundary(3);
    auto [sc, sm] = barycentric(kx);
    REQUIRE(sc.vertex_count() == kx.cell_count());
    for (int d = 0; d <= kx.top_dim(); ++d)
        for (int i = 0; i < static_cast<int>(kx.cells[d].size()); ++i) {
            int v = sm.vertex_for({d, i});
            REQUIRE(sc.vertex_origins[v] == CellId{d, i});
        }
}

TEST_CASE("subdivision handles repeated faces of one cell", "[subdivision]") {
    // 2-gon: two vertices joined by two parallel edges
    DeltaComplex two_gon;
    two_gon.cells.resize(2);
    two_gon.cells[0] = {Cell{}, Cell{}};
    two_gon.cells[1] = {Cell{{1, 0}, "a"}, Cell{{1, 0}, "b"}};
    REQUIRE(validate(two_gon).ok);
    auto bd = barycentric_delta(two_gon);
    REQUIRE(validate(bd).ok);
    REQUIRE(bd.cell_count(0) == 4);
    REQUIRE(bd.cell_count(1) == 4);
    REQUIRE(betti(bd) == std::vector<int>{1, 1});
}

TEST_CASE("subdivision invariance on the corpus", "[subdivision]") {
    for (auto kx : {simplex_boundary(4), crosspolytope_boundary(3), fixtures::rp2_6(),
                    fixtures::torus_7()}) {
        auto bd = barycentric_delta(kx);
        REQUIRE(validate(bd).ok);
        REQUIRE(betti(bd) == betti(kx));
        REQUIRE(integral_homology(bd) == integral_homology(kx));
        REQUIRE(euler_characteristic(bd) == euler_characteristic(kx));
    }
}

TEST_CASE("subdivision invariance on seeded random complexes", "[subdivision]") {
    for (std::uint64_t seed = 1; seed <= 20; ++seed) {
        auto kx = fixtures::random_complex(seed, 50);
        CAPTURE(seed);
        REQUIRE(validate(kx).ok);
        auto bd = barycentric_delta(kx);
        REQUIRE(validate(bd).ok);
        REQUIRE(betti(bd) == betti(kx));
        REQUIRE(integral_homology(bd) == integral_homology(kx));
        REQUIRE(euler_characteristic(bd) == euler_characteristic(kx));
        auto ab1 = abelianization(tietze_simplify(presentation(kx)));
        auto ab2 = abelianization(tietze_simplify(presentation(bd)));
        REQUIRE(ab1.rank == ab2.rank);
        REQUIRE(ab1.torsion == ab2.torsion);
    }
}

TEST_CASE("double subdivision stays invariant", "[subdivision]") {
    auto kx = fixtures::rp2_6();
    auto bd2 = barycentric_delta(barycentric_delta(kx));
    REQUIRE(validate(bd2).ok);
    REQUIRE(integral_homology(bd2) == integral_homology(kx));
}

TEST_CASE("link of a vertex in a sphere is a sphere one dimension down", "[subdivision]") {
    auto kx = simplex_boundary(4);  // S^2
    auto lk = to_delta(link(kx, {0, 0}));
    REQUIRE(validate(lk).ok);
    REQUIRE(betti(lk) == std::vector<int>{1, 1});  // S^1
    auto lk3 = to_delta(link(simplex_boundary(5), {0, 0}));
    REQUIRE(betti(lk3) == std::vector<int>{1, 0, 1});  // S^2
}
