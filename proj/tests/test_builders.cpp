#include <catch2/catch_amalgamated.hpp>

#include "dualcx/builders.hpp"
#include "dualcx/homology.hpp"
#include "fixtures.hpp"

using namespace dualcx;

namespace {

StratificationData triangle_strata() {
    StratificationData data;
    data.divisors = {"D0", "D1", "D2"};
    data.strata = {
        {{"D0"}, "v0", {}},
        {{"D1"}, "v1", {}},
        {{"D2"}, "v2", {}},
        {{"D0", "D1"}, "e01", {{"D0", "v1"}, {"D1", "v0"}}},
        {{"D0", "D2"}, "e02", {{"D0", "v2"}, {"D2", "v0"}}},
        {{"D1", "D2"}, "e12", {{"D1", "v2"}, {"D2", "v1"}}},
        {{"D0", "D1", "D2"}, "t", {{"D0", "e12"}, {"D1", "e02"}, {"D2", "e01"}}},
    };
    return data;
}

}  // namespace

TEST_CASE("stratification of a triple point builds a triangle", "[builders]") {
    auto k = from_stratification(triangle_strata());
    REQUIRE(validate(k).ok);
    REQUIRE(k.cell_count(0) == 3);
    REQUIRE(k.cell_count(1) == 3);
    REQUIRE(k.cell_count(2) == 1);
    REQUIRE(strata_cochain_dims(triangle_strata()) == std::vector<int>{3, 3, 1});
}

TEST_CASE("stratification errors are specific", "[builders]") {
    auto base = triangle_strata();

    auto dup = base;
    dup.strata[1].id = "v0";
    REQUIRE_THROWS_AS(from_stratification(dup), StratificationError);

    auto unknown = base;
    unknown.strata[3].labels = {"D0", "D9"};
    REQUIRE_THROWS_AS(from_stratification(unknown), StratificationError);

    auto missing = base;
    missing.strata[6].facets.erase("D1");
    REQUIRE_THROWS_AS(from_stratification(missing), StratificationError);

    auto mismatch = base;
    mismatch.strata[6].facets["D0"] = "e01";  // wrong label set
    REQUIRE_THROWS_AS(from_stratification(mismatch), StratificationError);

    auto extraneous = base;
    extraneous.strata[3].facets["D2"] = "v0";
    REQUIRE_THROWS_AS(from_stratification(extraneous), StratificationError);

    auto no_vertex = base;
    no_vertex.divisors.push_back("D3");
    REQUIRE_THROWS_AS(from_stratification(no_vertex), StratificationError);
}

TEST_CASE("stratification round-trips through export", "[builders]") {
    auto k = from_stratification(triangle_strata());
    auto k2 = from_stratification(to_stratification(k));
    REQUIRE(k2.cell_count(0) == k.cell_count(0));
    REQUIRE(k2.cell_count(1) == k.cell_count(1));
    REQUIRE(k2.cell_count(2) == k.cell_count(2));
    REQUIRE(betti(k2) == betti(k));
}

TEST_CASE("simplex boundary has binomial cell counts and sphere Betti", "[builders]") {
    auto k = simplex_boundary(5);
    REQUIRE(validate(k).ok);
    REQUIRE(k.cell_count(0) == 5);
    REQUIRE(k.cell_count(1) == 10);
    REQUIRE(k.cell_count(2) == 10);
    REQUIRE(k.cell_count(3) == 5);
    REQUIRE(betti(k) == std::vector<int>{1, 0, 0, 1});
    REQUIRE(betti(simplex_boundary(6)) == std::vector<int>{1, 0, 0, 0, 1});
    REQUIRE(betti(simplex_boundary(2)) == std::vector<int>{2});
    REQUIRE_THROWS(simplex_boundary(1));
}

TEST_CASE("crosspolytope boundary cell counts and Betti", "[builders]") {
    auto k = crosspolytope_boundary(3);  // octahedron
    REQUIRE(validate(k).ok);
    REQUIRE(k.cell_count(0) == 6);
    REQUIRE(k.cell_count(1) == 12);
    REQUIRE(k.cell_count(2) == 8);
    REQUIRE(betti(k) == std::vector<int>{1, 0, 1});
    REQUIRE(betti(crosspolytope_boundary(1)) == std::vector<int>{2});
    REQUIRE(betti(crosspolytope_boundary(4)) == std::vector<int>{1, 0, 0, 1});
}

TEST_CASE("join is associative on cell counts and has the empty unit", "[builders]") {
    auto a = simplex_boundary(3);
    DeltaComplex empty;
    REQUIRE(join(a, empty).cell_count() == a.cell_count());
    REQUIRE(join(empty, a).cell_count() == a.cell_count());

    auto b = sphere0();
    auto left = join(join(a, b), b);
    auto right = join(a, join(b, b));
    for (int d = 0; d <= left.top_dim(); ++d)
        REQUIRE(left.cell_count(d) == right.cell_count(d));
    REQUIRE(validate(left).ok);
}

TEST_CASE("join of spheres is a sphere", "[builders]") {
    auto s3 = join(simplex_boundary(3), simplex_boundary(3));  // S^1 * S^1
    REQUIRE(validate(s3).ok);
    REQUIRE(betti(s3) == std::vector<int>{1, 0, 0, 1});
    auto s1 = join(sphere0(), sphere0());
    REQUIRE(betti(s1) == std::vector<int>{1, 1});
}

TEST_CASE("cone adds the apex and kills homology", "[builders]") {
    auto c = cone(simplex_boundary(4));
    REQUIRE(validate(c).ok);
    REQUIRE(c.cell_count(0) == 5);
    REQUIRE(c.top_dim() == 3);
    REQUIRE(betti(c) == std::vector<int>{1, 0, 0, 0});
    REQUIRE(c.cells[0].back().label == "apex");
}

TEST_CASE("disjoint union stacks cells", "[builders]") {
    auto k = disjoint_union(simplex_boundary(3), simplex_boundary(3));
    REQUIRE(validate(k).ok);
    REQUIRE(k.cell_count(0) == 6);
    REQUIRE(k.cell_count(1) == 6);
    REQUIRE(betti(k) == std::vector<int>{2, 2});
}
