#include <catch2/catch_amalgamated.hpp>

#include "dualcx/builders.hpp"
#include "dualcx/group_action.hpp"
#include "dualcx/io.hpp"
#include "dualcx/recognizer.hpp"
#include "dualcx/subdivision.hpp"
#include "fixtures.hpp"

using namespace dualcx;

TEST_CASE("cones collapse to a point", "[recognizer]") {
    for (auto base : {simplex_boundary(3), simplex_boundary(5), crosspolytope_boundary(3),
                      fixtures::rp2_6()}) {
        auto rep = collapses_to_point(cone(base));
        REQUIRE(rep.collapsed_to_point);
    }
}

TEST_CASE("circle has no free face", "[recognizer]") {
    auto rep = greedy_collapse(fixtures::cycle(3));
    REQUIRE(rep.steps.empty());
    REQUIRE_FALSE(rep.collapsed_to_point);
    REQUIRE(rep.residual.cell_count() == fixtures::cycle(3).cell_count());
}

TEST_CASE("collapse steps remove matched pairs", "[recognizer]") {
    auto c = cone(simplex_boundary(3));
    auto rep = greedy_collapse(c);
    REQUIRE(rep.collapsed_to_point);
    REQUIRE(2 * rep.steps.size() + 1 == c.cell_count());
    for (const auto& s : rep.steps)
        REQUIRE(s.coface.dim == s.free_face.dim + 1);
}

TEST_CASE("seeded retries explore different collapse orders", "[recognizer]") {
    auto c = cone(crosspolytope_boundary(3));
    auto a = greedy_collapse(c, 1);
    auto b = greedy_collapse(c, 2);
    REQUIRE(a.collapsed_to_point);
    REQUIRE(b.collapsed_to_point);
}

TEST_CASE("surface classification on the fixtures", "[recognizer]") {
    REQUIRE(classify_surface(simplex_boundary(4)).cls == SurfaceClass::S2);
    REQUIRE(classify_surface(crosspolytope_boundary(3)).cls == SurfaceClass::S2);
    REQUIRE(classify_surface(fixtures::rp2_6()).cls == SurfaceClass::RP2);
    REQUIRE(classify_surface(fixtures::torus_7()).cls == SurfaceClass::Torus);
    auto s2 = classify_surface(simplex_boundary(4));
    REQUIRE(s2.orientable);
    REQUIRE(s2.euler == 2);
    REQUIRE_FALSE(classify_surface(fixtures::rp2_6()).orientable);
}

TEST_CASE("surface classification rejects non-surfaces", "[recognizer]") {
    // disk: one triangle
    auto disk = to_delta(fixtures::from_facets(3, {{0, 1, 2}}));
    REQUIRE(classify_surface(disk).cls == SurfaceClass::NotClosedSurface);
    // wrong dimension
    REQUIRE(classify_surface(fixtures::cycle(4)).cls == SurfaceClass::NotClosedSurface);
    // two triangles glued along all three edges: edges fine, vertex links fine,
    // still a surface (S2 as a 2-gon sphere); pinched spaces instead:
    auto wedge = to_delta(fixtures::from_facets(5, {{0, 1, 2}, {0, 3, 4}}));
    REQUIRE(classify_surface(wedge).cls == SurfaceClass::NotClosedSurface);
}

TEST_CASE("surface classification survives subdivision", "[recognizer]") {
    REQUIRE(classify_surface(barycentric_delta(fixtures::rp2_6())).cls == SurfaceClass::RP2);
    REQUIRE(classify_surface(barycentric_delta(fixtures::torus_7())).cls ==
            SurfaceClass::Torus);
}

TEST_CASE("circle recognition", "[recognizer]") {
    REQUIRE(is_circle(fixtures::cycle(3)));
    REQUIRE(is_circle(simplex_boundary(3)));
    REQUIRE(is_circle(crosspolytope_boundary(2)));
    REQUIRE_FALSE(is_circle(to_delta(fixtures::from_facets(2, {{0, 1}}))));
    REQUIRE_FALSE(is_circle(disjoint_union(fixtures::cycle(3), fixtures::cycle(3))));
}

TEST_CASE("closed 3-manifold check", "[recognizer]") {
    auto s3 = simplex_boundary(5);
    auto rep = closed_3_manifold_check(s3);
    REQUIRE(rep.is_closed_3_manifold);
    for (const auto& [v, cls] : rep.vertex_links) REQUIRE(cls == "S2");

    auto cone3 = cone(fixtures::torus_7());
    REQUIRE_FALSE(closed_3_manifold_check(cone3).is_closed_3_manifold);
}

TEST_CASE("sphere quotient verdicts", "[recognizer]") {
    REQUIRE(sphere_quotient_report(simplex_boundary(4)).level ==
            VerdictLevel::ConfirmedSphere);
    REQUIRE(sphere_quotient_report(simplex_boundary(3)).level ==
            VerdictLevel::ConfirmedSphere);  // circle
    REQUIRE(sphere_quotient_report(sphere0()).level == VerdictLevel::ConfirmedSphere);
    REQUIRE(sphere_quotient_report(simplex_boundary(5)).level ==
            VerdictLevel::CandidateSphere);
    REQUIRE(sphere_quotient_report(simplex_boundary(6)).level ==
            VerdictLevel::CandidateSphere);
    REQUIRE(sphere_quotient_report(fixtures::torus_7()).level ==
            VerdictLevel::Inconsistent);

    auto rp2 = sphere_quotient_report(fixtures::rp2_6());
    REQUIRE(rp2.level == VerdictLevel::SphereQuotientCandidate);
    bool has_order = false;
    for (const auto& [k, v] : rp2.evidence)
        if (k == "quotient_group_order" && v == "2") has_order = true;
    REQUIRE(has_order);
}

TEST_CASE("sphere quotient verdict on a lens-type quotient", "[recognizer]") {
    GroupAction a;
    a.complex = simplex_boundary(5);
    a.generators.push_back(
        lift_vertex_permutation(a.complex, fixtures::rotation_vperm(a.complex)));
    auto res = quotient(a);
    auto v = sphere_quotient_report(res.quotient);
    REQUIRE(v.level == VerdictLevel::SphereQuotientCandidate);
    bool has_order = false;
    for (const auto& [k, val] : v.evidence)
        if (k == "pi1_order" && val == "5") has_order = true;
    REQUIRE(has_order);
}

TEST_CASE("cy degeneration verdicts", "[recognizer]") {
    ProbeOptions opt;
    REQUIRE(cy_degeneration_report(crosspolytope_boundary(3), 2, opt).level ==
            VerdictLevel::ConfirmedSphere);
    REQUIRE(cy_degeneration_report(simplex_boundary(3), 1, opt).level ==
            VerdictLevel::ConfirmedSphere);
    REQUIRE(cy_degeneration_report(sphere0(), 0, opt).level ==
            VerdictLevel::ConfirmedSphere);
    REQUIRE(cy_degeneration_report(simplex_boundary(5), 3, opt).level ==
            VerdictLevel::CandidateSphere);
    // wrong declared dimension
    REQUIRE(cy_degeneration_report(simplex_boundary(4), 3, opt).level ==
            VerdictLevel::Inconsistent);
    // torus: right dimension, wrong homology
    REQUIRE(cy_degeneration_report(fixtures::torus_7(), 2, opt).level ==
            VerdictLevel::Inconsistent);
    // RP2: rational homology sphere in no middle degree but not simply connected
    REQUIRE(cy_degeneration_report(fixtures::rp2_6(), 2, opt).level ==
            VerdictLevel::Inconsistent);
}
