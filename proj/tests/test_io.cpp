#include <catch2/catch_amalgamated.hpp>

#include "dualcx/builders.hpp"
#include "dualcx/homology.hpp"
#include "dualcx/io.hpp"
#include "fixtures.hpp"

using namespace dualcx;

TEST_CASE("complex round-trips through JSON", "[io]") {
    auto kx = crosspolytope_boundary(3);
    auto j = complex_to_json(kx);
    auto back = complex_from_json(j);
    REQUIRE(back.cell_count() == kx.cell_count());
    REQUIRE(validate(back).ok);
    REQUIRE(betti(back) == betti(kx));
    REQUIRE(complex_to_json(back) == j);
}

TEST_CASE("complex_from_json rejects malformed documents", "[io]") {
    REQUIRE_THROWS_AS(complex_from_json(json::array()), SchemaError);
    REQUIRE_THROWS_AS(complex_from_json(json{{"cells", 3}}), SchemaError);
}

TEST_CASE("stratification round-trips through JSON", "[io]") {
    auto data = to_stratification(simplex_boundary(3));
    auto j = stratification_to_json(data);
    auto back = stratification_from_json(j);
    REQUIRE(back.divisors == data.divisors);
    REQUIRE(back.strata.size() == data.strata.size());
    auto kx = from_stratification(back);
    REQUIRE(betti(kx) == std::vector<int>{1, 1});
}

TEST_CASE("input document requires exactly one source", "[io]") {
    json doc{{"format_version", "1"},
             {"builder", {{"name", "point"}}},
             {"complex", complex_to_json(point_complex())}};
    REQUIRE_THROWS_AS(parse_input_document(doc), SchemaError);
    REQUIRE_THROWS_AS(parse_input_document(json{{"format_version", "1"}}), SchemaError);
    REQUIRE_THROWS_AS(
        parse_input_document(json{{"format_version", "2"}, {"builder", {{"name", "point"}}}}),
        SchemaError);
}

TEST_CASE("builder documents construct the corpus", "[io]") {
    auto doc = parse_input_document(
        json{{"format_version", "1"},
             {"builder", {{"name", "simplex_boundary"}, {"m", 4}}}});
    REQUIRE(doc.complex.cell_count() == 14);
    REQUIRE_THROWS_AS(run_builder({"nonsense", {}}), SchemaError);
    REQUIRE(run_builder({"sphere0", {}}).cell_count(0) == 2);
    REQUIRE(run_builder({"empty", {}}).empty());
}

TEST_CASE("action specs lift vertex label maps", "[io]") {
    auto kx = crosspolytope_boundary(2);
    json jaction{{"generators",
                  {{{"vertex_labels",
                     {{"x0+", "x0-"}, {"x0-", "x0+"}, {"x1+", "x1-"}, {"x1-", "x1+"}}}}}}};
    auto spec = action_from_json(jaction);
    auto action = make_action(kx, spec);
    REQUIRE(action.generators.size() == 1);
    REQUIRE_NOTHROW(check_automorphism(kx, action.generators[0]));
}

TEST_CASE("action specs reject unknown labels and bad permutations", "[io]") {
    auto kx = crosspolytope_boundary(2);
    auto bad = action_from_json(
        json{{"generators", {{{"vertex_labels", {{"zz", "x0+"}}}}}}});
    REQUIRE_THROWS_AS(make_action(kx, bad), ActionError);
    REQUIRE_THROWS_AS(action_from_json(json{{"generators", {json::object()}}}), SchemaError);
}

TEST_CASE("explicit cell permutations are accepted and checked", "[io]") {
    auto kx = sphere0();
    ActionSpec spec;
    GeneratorSpec g;
    g.cells = {{1, 0}};
    spec.generators.push_back(g);
    auto action = make_action(kx, spec);
    REQUIRE(action.generators[0].perm[0] == std::vector<int>{1, 0});

    GeneratorSpec bad;
    bad.cells = {{0, 0}};
    ActionSpec bad_spec;
    bad_spec.generators.push_back(bad);
    REQUIRE_THROWS_AS(make_action(kx, bad_spec), ActionError);
}

TEST_CASE("canonical dump is sorted, indented and newline terminated", "[io]") {
    json j{{"zeta", 1}, {"alpha", 2}};
    auto s = canonical_dump(j);
    REQUIRE(s.back() == '\n');
    REQUIRE(s.find("alpha") < s.find("zeta"));
    REQUIRE(canonical_dump(j) == s);
}

TEST_CASE("digest is stable and content sensitive", "[io]") {
    REQUIRE(fnv1a_digest("abc") == fnv1a_digest("abc"));
    REQUIRE(fnv1a_digest("abc") != fnv1a_digest("abd"));
}

TEST_CASE("homology serialization includes torsion strings", "[io]") {
    auto h = integral_homology(fixtures::rp2_6());
    auto j = homology_to_json(h);
    REQUIRE(j[1]["torsion"][0] == "2");
    REQUIRE(j[0]["rank"] == 1);
}
