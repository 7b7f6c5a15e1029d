#include "doctest.h"

#include "helpers.hpp"
#include "matroid/catalog.hpp"
#include "matroid/splitting.hpp"

using namespace matroid;
using namespace testutil;

namespace {

const Catalog& cat() {
    static Catalog c = load_catalog();
    return c;
}

}  // namespace

TEST_CASE("catalog loads and every fixture validation passes") {
    const Catalog& c = cat();
    CHECK(c.size() >= 60);
    CHECK(c.count("F7") == 1);
    CHECK(c.count("G4") == 1);
    CHECK(c.count("H8") == 1);
    CHECK(c.count("eulerian_4v10e") == 1);
}

TEST_CASE("catalog loading is deterministic") {
    Catalog a = load_catalog(), b = load_catalog();
    REQUIRE(a.size() == b.size());
    for (const auto& [name, ea] : a) {
        const CatalogEntry& eb = b.at(name);
        CHECK(matroid_equal(ea.m, eb.m));
        CHECK(ea.validations == eb.validations);
    }
}

TEST_CASE("spec-named lookups") {
    const CatalogEntry& f7 = catalog_get(cat(), "F7");
    CHECK(f7.m.size() == 7);
    CHECK(f7.m.rank() == 3);
    CHECK(is_isomorphic(f7.m, testutil::f7()).has_value());

    const CatalogEntry& f7s = catalog_get(cat(), "F7star");
    CHECK(f7s.m.rank() == 4);
    CHECK(is_isomorphic(f7s.m, dual(testutil::f7())).has_value());
    CHECK_FALSE(is_isomorphic(f7s.m, f7.m).has_value());

    const CatalogEntry& g4 = catalog_get(cat(), "G4");
    CHECK(g4.m.representation().row_string(0) == "1000101");
    CHECK(g4.m.representation().row_string(1) == "0100110");
    CHECK(g4.m.representation().row_string(2) == "0001111");
    CHECK(g4.split_set == std::set<std::string>{"x", "y", "z"});

    const CatalogEntry& h8 = catalog_get(cat(), "H8");
    CHECK(h8.graph->vertex_count() == 5);
    CHECK(h8.graph->edge_count() == 9);

    CHECK(catalog_get(cat(), "K5").m.rank() == 4);
    CHECK(catalog_get(cat(), "K33").m.rank() == 5);
    CHECK_THROWS_AS(catalog_get(cat(), "no_such_fixture"), FixtureError);
}

TEST_CASE("drawn and printed split targets agree and both reproduce the dual Fano") {
    const CatalogEntry& printed = catalog_get(cat(), "G4");
    const CatalogEntry& drawn = catalog_get(cat(), "G4_drawn");
    CHECK(is_isomorphic(printed.m, drawn.m).has_value());
    CHECK(is_isomorphic(split(printed.m, printed.split_set), cat().at("F7star").m).has_value());
    CHECK(is_isomorphic(split(drawn.m, drawn.split_set), cat().at("F7star").m).has_value());
}

TEST_CASE("H5 and H6 differ only by loop placement") {
    const CatalogEntry& h5 = catalog_get(cat(), "H5");
    const CatalogEntry& h6 = catalog_get(cat(), "H6");
    // distinct graphs, but a loop is invisible to the matroid
    CHECK_FALSE(graph_isomorphic(*h5.graph, *h6.graph).has_value());
    CHECK(is_isomorphic(h5.m, h6.m).has_value());
    CHECK(graph_isomorphic(delete_edge(*h5.graph, "lp"), delete_edge(*h6.graph, "lp"))
              .has_value());
    // same for the two loop placements on the wheel
    const CatalogEntry& h9 = catalog_get(cat(), "H9");
    const CatalogEntry& h10 = catalog_get(cat(), "H10");
    CHECK_FALSE(graph_isomorphic(*h9.graph, *h10.graph).has_value());
    CHECK(is_isomorphic(h9.m, h10.m).has_value());
}

TEST_CASE("trivial family membership") {
    CHECK(trivial_family_member(cat().at("K5").m));
    CHECK(trivial_family_member(cat().at("K33").m));
    CHECK_FALSE(trivial_family_member(cat().at("K4").m));

    // adding a parallel element to K5 keeps the K5 minor
    Multigraph k5p = k5();
    k5p.add_edge("p", 0, 1);
    CHECK(trivial_family_member(circuit_matroid(k5p)));

    CHECK_THROWS_AS(trivial_family_member(cat().at("K4").m, 0), DomainError);
}

TEST_CASE("fixture error paths") {
    CHECK_THROWS_AS(load_catalog("/nonexistent/dir"), FixtureError);
}
