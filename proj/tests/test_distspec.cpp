#include <catch2/catch_amalgamated.hpp>

#include <cmath>

#include "helpers.hpp"
#include "polymix/catalog.hpp"
#include "polymix/distspec.hpp"

using namespace polymix;

TEST_CASE("named form", "[distspec]") {
    const DistSpec ds = parse_dist_spec("lindley:2.0");
    CHECK_FALSE(ds.is_raw());
    CHECK(ds.name == "lindley");
    CHECK(ds.params == std::vector<double>{2.0});
    CHECK(realize(ds).normalizer() == build_named("lindley", ds.params).normalizer());

    const DistSpec gl = parse_dist_spec("gen_lindley3:1.0,0.5,2.0");
    CHECK(gl.params.size() == 3);
}

TEST_CASE("raw form", "[distspec]") {
    const DistSpec ds = parse_dist_spec("raw:d=2,beta=1,theta=1;0;1");
    REQUIRE(ds.is_raw());
    CHECK(ds.raw->d == 2.0);
    CHECK(ds.raw->beta == 1.0);
    CHECK(ds.raw->theta == std::vector<double>({1.0, 0.0, 1.0}));
    CHECK(ds.raw->degree() == 2);
    // key order is free
    const DistSpec ds2 = parse_dist_spec("raw:theta=1;0;1,d=2,beta=1");
    CHECK(ds2.raw->theta == ds.raw->theta);
}

TEST_CASE("whitespace insensitivity", "[distspec]") {
    const DistSpec a = parse_dist_spec("  lindley : 2.0 ");
    CHECK(a.name == "lindley");
    const DistSpec b = parse_dist_spec(" raw: d = 2,\tbeta = 1, theta = 1 ; 0 ; 1 ");
    CHECK(b.is_raw());
}

TEST_CASE("parse failures carry context", "[distspec]") {
    CHECK_THROWS_WITH(parse_dist_spec(""), Catch::Matchers::ContainsSubstring("position"));
    CHECK_THROWS_WITH(parse_dist_spec("lindley"), Catch::Matchers::ContainsSubstring("':'"));
    CHECK_THROWS_WITH(parse_dist_spec("lindley:2.0,3.0"),
                      Catch::Matchers::ContainsSubstring("expects 1 parameter"));
    CHECK_THROWS_WITH(parse_dist_spec("zoom:1"),
                      Catch::Matchers::ContainsSubstring("unknown distribution"));
    CHECK_THROWS_WITH(parse_dist_spec("lindley:abc"),
                      Catch::Matchers::ContainsSubstring("decimal number"));
    CHECK_THROWS_WITH(parse_dist_spec("raw:d=1,beta=2"),
                      Catch::Matchers::ContainsSubstring("theta"));
    CHECK_THROWS_WITH(parse_dist_spec("raw:d=1,d=2,beta=1,theta=1"),
                      Catch::Matchers::ContainsSubstring("duplicate"));
    CHECK_THROWS_WITH(parse_dist_spec("raw:d=1,beta=1,theta=1,zeta=9"),
                      Catch::Matchers::ContainsSubstring("unknown key"));
    // raw form must validate as family parameters
    CHECK_THROWS_AS(parse_dist_spec("raw:d=1,beta=-1,theta=1"), std::invalid_argument);
    CHECK_THROWS_AS(parse_dist_spec("raw:d=1,beta=1,theta=0;0"), std::invalid_argument);
}

TEST_CASE("every catalog name round-trips through the parser", "[distspec]") {
    for (const CatalogEntry& entry : catalog()) {
        std::string text = entry.name + ":";
        for (std::size_t i = 0; i < entry.arity(); ++i) {
            text += i == 0 ? "2" : ",2";
        }
        const DistSpec ds = parse_dist_spec(text);
        CHECK(ds.name == entry.name);
        CHECK_NOTHROW(realize(ds));
    }
}

TEST_CASE("grid specs", "[distspec]") {
    const GridSpec g = parse_grid("0:1:2");
    CHECK(g.start == 0.0);
    CHECK(g.stop == 1.0);
    CHECK(g.count == 2);
    const std::vector<double> xs = grid_points(parse_grid("0:10:5"));
    CHECK(xs == std::vector<double>({0.0, 2.5, 5.0, 7.5, 10.0}));
    CHECK(grid_points(parse_grid("0.5:9.7:7")).back() == 9.7);

    CHECK_THROWS_AS(parse_grid("0:0:1"), std::invalid_argument);
    CHECK_THROWS_AS(parse_grid("0:1:2.5"), std::invalid_argument);
    CHECK_THROWS_AS(parse_grid("-1:1:3"), std::invalid_argument);
    CHECK_THROWS_AS(parse_grid("3:1:3"), std::invalid_argument);
    CHECK_THROWS_AS(parse_grid("0:1"), std::invalid_argument);
}
