#include <doctest.h>

#include <sstream>

#include "omfib/io.hpp"
#include "omfib/salvetti.hpp"
#include "omfib/subdivision.hpp"
#include "test_util.hpp"

using namespace omfib;
using omfib::test::sv;

TEST_CASE("arrangement files round-trip") {
    std::istringstream in("# three lines\narr 2 3\n1 0\n0 1\n1 -1\n");
    Arrangement arr = parse_arrangement(in);
    CHECK(arr.dim == 2);
    CHECK(arr.normals.size() == 3);
    std::istringstream again(write_arrangement(arr));
    Arrangement arr2 = parse_arrangement(again);
    CHECK(arr2.normals == arr.normals);
}

TEST_CASE("rational entries accept denominators") {
    std::istringstream in("arr 2 1\n1/2 -3/4\n");
    Arrangement arr = parse_arrangement(in);
    CHECK(arr.normals[0][0] == Rational(1, 2));
    CHECK(arr.normals[0][1] == Rational(-3, 4));
}

TEST_CASE("arrangement parse errors carry line numbers") {
    std::istringstream bad("arr 2 2\n1 0\n1 oops\n");
    try {
        parse_arrangement(bad);
        FAIL("expected a parse error");
    } catch (const ParseError& ex) {
        CHECK(ex.line == 3);
    }
}

TEST_CASE("covector files round-trip") {
    std::istringstream in("om 2\n00\n++\n--\n");
    auto covs = parse_covector_file(in);
    REQUIRE(covs.size() == 3);
    std::istringstream again(write_covector_file(covs));
    CHECK(parse_covector_file(again) == covs);

    std::istringstream bad("om 2\n+\n");
    CHECK_THROWS_AS(parse_covector_file(bad), ParseError);
}

TEST_CASE("poset files round-trip with labels") {
    OrientedMatroid om = omfib::test::load_om("rank1.om");
    SalvettiComplex s = salvetti_poset(om);
    std::string text = write_poset_file(s.poset);
    std::istringstream in(text);
    Poset p = parse_poset_file(in);
    CHECK(p.size() == s.poset.size());
    for (uint32_t x = 0; x < p.size(); ++x) {
        CHECK(p.label(x) == s.poset.label(x));
        for (uint32_t y = 0; y < p.size(); ++y) CHECK(p.leq(x, y) == s.poset.leq(x, y));
    }
}

TEST_CASE("subdivision labels with kind annotations survive a round-trip") {
    OrientedMatroid om = omfib::test::load_om("hexagon.arr");
    DualSubdivision sd = rank_subdivide_dual(om, om.tope(0));
    std::istringstream in(write_poset_file(sd.poset));
    Poset p = parse_poset_file(in);
    REQUIRE(p.size() == sd.poset.size());
    for (uint32_t x = 0; x < p.size(); ++x) CHECK(p.label(x) == sd.poset.label(x));
    CHECK(p.label(0).find("slice:") != std::string::npos);
}

TEST_CASE("facet files round-trip") {
    OrientedMatroid om = omfib::test::load_om("hexagon.arr");
    OrderComplex oc = order_complex(om.covector_poset());
    std::string text = write_facet_file(oc);
    std::istringstream in(text);
    uint32_t n = 0;
    auto facets = parse_facet_file(in, &n);
    CHECK(facets.size() == oc.facets.size());
    CHECK(n == om.covector_count());
}

TEST_CASE("input sniffing distinguishes arrangements from covector files") {
    std::istringstream a("arr 1 1\n1\n");
    CHECK(parse_om_input(a).is_arrangement());
    std::istringstream b("om 1\n0\n+\n-\n");
    CHECK_FALSE(parse_om_input(b).is_arrangement());
    std::istringstream c("bogus\n");
    CHECK_THROWS_AS(parse_om_input(c), ParseError);
}
