#include <doctest.h>

#include <algorithm>
#include <numeric>
#include <random>

#include "omfib/homology.hpp"
#include "omfib/order_complex.hpp"
#include "omfib/oriented_matroid.hpp"
#include "omfib/poset.hpp"
#include "test_util.hpp"

using namespace omfib;
using omfib::test::sv;

namespace {

Poset chain(uint32_t n) {
    std::vector<std::pair<uint32_t, uint32_t>> covers;
    for (uint32_t i = 0; i + 1 < n; ++i) covers.emplace_back(i, i + 1);
    return Poset::from_covers(n, covers);
}

}  // namespace

TEST_CASE("dual reverses a chain and is an involution") {
    Poset c = chain(3);
    Poset d = c.dual();
    CHECK(d.leq(2, 0));
    CHECK_FALSE(d.leq(0, 2));
    Poset dd = d.dual();
    for (uint32_t x = 0; x < 3; ++x)
        for (uint32_t y = 0; y < 3; ++y) CHECK(dd.leq(x, y) == c.leq(x, y));
}

TEST_CASE("dual covector poset of the three-line arrangement has one maximal face") {
    OrientedMatroid om = omfib::test::load_om("hexagon.arr");
    Poset dual = om.covector_poset().dual();
    auto mx = dual.maximal_elements();
    REQUIRE(mx.size() == 1);
    CHECK(om.covector(mx[0]).is_zero());
    CHECK(dual.minimal_elements().size() == 6);  // the topes
}

TEST_CASE("principal ideals and filters") {
    Poset c = chain(4);
    CHECK(c.principal_ideal(3).size() == 4);
    CHECK(c.principal_ideal(0).size() == 1);
    CHECK(c.principal_filter(0).size() == 4);
    CHECK_THROWS_AS(c.principal_ideal(9), std::invalid_argument);
}

TEST_CASE("order complex shapes") {
    // antichain: isolated vertices
    Poset antichain = Poset::from_covers(4, {});
    OrderComplex oc = order_complex(antichain);
    CHECK(oc.facets.size() == 4);

    // chain of length two: a single filled triangle
    SimplicialComplex tri = all_chains(chain(3));
    CHECK(tri.simplices[0].size() == 3);
    CHECK(tri.simplices[1].size() == 3);
    CHECK(tri.simplices[2].size() == 1);

    // face poset of the circle complex: a square, homotopy circle
    Poset circle = Poset::from_covers(4, {{0, 2}, {0, 3}, {1, 2}, {1, 3}});
    SimplicialComplex sq = all_chains(circle);
    CHECK(sq.simplices[0].size() == 4);
    CHECK(sq.simplices[1].size() == 4);
    CHECK(sq.simplices.size() == 2);
    CHECK(homology(circle) == HomologyReport{{1, 1}, {}, 0});
}

TEST_CASE("facet count agrees with the chain-counting recurrence") {
    OrientedMatroid om = omfib::test::load_om("b2.arr");
    for (const Poset& p : {om.covector_poset(), om.covector_poset().dual(), chain(5)}) {
        OrderComplex oc = order_complex(p);
        CHECK(oc.facets.size() == p.count_maximal_chains());
    }
}

TEST_CASE("poset fibers") {
    Poset c = chain(4);
    PosetMap identity{&c, &c, {0, 1, 2, 3}};
    Subposet fib = poset_fiber(identity, 2);
    CHECK(fib.elements == std::vector<uint32_t>{0, 1, 2});

    Poset point = chain(1);
    PosetMap constant{&c, &point, {0, 0, 0, 0}};
    CHECK(poset_fiber(constant, 0).elements.size() == 4);
    CHECK_THROWS_AS(poset_fiber(constant, 5), std::invalid_argument);
}

TEST_CASE("fibers of an order preserving map are order ideals through f") {
    // map the square face poset onto a chain and check downward closure
    Poset circle = Poset::from_covers(4, {{0, 2}, {0, 3}, {1, 2}, {1, 3}});
    Poset c2 = chain(2);
    PosetMap f{&circle, &c2, {0, 0, 1, 1}};
    REQUIRE(f.order_preserving());
    Subposet fib = poset_fiber(f, 0);
    Bitset in(circle.size());
    for (uint32_t x : fib.elements) in.set(x);
    for (uint32_t x : fib.elements)
        for (uint32_t y : circle.lower_covers(x)) CHECK(in.test(y));
}

TEST_CASE("cover relations are the transitive reduction") {
    std::mt19937 rng(11);
    for (int trial = 0; trial < 20; ++trial) {
        // random subposet of the Boolean lattice on 4 points
        std::vector<uint32_t> masks;
        for (uint32_t m = 0; m < 16; ++m)
            if (rng() % 3) masks.push_back(m);
        Poset p = Poset::from_relation(static_cast<uint32_t>(masks.size()),
                                       [&](uint32_t a, uint32_t b) {
                                           return (masks[a] & masks[b]) == masks[a];
                                       });
        // rebuilding from the computed covers reproduces the order
        Poset q = Poset::from_covers(p.size(), p.cover_pairs());
        for (uint32_t x = 0; x < p.size(); ++x)
            for (uint32_t y = 0; y < p.size(); ++y) CHECK(p.leq(x, y) == q.leq(x, y));
    }
}

TEST_CASE("interval homology detects spheres") {
    // face poset of a segment: vertices have empty lower intervals, the edge
    // sits above a pair of points
    Poset segment = Poset::from_covers(3, {{0, 2}, {1, 2}});
    CHECK(sphere_homology(check_cw_interval(segment, 0), -1));
    CHECK(sphere_homology(check_cw_interval(segment, 2), 0));

    // hexagon face poset: the interval below the 2-cell is a circle
    OrientedMatroid om = omfib::test::load_om("hexagon.arr");
    Poset dual = om.covector_poset().dual();
    uint32_t two_cell = dual.maximal_elements()[0];
    HomologyReport h = check_cw_interval(dual, two_cell);
    CHECK(h == HomologyReport{{1, 1}, {}, 0});
    CHECK(sphere_homology(h, 1));
}
