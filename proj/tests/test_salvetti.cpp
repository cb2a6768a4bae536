#include <doctest.h>

#include <algorithm>
#include <set>

#include "omfib/homology.hpp"
#include "omfib/salvetti.hpp"
#include "test_util.hpp"

using namespace omfib;
using omfib::test::sv;

namespace {

std::vector<int> cells_per_dim(const SalvettiComplex& s) {
    std::vector<int> count;
    for (uint32_t d : s.dim) {
        if (count.size() <= d) count.resize(d + 1, 0);
        ++count[d];
    }
    return count;
}

}  // namespace

TEST_CASE("salvetti complex of the three-line arrangement") {
    OrientedMatroid om = omfib::test::load_om("hexagon.arr");
    SalvettiComplex s = salvetti_poset(om);
    CHECK(s.cells.size() == 24);
    CHECK(cells_per_dim(s) == std::vector<int>{6, 12, 6});
}

TEST_CASE("salvetti complex of the rank-one oriented matroid is the circle") {
    OrientedMatroid om = omfib::test::load_om("rank1.om");
    SalvettiComplex s = salvetti_poset(om);
    REQUIRE(s.cells.size() == 4);
    std::set<std::string> labels;
    for (uint32_t i = 0; i < 4; ++i) labels.insert(s.poset.label(i));
    CHECK(labels == std::set<std::string>{"(+,+)", "(-,-)", "(0,+)", "(0,-)"});
    CHECK(homology(s.poset) == HomologyReport{{1, 1}, {}, 0});
}

TEST_CASE("salvetti complex of boolean rank two is the torus") {
    OrientedMatroid om = omfib::test::load_om("b2.arr");

    // oracle: enumerate the pairs (sigma, T) with sigma o T = T directly
    std::set<std::pair<std::string, std::string>> pairs;
    for (const auto& sigma : om.covectors())
        for (uint32_t t = 0; t < om.tope_count(); ++t)
            if (sigma.composed(om.tope(t)) == om.tope(t))
                pairs.emplace(sigma.str(), om.tope(t).str());

    SalvettiComplex s = salvetti_poset(om);
    CHECK(s.cells.size() == pairs.size());
    CHECK(cells_per_dim(s) == std::vector<int>{4, 8, 4});

    long long chi = 4 - 8 + 4;
    CHECK(chi == 0);
    CHECK(homology(s.poset) == HomologyReport{{1, 2, 1}, {}, 0});
}

TEST_CASE("vertex and maximal cell counts equal the tope count") {
    for (auto name : {"rank1.om", "hexagon.arr", "b2.arr", "b3.arr"}) {
        OrientedMatroid om = omfib::test::load_om(name);
        SalvettiComplex s = salvetti_poset(om);
        uint32_t vertices = 0, maximal = 0;
        for (uint32_t i = 0; i < s.cells.size(); ++i) {
            if (s.dim[i] == 0) ++vertices;
            if (s.dim[i] == om.rank()) ++maximal;
        }
        CHECK(vertices == om.tope_count());
        CHECK(maximal == om.tope_count());
        CHECK(s.poset.maximal_elements().size() == om.tope_count());
    }
}

TEST_CASE("antipodal map is a poset automorphism") {
    OrientedMatroid om = omfib::test::load_om("hexagon.arr");
    SalvettiComplex s = salvetti_poset(om);
    std::vector<uint32_t> anti(s.cells.size());
    for (uint32_t i = 0; i < s.cells.size(); ++i) {
        auto [c, t] = s.cells[i];
        uint32_t nc = *om.index_of(om.covector(c).negated());
        uint32_t nt = *om.tope_number(om.tope(t).negated());
        anti[i] = *s.cell_index(nc, nt);
    }
    for (uint32_t x = 0; x < s.cells.size(); ++x)
        for (uint32_t y = 0; y < s.cells.size(); ++y)
            CHECK(s.poset.leq(x, y) == s.poset.leq(anti[x], anti[y]));
}

TEST_CASE("ideals of maximal cells are copies of the dual covector poset") {
    OrientedMatroid hexagon = omfib::test::load_om("hexagon.arr");
    SalvettiComplex s = salvetti_poset(hexagon);
    for (uint32_t t = 0; t < hexagon.tope_count(); ++t) {
        MaximalCellIdealIso iso = maximal_cell_ideal_iso(hexagon, s, hexagon.tope(t));
        CHECK(iso.ideal.elements.size() == 13);
    }

    OrientedMatroid rank1 = omfib::test::load_om("rank1.om");
    SalvettiComplex s1 = salvetti_poset(rank1);
    CHECK(maximal_cell_ideal_iso(rank1, s1, sv("+")).ideal.elements.size() == 3);

    OrientedMatroid b3 = omfib::test::load_om("b3.arr");
    SalvettiComplex s3 = salvetti_poset(b3);
    CHECK(maximal_cell_ideal_iso(b3, s3, sv("+++")).ideal.elements.size() == 27);

    CHECK_THROWS_AS(maximal_cell_ideal_iso(b3, s3, sv("0++")), std::invalid_argument);
}

TEST_CASE("salvetti poset is a CW poset under the corank grading") {
    for (auto name : {"hexagon.arr", "b2.arr"}) {
        OrientedMatroid om = omfib::test::load_om(name);
        SalvettiComplex s = salvetti_poset(om);
        for (uint32_t i = 0; i < s.cells.size(); ++i) {
            CHECK(s.dim[i] == static_cast<uint32_t>(s.poset.heights()[i]));
            CHECK(sphere_homology(check_cw_interval(s.poset, i), static_cast<int>(s.dim[i]) - 1));
        }
    }
}
