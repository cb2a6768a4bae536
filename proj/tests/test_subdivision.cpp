#include <doctest.h>

#include <algorithm>
#include <map>
#include <set>

#include "omfib/fibration.hpp"
#include "omfib/homology.hpp"
#include "omfib/subdivision.hpp"
#include "test_util.hpp"

using namespace omfib;
using omfib::test::sv;

namespace {

std::vector<int> cells_per_height(const Poset& p) {
    std::vector<int> count(p.height() + 1, 0);
    for (uint32_t i = 0; i < p.size(); ++i) ++count[p.heights()[i]];
    return count;
}

long long alternating_sum(const std::vector<int>& v) {
    long long chi = 0;
    int sign = 1;
    for (int c : v) {
        chi += sign * c;
        sign = -sign;
    }
    return chi;
}

}  // namespace

TEST_CASE("rank subdivision of the hexagon has 6 vertices, 8 edges, 3 faces") {
    OrientedMatroid om = omfib::test::load_om("hexagon.arr");
    for (uint32_t b = 0; b < om.tope_count(); ++b) {
        DualSubdivision sd = rank_subdivide_dual(om, om.tope(b));
        CHECK(cells_per_height(sd.poset) == std::vector<int>{6, 8, 3});
        CHECK(alternating_sum(cells_per_height(sd.poset)) == 1);
    }
}

TEST_CASE("rank subdivision of a rank-one oriented matroid is the dual complex") {
    OrientedMatroid om = omfib::test::load_om("rank1.om");
    DualSubdivision sd = rank_subdivide_dual(om, sv("+"));
    CHECK(sd.cells.size() == 3);
    CHECK(cells_per_height(sd.poset) == std::vector<int>{2, 1});
}

TEST_CASE("rank subdivision of the boolean square") {
    OrientedMatroid om = omfib::test::load_om("b2.arr");
    DualSubdivision sd = rank_subdivide_dual(om, sv("++"));

    // direct application of the definition: every covector cell contributes
    // its rank slices and all bands except at the top rank
    std::vector<uint32_t> rk = om.tope_ranks(sv("++"));
    std::set<std::vector<uint32_t>> expected;
    for (uint32_t c = 0; c < om.covector_count(); ++c) {
        std::map<uint32_t, std::vector<uint32_t>> slices;
        om.topes_above(c).for_each([&](uint32_t t) { slices[rk[t]].push_back(t); });
        uint32_t top = rk[*om.tope_number(om.covector(c).composed(sv("--")))];
        for (auto& [k, topes] : slices) {
            expected.insert(topes);
            if (k != top) {
                std::vector<uint32_t> band = topes;
                auto next = slices.find(k + 1);
                REQUIRE(next != slices.end());
                band.insert(band.end(), next->second.begin(), next->second.end());
                std::sort(band.begin(), band.end());
                expected.insert(band);
            }
        }
    }
    std::set<std::vector<uint32_t>> got;
    for (const auto& cell : sd.cells) got.insert(cell.topes.to_vector());
    CHECK(got == expected);

    CHECK(cells_per_height(sd.poset) == std::vector<int>{4, 5, 2});
    CHECK(alternating_sum(cells_per_height(sd.poset)) == 1);
}

TEST_CASE("the square band of the subdivided hexagon has a circle below it") {
    OrientedMatroid om = omfib::test::load_om("hexagon.arr");
    DualSubdivision sd = rank_subdivide_dual(om, om.tope(0));
    // the middle band of the big cell: ranks {1, 2}, four topes
    std::vector<uint32_t> rk = om.tope_ranks(om.tope(0));
    Bitset middle(om.tope_count());
    for (uint32_t t = 0; t < om.tope_count(); ++t)
        if (rk[t] == 1 || rk[t] == 2) middle.set(t);
    auto idx = sd.find(middle);
    REQUIRE(idx.has_value());
    CHECK(sd.cells[*idx].kind == RankCell::Kind::Band);
    CHECK(sd.cells[*idx].k == 1);
    CHECK(sphere_homology(check_cw_interval(sd.poset, *idx), 1));
}

TEST_CASE("minimal covering covectors are unique minima") {
    OrientedMatroid om = omfib::test::load_om("hexagon.arr");
    DualSubdivision sd = rank_subdivide_dual(om, om.tope(0));
    for (uint32_t i = 0; i < sd.cells.size(); ++i) {
        const Bitset& topes = sd.cells[i].topes;
        const SignVector& p = om.covector(sd.carrier[i]);
        CHECK(topes.is_subset_of(om.topes_above(sd.carrier[i])));
        for (uint32_t c = 0; c < om.covector_count(); ++c)
            if (topes.is_subset_of(om.topes_above(c)))
                CHECK(om.covector(c).below(p));  // p is the maximum in L
    }
}

TEST_CASE("verify_subdivision passes on the suite") {
    for (auto name : {"rank1.om", "hexagon.arr", "b2.arr"}) {
        OrientedMatroid om = omfib::test::load_om(name);
        for (uint32_t b = 0; b < om.tope_count(); ++b) {
            SubdivisionReport rep = verify_subdivision(om, om.tope(b));
            CHECK(rep.ok());
        }
    }
}

TEST_CASE("subdivided salvetti complex of the hexagon has 6/24/18 cells") {
    OrientedMatroid om = omfib::test::load_om("hexagon.arr");
    SalvettiComplex s = salvetti_poset(om);
    SalvettiSubdivision sd = rank_subdivide_salvetti(om, s);
    CHECK(cells_per_height(sd.poset) == std::vector<int>{6, 24, 18});
    CHECK(alternating_sum(cells_per_height(sd.poset)) == 0);
}

TEST_CASE("subdivided salvetti complex of a rank-one oriented matroid is itself") {
    OrientedMatroid om = omfib::test::load_om("rank1.om");
    SalvettiComplex s = salvetti_poset(om);
    SalvettiSubdivision sd = rank_subdivide_salvetti(om, s);
    CHECK(sd.cells.size() == 4);
    CHECK(homology(sd.poset) == homology(s.poset));
}

TEST_CASE("subdivided salvetti complex of boolean rank two is the torus") {
    OrientedMatroid om = omfib::test::load_om("b2.arr");
    SalvettiComplex s = salvetti_poset(om);
    SalvettiSubdivision sd = rank_subdivide_salvetti(om, s);
    CHECK(alternating_sum(cells_per_height(sd.poset)) == 0);
    CHECK(homology(sd.poset) == HomologyReport{{1, 2, 1}, {}, 0});
    CHECK(homology(sd.poset) == homology(s.poset));
}

TEST_CASE("subdivision preserves the euler characteristic and homology") {
    for (auto name : {"rank1.om", "hexagon.arr", "b2.arr"}) {
        OrientedMatroid om = omfib::test::load_om(name);
        SalvettiComplex s = salvetti_poset(om);
        SalvettiSubdivision sd = rank_subdivide_salvetti(om, s);
        CHECK(homology(sd.poset) == homology(s.poset));
    }
}

TEST_CASE("Q alternates with the tope rank from any base") {
    OrientedMatroid om = omfib::test::load_om("hexagon.arr");
    for (uint32_t b = 0; b < om.tope_count(); ++b) {
        std::vector<uint32_t> rk = om.tope_ranks(om.tope(b));
        Sign qb = tope_sign(om.tope(b));
        for (uint32_t t = 0; t < om.tope_count(); ++t) {
            Sign expect = (rk[t] % 2 == 0) ? qb : opposite(qb);
            CHECK(tope_sign(om.tope(t)) == expect);
        }
    }
}

TEST_CASE("below a maximal cell the subdivision restricts to the dual subdivision") {
    OrientedMatroid om = omfib::test::load_om("hexagon.arr");
    SalvettiComplex s = salvetti_poset(om);
    SalvettiSubdivision sd = rank_subdivide_salvetti(om, s);

    for (uint32_t t = 0; t < om.tope_count(); ++t) {
        // cells below some band of the subdivided maximal cell (0, T)
        std::set<uint32_t> below;
        for (uint32_t i = 0; i < sd.cells.size(); ++i) {
            if (sd.cells[i].tope != t || sd.cells[i].carrier != om.zero_index() ||
                sd.cells[i].kind != RankCell::Kind::Band)
                continue;
            for (uint32_t x : sd.poset.principal_ideal(i)) below.insert(x);
        }
        std::set<std::vector<uint32_t>> restricted;
        for (uint32_t x : below) restricted.insert(sd.cells[x].topes.to_vector());

        DualSubdivision dual = rank_subdivide_dual(om, om.tope(t));
        std::set<std::vector<uint32_t>> expected;
        for (const auto& cell : dual.cells) expected.insert(cell.topes.to_vector());
        CHECK(restricted == expected);
        CHECK(below.size() == dual.cells.size());
    }
}

TEST_CASE("projection to the salvetti complex is order preserving and surjective") {
    OrientedMatroid om = omfib::test::load_om("b3.arr");
    SalvettiComplex s = salvetti_poset(om);
    SalvettiSubdivision sd = rank_subdivide_salvetti(om, s);
    CHECK(sd.p_map().order_preserving());
    std::set<uint32_t> hit(sd.p_tilde.begin(), sd.p_tilde.end());
    CHECK(hit.size() == s.cells.size());
}
