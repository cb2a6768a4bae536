#include <doctest.h>

#include <algorithm>
#include <map>
#include <set>

#include "omfib/fibration.hpp"
#include "omfib/geometric_lattice.hpp"
#include "omfib/io.hpp"
#include "test_util.hpp"

using namespace omfib;
using omfib::test::sv;

namespace {

struct Pipeline {
    OrientedMatroid om;
    SalvettiComplex s;
    SalvettiSubdivision sd;
    FibrationMap f;

    explicit Pipeline(const std::string& name)
        : om(omfib::test::load_om(name)),
          s(salvetti_poset(om)),
          sd(rank_subdivide_salvetti(om, s)),
          f(fibration(sd)) {}
};

long long binomial(int n, int k) {
    if (k < 0 || k > n) return 0;
    long long r = 1;
    for (int i = 0; i < k; ++i) r = r * (n - i) / (i + 1);
    return r;
}

}  // namespace

TEST_CASE("tope sign is the product of the entries") {
    CHECK(tope_sign(sv("+++")) == Sign::Plus);
    CHECK(tope_sign(sv("+-+")) == Sign::Minus);
    CHECK_THROWS_AS(tope_sign(sv("+0+")), std::invalid_argument);
    for (auto s : {"+-", "--+", "++++"}) {
        SignVector t = sv(s);
        Sign flipped = (t.size() % 2 == 0) ? tope_sign(t) : opposite(tope_sign(t));
        CHECK(tope_sign(t.negated()) == flipped);
    }
}

TEST_CASE("the fibration of a rank-one oriented matroid is the identity of the circle") {
    Pipeline p("rank1.om");
    REQUIRE(p.sd.cells.size() == 4);
    // the map is a poset isomorphism hitting each circle cell once
    std::set<uint32_t> values(p.f.value.begin(), p.f.value.end());
    CHECK(values.size() == 4);
    for (uint32_t x = 0; x < 4; ++x)
        for (uint32_t y = 0; y < 4; ++y)
            CHECK(p.sd.poset.leq(x, y) == p.f.circle.leq(p.f.value[x], p.f.value[y]));
}

TEST_CASE("hexagon fibers over the vertices split the topes in half") {
    Pipeline p("hexagon.arr");
    int pp_vertices = 0, mm_vertices = 0;
    for (uint32_t i = 0; i < p.sd.cells.size(); ++i) {
        if (p.sd.poset.heights()[i] != 0) continue;
        if (p.f.value[i] == static_cast<uint32_t>(CircleCell::PP)) ++pp_vertices;
        if (p.f.value[i] == static_cast<uint32_t>(CircleCell::MM)) ++mm_vertices;
    }
    CHECK(pp_vertices == 3);
    CHECK(mm_vertices == 3);
}

TEST_CASE("milnor fiber of the three-line arrangement is a wedge of four circles") {
    Pipeline p("hexagon.arr");
    Subposet fiber = milnor_fiber(p.f);
    CHECK(homology(fiber.poset) == HomologyReport{{1, 4}, {}, -3});
}

TEST_CASE("milnor fiber of the rank-one oriented matroid is a point") {
    Pipeline p("rank1.om");
    Subposet fiber = milnor_fiber(p.f);
    CHECK(fiber.elements.size() == 1);
    CHECK(homology(fiber.poset) == HomologyReport{{1}, {}, 1});
}

TEST_CASE("boolean fibers follow the binomial pattern") {
    // the fiber of x_1 ... x_n = 1 retracts to an (n-1)-torus
    for (auto [name, n] : std::vector<std::pair<std::string, int>>{{"b2.arr", 2}, {"b3.arr", 3}}) {
        Pipeline p(name);
        Subposet fiber = milnor_fiber(p.f);
        HomologyReport h = homology(fiber.poset);
        std::vector<long long> expected;
        for (int k = 0; k < n; ++k) expected.push_back(binomial(n - 1, k));
        CHECK(h.trimmed_betti() == expected);
        CHECK(h.torsion.empty());
    }
}

TEST_CASE("fibration is surjective and partitions the cells") {
    Pipeline p("b2.arr");
    std::map<uint32_t, int> count;
    for (uint32_t v : p.f.value) ++count[v];
    CHECK(count.size() == 4);
    int total = 0;
    for (auto& [v, c] : count) total += c;
    CHECK(total == static_cast<int>(p.sd.cells.size()));
}

TEST_CASE("both vertex fibers have the same homology") {
    for (auto name : {"hexagon.arr", "b2.arr", "b3.arr"}) {
        Pipeline p(name);
        Subposet pp = poset_fiber(p.f.map(), static_cast<uint32_t>(CircleCell::PP));
        Subposet mm = poset_fiber(p.f.map(), static_cast<uint32_t>(CircleCell::MM));
        CHECK(homology(pp.poset) == homology(mm.poset));
    }
}

TEST_CASE("quasi-fibration certificate holds for the three-line arrangement") {
    Pipeline p("hexagon.arr");
    QuasiFibrationReport rep = check_quasi_fibration(p.f);
    CHECK(rep.ok());
    for (int c = 0; c < 4; ++c)
        CHECK(rep.fiber[c].trimmed_betti() == std::vector<long long>{1, 4});
}

TEST_CASE("quasi-fibration certificate holds for rank one and boolean rank three") {
    Pipeline r1("rank1.om");
    CHECK(check_quasi_fibration(r1.f).ok());

    Pipeline b3("b3.arr");
    QuasiFibrationReport rep = check_quasi_fibration(b3.f);
    CHECK(rep.ok());
    for (int c = 0; c < 4; ++c)
        CHECK(rep.fiber[c].trimmed_betti() == std::vector<long long>{1, 2, 1});
}

TEST_CASE("euler identity of the milnor fiber") {
    for (auto name : {"one_line.arr", "hexagon.arr", "b2.arr", "b3.arr"}) {
        Pipeline p(name);
        Subposet fiber = milnor_fiber(p.f);
        long long chi = homology(fiber.poset).euler;
        OSBetti os = os_betti(geometric_lattice(p.om).poset);
        CHECK(chi == static_cast<long long>(p.om.n()) * os.chi_projective);
    }
}

TEST_CASE("proof matching on the three-line arrangement") {
    Pipeline p("hexagon.arr");
    ProofMatchingResult res = proof_matching(p.f, CircleCell::PP, CircleCell::ZP);
    CHECK(res.ok());

    // critical cells: the fiber (3 vertices, 6 edges) plus three cones, each
    // a negative vertex, two edge bands and one top band
    Subposet fiber = milnor_fiber(p.f);
    CHECK(fiber.elements.size() == 9);
    CHECK(res.critical_global.size() == 9 + 3 * 4);

    // the critical complex retracts onto the fiber
    REQUIRE(res.applied.critical_poset.has_value());
    CHECK(homology(res.applied.critical_poset->poset) == homology(fiber.poset));
}

TEST_CASE("proof matching of a rank-one oriented matroid is empty") {
    Pipeline p("rank1.om");
    ProofMatchingResult res = proof_matching(p.f, CircleCell::PP, CircleCell::ZP);
    CHECK(res.ok());
    CHECK(res.matching.pairs.empty());
    CHECK(res.critical_global.size() == res.fiber_b.elements.size());
}

TEST_CASE("proof matching reduces boolean rank two to its fiber homology") {
    Pipeline p("b2.arr");
    ProofMatchingResult res = proof_matching(p.f, CircleCell::PP, CircleCell::ZP);
    CHECK(res.ok());
    REQUIRE(res.applied.critical_poset.has_value());
    HomologyReport crit = homology(res.applied.critical_poset->poset);
    Subposet zp = poset_fiber(p.f.map(), static_cast<uint32_t>(CircleCell::ZP));
    CHECK(crit == homology(zp.poset));
}

TEST_CASE("covector-file input reproduces the arrangement pipeline") {
    OrientedMatroid from_arr = omfib::test::load_om("hexagon.arr");
    std::istringstream round(write_covector_file(from_arr.covectors()));
    OrientedMatroid from_file =
        OrientedMatroid::from_covectors(parse_covector_file(round));

    SalvettiComplex s1 = salvetti_poset(from_arr);
    SalvettiComplex s2 = salvetti_poset(from_file);
    SalvettiSubdivision sd1 = rank_subdivide_salvetti(from_arr, s1);
    SalvettiSubdivision sd2 = rank_subdivide_salvetti(from_file, s2);
    FibrationMap f1 = fibration(sd1);
    FibrationMap f2 = fibration(sd2);
    CHECK(homology(milnor_fiber(f1).poset) == homology(milnor_fiber(f2).poset));
    CHECK(sd1.cells.size() == sd2.cells.size());
}

TEST_CASE("all four vertex-edge matchings work and respect the antipodal symmetry") {
    Pipeline p("hexagon.arr");
    for (CircleCell a : {CircleCell::PP, CircleCell::MM})
        for (CircleCell b : {CircleCell::ZP, CircleCell::ZM}) CHECK(proof_matching(p.f, a, b).ok());

    // negating every tope swaps the two sides of the fibration
    auto negate_cell = [&](uint32_t i) {
        const auto& cell = p.sd.cells[i];
        Bitset neg(p.om.tope_count());
        cell.topes.for_each(
            [&](uint32_t t) { neg.set(*p.om.tope_number(p.om.tope(t).negated())); });
        return *p.sd.find(neg, *p.om.tope_number(p.om.tope(cell.tope).negated()));
    };
    ProofMatchingResult pp = proof_matching(p.f, CircleCell::PP, CircleCell::ZP);
    ProofMatchingResult mm = proof_matching(p.f, CircleCell::MM, CircleCell::ZM);
    std::set<std::pair<uint32_t, uint32_t>> mapped;
    for (auto [a, b] : pp.matching.pairs)
        mapped.emplace(negate_cell(pp.fiber_b.elements[a]), negate_cell(pp.fiber_b.elements[b]));
    std::set<std::pair<uint32_t, uint32_t>> direct;
    for (auto [a, b] : mm.matching.pairs)
        direct.emplace(mm.fiber_b.elements[a], mm.fiber_b.elements[b]);
    CHECK(mapped == direct);
}
