#include <doctest.h>

#include "omfib/fibration.hpp"
#include "omfib/geometric_lattice.hpp"
#include "omfib/homology.hpp"
#include "omfib/subdivision.hpp"
#include "test_util.hpp"

using namespace omfib;

// Heavier inputs than the bundled suite; registered as their own ctest entry.
TEST_SUITE_BEGIN("stress");

namespace {

Arrangement braid_rank3() {
    // the six difference hyperplanes on four coordinates
    Arrangement arr;
    arr.dim = 4;
    for (uint32_t i = 0; i < 4; ++i)
        for (uint32_t j = i + 1; j < 4; ++j) {
            std::vector<Rational> n(4, 0);
            n[i] = 1;
            n[j] = -1;
            arr.normals.push_back(std::move(n));
        }
    return arr;
}

}  // namespace

TEST_CASE("braid arrangement on four coordinates") {
    RealizedOM r = from_arrangement(braid_rank3());
    const OrientedMatroid& om = r.om;
    CHECK(om.n() == 6);
    CHECK(om.rank() == 3);
    CHECK(om.covector_count() == 75);  // ordered set partitions of a 4-set
    CHECK(om.tope_count() == 24);

    GeometricLattice gl = geometric_lattice(om);
    OSBetti os = os_betti(gl.poset);
    CHECK(os.betti == std::vector<long long>{1, 6, 11, 6});
    CHECK(os.chi_projective == 2);

    SalvettiComplex s = salvetti_poset(om);
    HomologyReport sh = homology(s.poset);
    CHECK(sh.trimmed_betti() == os.betti);
    CHECK(sh.torsion.empty());

    SalvettiSubdivision sd = rank_subdivide_salvetti(om, s);
    CHECK(homology(sd.poset) == sh);

    FibrationMap f = fibration(sd);
    Subposet fiber = milnor_fiber(f);
    HomologyReport fh = homology(fiber.poset);
    CHECK(fh.euler == 6 * os.chi_projective);
    CHECK(fh.torsion.empty());

    QuasiFibrationReport q = check_quasi_fibration(f);
    CHECK(q.ok());
    CHECK(q.fiber[0] == fh);

    ProofMatchingResult m = proof_matching(f, CircleCell::PP, CircleCell::ZP);
    CHECK(m.ok());

    // ball certificates for a sample of base topes
    for (uint32_t b : {0u, 7u, 23u}) CHECK(verify_subdivision(om, om.tope(b)).ok());
}

TEST_SUITE_END();
