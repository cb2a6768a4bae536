#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <string>
#include <vector>

#include "omfib/order_complex.hpp"
#include "omfib/poset.hpp"
#include "omfib/smith.hpp"

namespace omfib {

// Integral homology, unreduced (betti[0] counts components).
struct HomologyReport {
    std::vector<long long> betti;
    std::vector<std::pair<int, mpz_class>> torsion;  // (degree, invariant factor > 1)
    long long euler = 0;

    bool acyclic() const;   // reduced homology vanishes: betti = (1, 0, ...), no torsion
    bool vanishes() const;  // the zero report (relative homology of an equality)
    std::string str() const;
    friend bool operator==(const HomologyReport& a, const HomologyReport& b) {
        return a.trimmed_betti() == b.trimmed_betti() && a.torsion == b.torsion;
    }
    std::vector<long long> trimmed_betti() const;
};

struct HomologyOptions {
    bool collapse = false;  // elementary collapses before the matrix stage
};

// Chain complex of a simplicial complex: boundary matrices with integer
// entries plus the simplex counts per degree.
struct ChainComplex {
    std::vector<uint64_t> dims;              // dims[k] = number of k-simplices
    std::vector<SparseIntMatrix> boundary;   // boundary[k] : C_k -> C_{k-1}; boundary[0] is empty

    static ChainComplex from_simplices(const SimplicialComplex& sc);
    bool dd_zero() const;  // boundary(k) o boundary(k+1) = 0 for all k
};

HomologyReport homology(const SimplicialComplex& sc, const HomologyOptions& opt = {});
HomologyReport homology(const Poset& p, const HomologyOptions& opt = {});  // of Delta(P)

// Homology of the pair (Delta(P), Delta(P restricted to sub)). The subcomplex
// is spanned by the chains lying entirely inside sub. Vanishing in every
// degree certifies that the inclusion induces isomorphisms on homology.
HomologyReport relative_homology(const Poset& p, const Bitset& sub);

// Homology of Delta(P_{<x}), the computable surrogate for the CW-poset
// condition: compare against sphere_homology(report, height(x) - 1).
HomologyReport check_cw_interval(const Poset& p, uint32_t x);

// Unreduced homology of S^dim; dim = -1 means the empty complex.
bool sphere_homology(const HomologyReport& r, int dim);

// Removes free pairs (sigma with unique proper coface tau); homotopy type is
// preserved, so reports must agree with the uncollapsed run.
SimplicialComplex collapse_free_pairs(const SimplicialComplex& sc);

}  // namespace omfib
