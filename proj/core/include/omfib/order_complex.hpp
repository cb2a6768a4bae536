#pragma once

#include <cstdint>
#include <vector>

#include "omfib/poset.hpp"

namespace omfib {

// Order complex Delta(P): vertices are the elements of P, facets the maximal
// chains. Lower-dimensional simplices are implied by downward closure and can
// be enumerated with all_chains.
struct OrderComplex {
    uint32_t n_vertices = 0;
    std::vector<std::vector<uint32_t>> facets;  // each a chain, ascending in P
};

OrderComplex order_complex(const Poset& p);

// A finite simplicial complex as lists of sorted vertex tuples per dimension.
struct SimplicialComplex {
    uint32_t n_vertices = 0;
    std::vector<std::vector<std::vector<uint32_t>>> simplices;  // [dim][i]

    int dim() const { return static_cast<int>(simplices.size()) - 1; }
    uint64_t simplex_count() const {
        uint64_t c = 0;
        for (const auto& d : simplices) c += d.size();
        return c;
    }
    long long euler_characteristic() const {
        long long chi = 0;
        int sign = 1;
        for (const auto& d : simplices) {
            chi += sign * static_cast<long long>(d.size());
            sign = -sign;
        }
        return chi;
    }
};

// All chains of P, i.e. the full simplex list of Delta(P).
SimplicialComplex all_chains(const Poset& p);

// Downward closure of a facet list (vertex ids in [0, n)).
SimplicialComplex complex_from_facets(uint32_t n, const std::vector<std::vector<uint32_t>>& facets);

}  // namespace omfib
