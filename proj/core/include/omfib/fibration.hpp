#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "omfib/homology.hpp"
#include "omfib/matching.hpp"
#include "omfib/poset.hpp"
#include "omfib/subdivision.hpp"

namespace omfib {

// Face poset of the circle complex C, the Salvetti complex of the rank-one
// oriented matroid: vertices (+,+), (-,-) below edges (0,+), (0,-).
enum class CircleCell : uint8_t { PP = 0, MM = 1, ZP = 2, ZM = 3 };

Poset circle_poset();
std::string circle_cell_name(CircleCell c);

// Q(T): the product of the tope's signs. Throws on a zero entry.
Sign tope_sign(const SignVector& tope);

// The fibration map: slices go to the vertex carrying their constant Q value,
// bands to the edge carrying the Q value of their lower slice.
struct FibrationMap {
    const SalvettiSubdivision* sd = nullptr;
    Poset circle;
    std::vector<uint32_t> value;          // cell -> CircleCell index
    std::vector<Sign> q_of_tope;          // Q per tope number

    PosetMap map() const { return PosetMap{&sd->poset, &circle, value}; }
};

// Evaluates and verifies the map: Q must be constant on every slice and the
// assignment order preserving (violations are construction bugs and throw).
FibrationMap fibration(const SalvettiSubdivision& sd);
FibrationMap fibration(const SalvettiSubdivision&&) = delete;  // result keeps a reference

// The combinatorial Milnor fiber: the preimage of (+,+), an order ideal of
// rk sd S. Elements of the result are cell ids of the subdivision.
Subposet milnor_fiber(const FibrationMap& f);

struct QuasiFibrationReport {
    HomologyReport fiber[4];  // indexed by CircleCell
    bool inclusion_iso[4] = {false, false, false, false};  // PP<ZP, PP<ZM, MM<ZP, MM<ZM
    bool betti_equal = false;

    bool ok() const {
        return betti_equal && inclusion_iso[0] && inclusion_iso[1] && inclusion_iso[2] &&
               inclusion_iso[3];
    }
};

// Homology certificate for the quasi-fibration property: the four poset
// fibers have equal homology and each vertex-to-edge fiber inclusion induces
// isomorphisms in every degree (checked by vanishing relative homology).
QuasiFibrationReport check_quasi_fibration(const FibrationMap& f);

struct ProofMatchingResult {
    Subposet fiber_b;                       // (Q down b), elements are subdivision cell ids
    Matching matching;                      // on fiber_b.poset (local indices)
    MatchingResult applied;                 // acyclicity, critical cells, ideal property
    std::vector<uint32_t> critical_global;  // critical cells as subdivision ids, ascending
    bool matches_closed_form = false;
    bool morse_homology_agrees = false;     // H(critical) = H(fiber_b) = H(fiber_a)

    bool ok() const {
        return applied.acyclic && applied.critical_is_ideal && matches_closed_form &&
               morse_homology_agrees;
    }
};

// The fiberwise acyclic matching on (Q down b) from the quasi-fibration
// argument, assembled through the patchwork construction over the projection
// to the Salvetti complex, with its critical cells compared against the
// closed-form description.
ProofMatchingResult proof_matching(const FibrationMap& f, CircleCell a, CircleCell b);

// The closed-form critical set: (Q down a), the extreme bands of cells of
// dimension at least one, and the vertices on the opposite side of a.
std::vector<uint32_t> closed_form_critical_cells(const FibrationMap& f, CircleCell a, CircleCell b);

}  // namespace omfib
