#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "omfib/oriented_matroid.hpp"
#include "omfib/poset.hpp"

namespace omfib {

// A cell (sigma, T) of the Salvetti complex: sigma a covector below the tope
// T in the covector order.
struct SalvettiCell {
    uint32_t covector;  // covector index in the oriented matroid
    uint32_t tope;      // tope number
    friend bool operator==(const SalvettiCell&, const SalvettiCell&) = default;
    friend auto operator<=>(const SalvettiCell&, const SalvettiCell&) = default;
};

struct SalvettiComplex {
    const OrientedMatroid* om = nullptr;
    std::vector<SalvettiCell> cells;  // sorted by (covector, tope)
    Poset poset;                      // (sigma,T) <= (tau,R) iff sigma >= tau and sigma o R = T
    std::vector<uint32_t> dim;        // corank of sigma = cell dimension

    std::optional<uint32_t> cell_index(uint32_t covector, uint32_t tope) const;
    uint32_t vertex_of_tope(uint32_t tope) const;  // the cell (T, T)
};

SalvettiComplex salvetti_poset(const OrientedMatroid& om);
SalvettiComplex salvetti_poset(const OrientedMatroid&&) = delete;  // result keeps a reference

// The isomorphism S_{<=(0,T)} = L dual, witnessed by sigma -> (sigma, sigma o T)
// and its inverse (sigma, R) -> sigma.
struct MaximalCellIdealIso {
    Poset dual_covectors;                // L dual
    Subposet ideal;                      // S_{<=(0,T)} with original cell ids
    std::vector<uint32_t> forward;       // covector index -> position in ideal
};

// Verifies both directions are order preserving bijections; throws
// std::logic_error when the verification fails (a construction bug).
MaximalCellIdealIso maximal_cell_ideal_iso(const OrientedMatroid& om, const SalvettiComplex& s,
                                           const SignVector& tope);

}  // namespace omfib
