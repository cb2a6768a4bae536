#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "omfib/homology.hpp"
#include "omfib/oriented_matroid.hpp"
#include "omfib/poset.hpp"
#include "omfib/salvetti.hpp"

namespace omfib {

// A cell of a tope-rank subdivision: a set of topes, either a rank slice
// (all members at rank k from the base) or a rank band (ranks k and k+1).
struct RankCell {
    enum class Kind { Slice, Band };
    Bitset topes;
    Kind kind = Kind::Slice;
    uint32_t k = 0;
};

// rk_B sd of the dual covector complex, ordered by inclusion of tope sets.
struct DualSubdivision {
    const OrientedMatroid* om = nullptr;
    uint32_t base = 0;                // tope number of B
    std::vector<RankCell> cells;      // deterministic order
    Poset poset;                      // inclusion order, graded by height
    std::vector<uint32_t> carrier;    // p_B: minimal covering covector per cell
    Poset dual_covectors;             // L dual, the codomain of p_B

    PosetMap p_map() const { return PosetMap{&poset, &dual_covectors, carrier}; }
    std::optional<uint32_t> find(const Bitset& topes) const;
};

DualSubdivision rank_subdivide_dual(const OrientedMatroid& om, const SignVector& base);
DualSubdivision rank_subdivide_dual(const OrientedMatroid&&, const SignVector&) = delete;

// A cell (a, T) of rk sd S: a rank cell in the subdivision of its carrier
// Salvetti cell, whose tope T is also the base of its rank structure.
struct SubdividedSalvettiCell {
    Bitset topes;
    uint32_t tope = 0;     // tope number T
    uint32_t carrier = 0;  // covector index p(a)
    RankCell::Kind kind = RankCell::Kind::Slice;
    uint32_t k = 0;        // rank (slice) or lower rank (band), w.r.t. T
};

struct SalvettiSubdivision {
    const OrientedMatroid* om = nullptr;
    const SalvettiComplex* salvetti = nullptr;
    std::vector<SubdividedSalvettiCell> cells;
    Poset poset;                    // (a,T) <= (b,R) iff a in b and p(a) o R = T
    std::vector<uint32_t> p_tilde;  // cell -> Salvetti cell index

    PosetMap p_map() const { return PosetMap{&poset, &salvetti->poset, p_tilde}; }
    std::optional<uint32_t> find(const Bitset& topes, uint32_t tope) const;
};

SalvettiSubdivision rank_subdivide_salvetti(const OrientedMatroid& om, const SalvettiComplex& s);
SalvettiSubdivision rank_subdivide_salvetti(const OrientedMatroid&, const SalvettiComplex&&) = delete;
SalvettiSubdivision rank_subdivide_salvetti(const OrientedMatroid&&, const SalvettiComplex&) = delete;

// Structural verification of rk_B sd: ball homology of the whole complex,
// sphere homology of every strict-lower interval, the projection p_B order
// preserving and surjective, and the slice partition of every T(sigma).
struct SubdivisionReport {
    bool ball_homology = false;
    bool intervals_sphere = false;
    bool p_order_preserving = false;
    bool p_surjective = false;
    bool tope_partition = false;
    HomologyReport total;
    std::vector<uint32_t> bad_intervals;  // cell indices failing the sphere check

    bool ok() const {
        return ball_homology && intervals_sphere && p_order_preserving && p_surjective &&
               tope_partition;
    }
};

SubdivisionReport verify_subdivision(const OrientedMatroid& om, const SignVector& base);

}  // namespace omfib
