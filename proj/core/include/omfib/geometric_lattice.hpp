#pragma once

#include <cstdint>
#include <vector>

#include "omfib/bitset.hpp"
#include "omfib/oriented_matroid.hpp"
#include "omfib/poset.hpp"

namespace omfib {

struct Flat {
    Bitset zero_set;  // subset of E
    int rank = 0;     // chain length below it in L(OM)
};

// Geometric lattice of an oriented matroid: zero sets of covectors ordered by
// inclusion, with the zero map covector -> flat.
struct GeometricLattice {
    std::vector<Flat> flats;               // ascending by (size, set)
    Poset poset;                           // ordered by inclusion; graded by rank
    std::vector<uint32_t> covector_to_flat;  // the zero map z

    uint32_t flat_of(uint32_t covector_index) const { return covector_to_flat[covector_index]; }
};

GeometricLattice geometric_lattice(const OrientedMatroid& om);

// The zero map alone: covector index -> flat index in geometric_lattice(om).
std::vector<uint32_t> zero_map(const OrientedMatroid& om);

// Moebius function mu(bottom, x) for a poset with a unique minimum.
std::vector<long long> moebius_from_bottom(const Poset& p);

struct OSBetti {
    std::vector<long long> betti;  // b_k = sum over rank-k flats of |mu|
    long long chi_projective = 0;  // chi(U) with Poin(X) = (1+t) Poin(U)
};

// Whitney-number Betti vector of the arrangement complement, used as the
// independent oracle for the Salvetti homology. Throws std::invalid_argument
// if the poset is not a lattice.
OSBetti os_betti(const Poset& lattice);

}  // namespace omfib
