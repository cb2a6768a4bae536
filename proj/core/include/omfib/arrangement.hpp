#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <vector>

#include "omfib/oriented_matroid.hpp"
#include "omfib/sign_vector.hpp"

namespace omfib {

using Rational = mpq_class;

// A central arrangement given by one exact-rational normal per hyperplane.
struct Arrangement {
    uint32_t dim = 0;
    std::vector<std::vector<Rational>> normals;
};

// Oriented matroid of an arrangement, with one exact witness point stored per
// covector (the sign pattern of the witness is re-checked on construction).
struct RealizedOM {
    OrientedMatroid om;
    std::vector<std::vector<Rational>> witnesses;  // aligned with om.covectors()
};

// Enumerates the covectors of a simple central arrangement: cocircuits from
// corank-one intersections by exact elimination, then composition closure.
// Throws std::invalid_argument on a zero normal or a parallel pair, naming it.
RealizedOM from_arrangement(const Arrangement& arr);

// Rank of a rational matrix by Gaussian elimination (exact).
uint32_t matrix_rank(std::vector<std::vector<Rational>> m);

Sign sign_of(const Rational& q);

}  // namespace omfib
