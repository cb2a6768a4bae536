#pragma once

#include <cstdint>
#include <functional>
#include <optional>
#include <utility>
#include <vector>

#include "omfib/poset.hpp"

namespace omfib {

// A matching on the cover relations of a poset: each element in at most one
// pair. The modified Hasse digraph keeps unmatched covers pointing up and
// reverses matched ones.
struct Matching {
    std::vector<std::pair<uint32_t, uint32_t>> pairs;  // (a, b) with a covered by b
};

struct MatchingResult {
    bool acyclic = false;
    std::vector<uint32_t> cycle;             // witness when not acyclic
    std::vector<uint32_t> critical;          // unmatched elements, ascending
    bool critical_is_ideal = false;          // critical cells form a subcomplex
    std::optional<Subposet> critical_poset;  // present when they do
};

// Verifies the matching, detects directed cycles in the modified Hasse
// digraph and extracts the critical subposet when it is an order ideal.
// Throws std::invalid_argument if the pairs are not covers or overlap.
MatchingResult apply_matching(const Poset& p, const Matching& m);

// Union of per-fiber matchings of a poset map. Each matching must live on one
// fiber f^{-1}(q); the union is re-verified globally and a cycle is treated
// as an internal error (it would contradict the patchwork principle).
Matching patchwork(const PosetMap& f, const std::function<Matching(uint32_t)>& per_fiber);

}  // namespace omfib
