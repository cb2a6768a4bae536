#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "omfib/poset.hpp"
#include "omfib/sign_vector.hpp"

namespace omfib {

struct Violation {
    std::string kind;                  // "1".."4" (axiom), "loop", "parallel"
    std::vector<std::string> witness;  // sign vectors / element ids as strings
};

struct ValidationReport {
    bool ok = false;          // axioms hold and the covector set is simple
    bool axioms_ok[4] = {false, false, false, false};
    bool simple = false;
    std::optional<Violation> violation;  // first in the order 1,2,3,4,loop,parallel
    uint32_t rank = 0;                   // longest chain in the candidate poset
    uint32_t n_covectors = 0;            // after dedup
    uint32_t n_topes = 0;                // maximal elements
    std::vector<uint32_t> loops;
    std::vector<std::pair<uint32_t, uint32_t>> parallel_pairs;
};

// Exhaustive check of the covector axioms plus simplicity. Violations are
// data; only malformed input (empty set, ragged lengths) throws.
ValidationReport validate_axioms(const std::vector<SignVector>& cands);

// A simple oriented matroid given by its covectors. Construction validates;
// covectors are stored deduplicated in lexicographic order (0 < + < -) and
// topes inherit that order, which is the global tie-break order downstream.
class OrientedMatroid {
public:
    static OrientedMatroid from_covectors(std::vector<SignVector> cands);

    uint32_t n() const { return n_; }
    uint32_t rank() const { return rank_; }

    const std::vector<SignVector>& covectors() const { return covectors_; }
    uint32_t covector_count() const { return static_cast<uint32_t>(covectors_.size()); }
    const SignVector& covector(uint32_t i) const { return covectors_[i]; }
    std::optional<uint32_t> index_of(const SignVector& v) const;

    uint32_t tope_count() const { return static_cast<uint32_t>(topes_.size()); }
    const std::vector<uint32_t>& tope_indices() const { return topes_; }  // covector indices
    const SignVector& tope(uint32_t t) const { return covectors_[topes_[t]]; }
    std::optional<uint32_t> tope_number(const SignVector& v) const;
    bool is_tope(const SignVector& v) const { return tope_number(v).has_value(); }
    uint32_t zero_index() const { return zero_index_; }

    // Covector poset L: product order, graded by chain height.
    const Poset& covector_poset() const { return poset_; }

    // T(sigma): topes above a covector, as a bitset over tope numbers.
    const Bitset& topes_above(uint32_t covector_index) const { return topes_above_[covector_index]; }

    // Tope poset with respect to a base tope: R <= T iff S(B,R) is a subset
    // of S(B,T); element t is tope number t. Throws if base is not a tope.
    Poset tope_poset(const SignVector& base) const;

    // rk_B of every tope.
    std::vector<uint32_t> tope_ranks(const SignVector& base) const;

private:
    uint32_t n_ = 0;
    uint32_t rank_ = 0;
    uint32_t zero_index_ = 0;
    std::vector<SignVector> covectors_;
    std::vector<uint32_t> topes_;
    std::vector<Bitset> topes_above_;
    Poset poset_;
};

struct SimplifyResult {
    OrientedMatroid om;
    std::vector<uint32_t> kept;            // representative element per parallel class
    std::vector<std::vector<uint32_t>> classes;  // parallel classes (non-loop elements)
    std::vector<uint32_t> dropped_loops;
};

// Deletes loops and contracts parallel classes to their lowest-index member;
// the covector poset is unchanged up to isomorphism.
SimplifyResult simplify(const std::vector<SignVector>& cands);

}  // namespace omfib
