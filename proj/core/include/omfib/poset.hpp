#pragma once

#include <cstdint>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "omfib/bitset.hpp"

namespace omfib {

// Finite poset stored as its cover digraph plus precomputed reachability
// bitsets. Element identity is the index; labels are a sidecar.
class Poset {
public:
    Poset() = default;

    // covers are pairs (x, y) with x covered by y; the digraph must be acyclic
    // and is taken as-is (callers pass true cover relations or use from_relation).
    static Poset from_covers(uint32_t n, std::vector<std::pair<uint32_t, uint32_t>> covers);

    // Build from an arbitrary order predicate; covers are the transitive
    // reduction. leq(x, y) must be reflexive, antisymmetric, transitive.
    template <class Leq>
    static Poset from_relation(uint32_t n, Leq&& leq) {
        std::vector<Bitset> up(n, Bitset(n));
        for (uint32_t x = 0; x < n; ++x)
            for (uint32_t y = 0; y < n; ++y)
                if (leq(x, y)) up[x].set(y);
        return from_reachability(std::move(up));
    }

    static Poset from_reachability(std::vector<Bitset> up_sets);

    uint32_t size() const { return n_; }

    bool leq(uint32_t x, uint32_t y) const { return up_[x].test(y); }
    bool less(uint32_t x, uint32_t y) const { return x != y && up_[x].test(y); }

    const std::vector<uint32_t>& upper_covers(uint32_t x) const { return covers_up_[x]; }
    const std::vector<uint32_t>& lower_covers(uint32_t x) const { return covers_down_[x]; }
    std::vector<std::pair<uint32_t, uint32_t>> cover_pairs() const;
    uint64_t cover_count() const;

    const Bitset& up_set(uint32_t x) const { return up_[x]; }      // { y | x <= y }
    const Bitset& down_set(uint32_t x) const { return down_[x]; }  // { y | y <= x }

    std::vector<uint32_t> principal_ideal(uint32_t x) const;   // throws on bad index
    std::vector<uint32_t> principal_filter(uint32_t x) const;  // throws on bad index
    std::vector<uint32_t> minimal_elements() const;
    std::vector<uint32_t> maximal_elements() const;

    Poset dual() const;

    // Induced subposet on the given elements (ascending, no duplicates).
    // Element i of the result corresponds to keep[i]; labels carry over.
    Poset induced(std::span<const uint32_t> keep) const;

    // Longest-chain height of each element (edge count from a minimal element).
    const std::vector<int>& heights() const { return heights_; }
    int height() const;  // longest chain overall

    uint64_t count_maximal_chains() const;

    // Indices in a fixed linear extension (ascending height, then index).
    const std::vector<uint32_t>& topo_order() const { return topo_; }

    void set_label(uint32_t i, std::string s);
    const std::string& label(uint32_t i) const { return labels_[i]; }
    bool has_labels() const { return !labels_.empty(); }

private:
    void finalize();  // reachability -> covers, heights, topo order

    uint32_t n_ = 0;
    std::vector<std::vector<uint32_t>> covers_up_;
    std::vector<std::vector<uint32_t>> covers_down_;
    std::vector<Bitset> up_;
    std::vector<Bitset> down_;
    std::vector<int> heights_;
    std::vector<uint32_t> topo_;
    std::vector<std::string> labels_;
};

// Order preserving map between posets. Pointers are non-owning.
struct PosetMap {
    const Poset* domain = nullptr;
    const Poset* codomain = nullptr;
    std::vector<uint32_t> map;

    uint32_t operator()(uint32_t x) const { return map[x]; }
    bool order_preserving() const;  // checked on cover relations
};

// Induced subposet together with the original element ids (ascending).
struct Subposet {
    Poset poset;
    std::vector<uint32_t> elements;
};

// Poset fiber (f | q) = f^{-1}(codomain_{<= q}) with its induced order.
Subposet poset_fiber(const PosetMap& f, uint32_t q);

}  // namespace omfib
