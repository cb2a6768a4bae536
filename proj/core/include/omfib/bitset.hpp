#pragma once

#include <cstdint>
#include <functional>
#include <vector>

namespace omfib {

// Dense fixed-size bitset. Used for tope sets, reachability rows and flats.
class Bitset {
public:
    Bitset() = default;
    explicit Bitset(uint32_t n) : size_(n), words_((n + 63) / 64, 0) {}

    uint32_t size() const { return size_; }

    void set(uint32_t i) { words_[i >> 6] |= uint64_t(1) << (i & 63); }
    void reset(uint32_t i) { words_[i >> 6] &= ~(uint64_t(1) << (i & 63)); }
    bool test(uint32_t i) const { return (words_[i >> 6] >> (i & 63)) & 1; }

    uint32_t count() const {
        uint32_t c = 0;
        for (uint64_t w : words_) c += static_cast<uint32_t>(__builtin_popcountll(w));
        return c;
    }
    bool any() const {
        for (uint64_t w : words_)
            if (w) return true;
        return false;
    }
    bool none() const { return !any(); }

    Bitset& operator|=(const Bitset& o) {
        for (size_t i = 0; i < words_.size(); ++i) words_[i] |= o.words_[i];
        return *this;
    }
    Bitset& operator&=(const Bitset& o) {
        for (size_t i = 0; i < words_.size(); ++i) words_[i] &= o.words_[i];
        return *this;
    }
    friend Bitset operator|(Bitset a, const Bitset& b) { return a |= b; }
    friend Bitset operator&(Bitset a, const Bitset& b) { return a &= b; }

    bool is_subset_of(const Bitset& o) const {
        for (size_t i = 0; i < words_.size(); ++i)
            if (words_[i] & ~o.words_[i]) return false;
        return true;
    }
    bool intersects(const Bitset& o) const {
        for (size_t i = 0; i < words_.size(); ++i)
            if (words_[i] & o.words_[i]) return true;
        return false;
    }

    friend bool operator==(const Bitset&, const Bitset&) = default;

    // Total order for deterministic sorting; compares word images.
    static bool lex_less(const Bitset& a, const Bitset& b) {
        for (size_t i = 0; i < a.words_.size(); ++i)
            if (a.words_[i] != b.words_[i]) return a.words_[i] < b.words_[i];
        return false;
    }

    template <class F>
    void for_each(F&& f) const {
        for (size_t wi = 0; wi < words_.size(); ++wi) {
            uint64_t w = words_[wi];
            while (w) {
                uint32_t b = static_cast<uint32_t>(__builtin_ctzll(w));
                f(static_cast<uint32_t>(wi * 64 + b));
                w &= w - 1;
            }
        }
    }

    std::vector<uint32_t> to_vector() const {
        std::vector<uint32_t> out;
        out.reserve(count());
        for_each([&](uint32_t i) { out.push_back(i); });
        return out;
    }

    size_t hash() const {
        size_t h = 1469598103934665603ull;
        for (uint64_t w : words_) {
            h ^= static_cast<size_t>(w);
            h *= 1099511628211ull;
        }
        return h;
    }

private:
    uint32_t size_ = 0;
    std::vector<uint64_t> words_;
};

struct BitsetHash {
    size_t operator()(const Bitset& b) const { return b.hash(); }
};

}  // namespace omfib
