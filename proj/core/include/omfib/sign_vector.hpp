#pragma once

#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

#include "omfib/bitset.hpp"

namespace omfib {

enum class Sign : uint8_t { Zero = 0, Plus = 1, Minus = 2 };

char sign_char(Sign s);
Sign sign_from_char(char c);  // throws std::invalid_argument
inline Sign opposite(Sign s) {
    if (s == Sign::Plus) return Sign::Minus;
    if (s == Sign::Minus) return Sign::Plus;
    return Sign::Zero;
}

// A sign vector in {+,-,0}^E, two bits per entry (00 zero, 01 plus, 10 minus).
// Entry order is the ground-set order; all arithmetic is branch-free on words.
class SignVector {
public:
    SignVector() = default;
    explicit SignVector(uint32_t n) : size_(n), words_((n + 31) / 32, 0) {}

    static SignVector parse(std::string_view s);  // over the alphabet + - 0

    uint32_t size() const { return size_; }

    Sign at(uint32_t e) const {
        return static_cast<Sign>((words_[e >> 5] >> ((e & 31) * 2)) & 3u);
    }
    void set(uint32_t e, Sign s) {
        uint64_t& w = words_[e >> 5];
        w &= ~(uint64_t(3) << ((e & 31) * 2));
        w |= uint64_t(static_cast<uint8_t>(s)) << ((e & 31) * 2);
    }

    bool is_zero() const {
        for (uint64_t w : words_)
            if (w) return false;
        return true;
    }

    // -sigma
    SignVector negated() const {
        SignVector r(size_);
        for (size_t i = 0; i < words_.size(); ++i) {
            uint64_t w = words_[i];
            r.words_[i] = ((w & kLow) << 1) | ((w >> 1) & kLow);
        }
        return r;
    }

    // sigma o tau: entry e is sigma_e unless zero, else tau_e.
    SignVector composed(const SignVector& o) const;

    // Product order with 0 < +, 0 < -: true iff this <= o entrywise.
    bool below(const SignVector& o) const {
        for (size_t i = 0; i < words_.size(); ++i) {
            uint64_t occ = occupied(words_[i]);
            if ((words_[i] ^ o.words_[i]) & occ) return false;
        }
        return true;
    }

    // S(sigma, tau) = { e | sigma_e = -tau_e != 0 }
    std::vector<uint32_t> separating_set(const SignVector& o) const;
    uint32_t separation(const SignVector& o) const;       // |S(sigma, tau)|
    Bitset separating_bits(const SignVector& o) const;    // as subset of E

    std::vector<uint32_t> zero_set() const;
    Bitset zero_bits() const;
    uint32_t zero_count() const;
    uint32_t support_count() const { return size_ - zero_count(); }

    std::string str() const;

    friend bool operator==(const SignVector&, const SignVector&) = default;

    // Entrywise lexicographic order with 0 < + < -. Restricted to topes this
    // is the global tope order (+ < - in every coordinate).
    static bool lex_less(const SignVector& a, const SignVector& b);

    size_t hash() const {
        size_t h = 1469598103934665603ull ^ size_;
        for (uint64_t w : words_) {
            h ^= static_cast<size_t>(w);
            h *= 1099511628211ull;
        }
        return h;
    }

private:
    static constexpr uint64_t kLow = 0x5555555555555555ull;

    // spreads each nonzero lane to 11
    static uint64_t occupied(uint64_t w) {
        uint64_t nz = (w | (w >> 1)) & kLow;
        return nz | (nz << 1);
    }

    void check_same_size(const SignVector& o) const;

    uint32_t size_ = 0;
    std::vector<uint64_t> words_;
};

struct SignVectorHash {
    size_t operator()(const SignVector& v) const { return v.hash(); }
};

// Free functions mirroring the usual notation.
SignVector compose(const SignVector& a, const SignVector& b);
std::vector<uint32_t> separating_set(const SignVector& a, const SignVector& b);

}  // namespace omfib
