#include "omfib/sign_vector.hpp"

#include <stdexcept>

namespace omfib {

char sign_char(Sign s) {
    switch (s) {
        case Sign::Plus: return '+';
        case Sign::Minus: return '-';
        default: return '0';
    }
}

Sign sign_from_char(char c) {
    switch (c) {
        case '+': return Sign::Plus;
        case '-': return Sign::Minus;
        case '0': return Sign::Zero;
        default: throw std::invalid_argument(std::string("invalid sign character '") + c + "'");
    }
}

SignVector SignVector::parse(std::string_view s) {
    SignVector v(static_cast<uint32_t>(s.size()));
    for (uint32_t i = 0; i < s.size(); ++i) v.set(i, sign_from_char(s[i]));
    return v;
}

void SignVector::check_same_size(const SignVector& o) const {
    if (size_ != o.size_)
        throw std::invalid_argument("sign vector length mismatch: " + std::to_string(size_) +
                                    " vs " + std::to_string(o.size_));
}

SignVector SignVector::composed(const SignVector& o) const {
    check_same_size(o);
    SignVector r(size_);
    for (size_t i = 0; i < words_.size(); ++i)
        r.words_[i] = words_[i] | (o.words_[i] & ~occupied(words_[i]));
    return r;
}

std::vector<uint32_t> SignVector::separating_set(const SignVector& o) const {
    check_same_size(o);
    std::vector<uint32_t> out;
    for (size_t i = 0; i < words_.size(); ++i) {
        uint64_t x = words_[i] ^ o.words_[i];
        uint64_t sep = x & (x >> 1) & kLow;
        while (sep) {
            uint32_t b = static_cast<uint32_t>(__builtin_ctzll(sep));
            out.push_back(static_cast<uint32_t>(i * 32 + b / 2));
            sep &= sep - 1;
        }
    }
    return out;
}

uint32_t SignVector::separation(const SignVector& o) const {
    check_same_size(o);
    uint32_t c = 0;
    for (size_t i = 0; i < words_.size(); ++i) {
        uint64_t x = words_[i] ^ o.words_[i];
        c += static_cast<uint32_t>(__builtin_popcountll(x & (x >> 1) & kLow));
    }
    return c;
}

Bitset SignVector::separating_bits(const SignVector& o) const {
    check_same_size(o);
    Bitset bs(size_);
    for (size_t i = 0; i < words_.size(); ++i) {
        uint64_t x = words_[i] ^ o.words_[i];
        uint64_t sep = x & (x >> 1) & kLow;
        while (sep) {
            uint32_t b = static_cast<uint32_t>(__builtin_ctzll(sep));
            bs.set(static_cast<uint32_t>(i * 32 + b / 2));
            sep &= sep - 1;
        }
    }
    return bs;
}

std::vector<uint32_t> SignVector::zero_set() const {
    std::vector<uint32_t> out;
    for (uint32_t e = 0; e < size_; ++e)
        if (at(e) == Sign::Zero) out.push_back(e);
    return out;
}

Bitset SignVector::zero_bits() const {
    Bitset bs(size_);
    for (uint32_t e = 0; e < size_; ++e)
        if (at(e) == Sign::Zero) bs.set(e);
    return bs;
}

uint32_t SignVector::zero_count() const {
    uint32_t nonzero = 0;
    for (uint64_t w : words_)
        nonzero += static_cast<uint32_t>(__builtin_popcountll((w | (w >> 1)) & kLow));
    return size_ - nonzero;
}

std::string SignVector::str() const {
    std::string s(size_, '0');
    for (uint32_t e = 0; e < size_; ++e) s[e] = sign_char(at(e));
    return s;
}

bool SignVector::lex_less(const SignVector& a, const SignVector& b) {
    for (size_t i = 0; i < a.words_.size(); ++i) {
        uint64_t diff = a.words_[i] ^ b.words_[i];
        if (!diff) continue;
        uint32_t lane = static_cast<uint32_t>(__builtin_ctzll(diff)) / 2;
        uint32_t va = (a.words_[i] >> (lane * 2)) & 3u;
        uint32_t vb = (b.words_[i] >> (lane * 2)) & 3u;
        return va < vb;  // encoding order 0 < 1 < 2 matches 0 < + < -
    }
    return false;
}

SignVector compose(const SignVector& a, const SignVector& b) { return a.composed(b); }

std::vector<uint32_t> separating_set(const SignVector& a, const SignVector& b) {
    return a.separating_set(b);
}

}  // namespace omfib
