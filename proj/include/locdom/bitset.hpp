#pragma once

#include <cassert>
#include <cstdint>
#include <vector>

namespace locdom {

// Fixed-universe bitset over 64-bit words. Binary operations require both
// operands to share the same universe size.
class Bitset {
public:
    Bitset() = default;
    explicit Bitset(int nbits) : nbits_(nbits), w_((nbits + 63) / 64, 0) { assert(nbits >= 0); }

    int universe() const { return nbits_; }

    void set(int i) {
        assert(i >= 0 && i < nbits_);
        w_[i >> 6] |= std::uint64_t{1} << (i & 63);
    }
    void reset(int i) {
        assert(i >= 0 && i < nbits_);
        w_[i >> 6] &= ~(std::uint64_t{1} << (i & 63));
    }
    bool test(int i) const {
        assert(i >= 0 && i < nbits_);
        return (w_[i >> 6] >> (i & 63)) & 1;
    }
    void clear() { std::fill(w_.begin(), w_.end(), 0); }

    int count() const {
        int c = 0;
        for (std::uint64_t w : w_) c += __builtin_popcountll(w);
        return c;
    }
    bool any() const {
        for (std::uint64_t w : w_)
            if (w) return true;
        return false;
    }
    bool none() const { return !any(); }

    Bitset& operator|=(const Bitset& o) {
        assert(nbits_ == o.nbits_);
        for (std::size_t i = 0; i < w_.size(); i++) w_[i] |= o.w_[i];
        return *this;
    }
    Bitset& operator&=(const Bitset& o) {
        assert(nbits_ == o.nbits_);
        for (std::size_t i = 0; i < w_.size(); i++) w_[i] &= o.w_[i];
        return *this;
    }
    Bitset& operator^=(const Bitset& o) {
        assert(nbits_ == o.nbits_);
        for (std::size_t i = 0; i < w_.size(); i++) w_[i] ^= o.w_[i];
        return *this;
    }
    // this &= ~o
    Bitset& subtract(const Bitset& o) {
        assert(nbits_ == o.nbits_);
        for (std::size_t i = 0; i < w_.size(); i++) w_[i] &= ~o.w_[i];
        return *this;
    }

    bool intersects(const Bitset& o) const {
        assert(nbits_ == o.nbits_);
        for (std::size_t i = 0; i < w_.size(); i++)
            if (w_[i] & o.w_[i]) return true;
        return false;
    }
    bool is_subset_of(const Bitset& o) const {
        assert(nbits_ == o.nbits_);
        for (std::size_t i = 0; i < w_.size(); i++)
            if (w_[i] & ~o.w_[i]) return false;
        return true;
    }

    // Index of the lowest set bit, or -1 when empty.
    int find_first() const {
        for (std::size_t i = 0; i < w_.size(); i++)
            if (w_[i]) return int(i * 64) + __builtin_ctzll(w_[i]);
        return -1;
    }
    // Lowest set bit strictly greater than i, or -1.
    int find_next(int i) const {
        i++;
        if (i >= nbits_) return -1;
        std::size_t wi = std::size_t(i) >> 6;
        std::uint64_t w = w_[wi] & (~std::uint64_t{0} << (i & 63));
        if (w) return int(wi * 64) + __builtin_ctzll(w);
        for (wi++; wi < w_.size(); wi++)
            if (w_[wi]) return int(wi * 64) + __builtin_ctzll(w_[wi]);
        return -1;
    }

    friend bool operator==(const Bitset& a, const Bitset& b) {
        return a.nbits_ == b.nbits_ && a.w_ == b.w_;
    }
    friend bool operator!=(const Bitset& a, const Bitset& b) { return !(a == b); }
    // Word-wise order; usable as a map key.
    friend bool operator<(const Bitset& a, const Bitset& b) {
        assert(a.nbits_ == b.nbits_);
        return a.w_ < b.w_;
    }

    friend Bitset operator&(Bitset a, const Bitset& b) { return a &= b; }
    friend Bitset operator|(Bitset a, const Bitset& b) { return a |= b; }
    friend Bitset operator^(Bitset a, const Bitset& b) { return a ^= b; }

private:
    int nbits_ = 0;
    std::vector<std::uint64_t> w_;
};

}  // namespace locdom
