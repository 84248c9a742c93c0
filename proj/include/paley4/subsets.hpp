#pragma once

#include <cassert>
#include <cstdint>
#include <span>
#include <vector>

namespace paley4 {

// Everything here indexes k-subsets of [0,n) by their colexicographic rank:
//   rank{v0 < v1 < ... < v_{k-1}} = C(v0,1) + C(v1,2) + ... + C(v_{k-1},k).
// Ranks are dense in [0, C(n,k)) and independent of n.

inline constexpr int kMaxVertices = 64;

std::uint64_t binom(int n, int k);

std::uint64_t subset_rank(std::span<const int> v);

// Fills out[0..k) with the subset of the given rank.
void subset_unrank(std::uint64_t rank, int k, std::span<int> out);

// Advances v to the colex successor among k-subsets of [0,n).
// Returns false (leaving v at the last subset) when none remains.
bool subset_next(std::span<int> v, int n);

inline std::uint64_t pair_rank(int u, int v) {
    assert(u != v);
    if (u > v) std::swap(u, v);
    return static_cast<std::uint64_t>(v) * (v - 1) / 2 + u;
}

class Bitset {
public:
    Bitset() = default;
    explicit Bitset(std::uint64_t nbits) : nbits_(nbits), words_((nbits + 63) / 64, 0) {}

    std::uint64_t size() const { return nbits_; }

    bool test(std::uint64_t i) const {
        assert(i < nbits_);
        return (words_[i >> 6] >> (i & 63)) & 1;
    }
    void set(std::uint64_t i) {
        assert(i < nbits_);
        words_[i >> 6] |= std::uint64_t{1} << (i & 63);
    }
    void reset(std::uint64_t i) {
        assert(i < nbits_);
        words_[i >> 6] &= ~(std::uint64_t{1} << (i & 63));
    }
    void assign(std::uint64_t i, bool b) { b ? set(i) : reset(i); }

    std::uint64_t count() const;

    // First set bit at position >= from, or size() if none.
    std::uint64_t next_set(std::uint64_t from) const;

    bool operator==(const Bitset&) const = default;

private:
    std::uint64_t nbits_ = 0;
    std::vector<std::uint64_t> words_;
};

// Word-aligned rank blocks for sharding scans across threads. Writers that
// set() bits of a shared Bitset stay race-free because distinct blocks touch
// distinct words.
inline constexpr std::uint64_t kScanBlockBits = 4096;

inline std::uint64_t scan_block_count(std::uint64_t total) {
    return (total + kScanBlockBits - 1) / kScanBlockBits;
}

} // namespace paley4
