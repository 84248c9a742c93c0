#include "paley4/subsets.hpp"

#include <array>
#include <bit>

namespace paley4 {

namespace {

struct BinomTable {
    std::array<std::array<std::uint64_t, kMaxVertices + 1>, kMaxVertices + 1> c{};
    BinomTable() {
        for (int n = 0; n <= kMaxVertices; ++n) {
            c[n][0] = 1;
            for (int k = 1; k <= n; ++k)
                c[n][k] = c[n - 1][k - 1] + (k <= n - 1 ? c[n - 1][k] : 0);
        }
    }
};

const BinomTable& table() {
    static const BinomTable t;
    return t;
}

} // namespace

std::uint64_t binom(int n, int k) {
    if (k < 0 || k > n) return 0;
    assert(n <= kMaxVertices);
    return table().c[n][k];
}

std::uint64_t subset_rank(std::span<const int> v) {
    std::uint64_t r = 0;
    for (std::size_t i = 0; i < v.size(); ++i) {
        assert(i == 0 || v[i] > v[i - 1]);
        r += binom(v[i], static_cast<int>(i) + 1);
    }
    return r;
}

void subset_unrank(std::uint64_t rank, int k, std::span<int> out) {
    assert(static_cast<int>(out.size()) >= k);
    for (int i = k; i >= 1; --i) {
        // largest c with C(c,i) <= rank
        int c = i - 1;
        while (c + 1 <= kMaxVertices && binom(c + 1, i) <= rank) ++c;
        out[i - 1] = c;
        rank -= binom(c, i);
    }
}

bool subset_next(std::span<int> v, int n) {
    const int k = static_cast<int>(v.size());
    for (int i = 0; i < k; ++i) {
        const int limit = (i + 1 < k) ? v[i + 1] : n;
        if (v[i] + 1 < limit) {
            ++v[i];
            for (int j = 0; j < i; ++j) v[j] = j;
            return true;
        }
    }
    return false;
}

std::uint64_t Bitset::count() const {
    std::uint64_t total = 0;
    for (std::uint64_t w : words_) total += std::popcount(w);
    return total;
}

std::uint64_t Bitset::next_set(std::uint64_t from) const {
    if (from >= nbits_) return nbits_;
    std::uint64_t wi = from >> 6;
    std::uint64_t w = words_[wi] & (~std::uint64_t{0} << (from & 63));
    while (true) {
        if (w) {
            std::uint64_t pos = (wi << 6) + std::countr_zero(w);
            return pos < nbits_ ? pos : nbits_;
        }
        if (++wi >= words_.size()) return nbits_;
        w = words_[wi];
    }
}

} // namespace paley4
