#ifndef D2TF_BITSET_HPP
#define D2TF_BITSET_HPP

#include <array>
#include <bit>
#include <cstdint>
#include <cstring>

namespace d2tf {

inline constexpr int kMaxVertices = 512;
inline constexpr int kRowWords = kMaxVertices / 64;

// Fixed-width 512-bit row. Kernels pass the number of live words so loops
// never touch dead words; all mutators stay within the fixed array, so no
// allocation happens in inner loops.
struct BitRow {
    std::array<std::uint64_t, kRowWords> w{};

    void set(int i) { w[i >> 6] |= std::uint64_t{1} << (i & 63); }
    void reset(int i) { w[i >> 6] &= ~(std::uint64_t{1} << (i & 63)); }
    bool test(int i) const { return (w[i >> 6] >> (i & 63)) & 1; }

    void clear() { w.fill(0); }

    int count(int nwords = kRowWords) const {
        int c = 0;
        for (int k = 0; k < nwords; ++k) c += std::popcount(w[k]);
        return c;
    }

    bool any(int nwords = kRowWords) const {
        for (int k = 0; k < nwords; ++k)
            if (w[k]) return true;
        return false;
    }

    bool intersects(const BitRow& o, int nwords = kRowWords) const {
        for (int k = 0; k < nwords; ++k)
            if (w[k] & o.w[k]) return true;
        return false;
    }

    int count_and(const BitRow& o, int nwords = kRowWords) const {
        int c = 0;
        for (int k = 0; k < nwords; ++k) c += std::popcount(w[k] & o.w[k]);
        return c;
    }

    void and_with(const BitRow& o, int nwords = kRowWords) {
        for (int k = 0; k < nwords; ++k) w[k] &= o.w[k];
    }

    void or_with(const BitRow& o, int nwords = kRowWords) {
        for (int k = 0; k < nwords; ++k) w[k] |= o.w[k];
    }

    void andnot_with(const BitRow& o, int nwords = kRowWords) {
        for (int k = 0; k < nwords; ++k) w[k] &= ~o.w[k];
    }

    int first_set(int nwords = kRowWords) const {
        for (int k = 0; k < nwords; ++k)
            if (w[k]) return k * 64 + std::countr_zero(w[k]);
        return -1;
    }

    // First set bit strictly after i, or -1.
    int next_set(int i, int nwords = kRowWords) const {
        int k = (i + 1) >> 6;
        if (k >= nwords) return -1;
        std::uint64_t word = w[k] & (~std::uint64_t{0} << ((i + 1) & 63));
        while (true) {
            if (word) return k * 64 + std::countr_zero(word);
            if (++k >= nwords) return -1;
            word = w[k];
        }
    }

    friend bool operator==(const BitRow&, const BitRow&) = default;
};

// Iterate set bits: for (int v = row.first_set(nw); v >= 0; v = row.next_set(v, nw))

}  // namespace d2tf

#endif
