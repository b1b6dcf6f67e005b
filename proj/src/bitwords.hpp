#pragma once

#include <bit>
#include <cstdint>
#include <vector>

namespace rdvhc::detail {

// Fixed-width bitset over 64-bit words, sized for n bits.
using Words = std::vector<std::uint64_t>;

inline Words make_words(int n) { return Words((n + 63) / 64, 0); }

inline void set_bit(Words& w, int i) { w[i >> 6] |= std::uint64_t{1} << (i & 63); }
inline void clear_bit(Words& w, int i) { w[i >> 6] &= ~(std::uint64_t{1} << (i & 63)); }
inline bool test_bit(const Words& w, int i) {
    return (w[i >> 6] >> (i & 63)) & 1u;
}

inline int popcount(const Words& w) {
    int c = 0;
    for (auto word : w) c += std::popcount(word);
    return c;
}

inline bool any(const Words& w) {
    for (auto word : w)
        if (word) return true;
    return false;
}

template <typename F>
inline void for_each_bit(const Words& w, F&& f) {
    for (std::size_t k = 0; k < w.size(); ++k) {
        std::uint64_t word = w[k];
        while (word) {
            int b = std::countr_zero(word);
            f(static_cast<int>(k * 64 + b));
            word &= word - 1;
        }
    }
}

inline Words and_words(const Words& a, const Words& b) {
    Words r(a.size());
    for (std::size_t k = 0; k < a.size(); ++k) r[k] = a[k] & b[k];
    return r;
}

inline Words andnot_words(const Words& a, const Words& b) {
    Words r(a.size());
    for (std::size_t k = 0; k < a.size(); ++k) r[k] = a[k] & ~b[k];
    return r;
}

}  // namespace rdvhc::detail
