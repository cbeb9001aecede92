#pragma once

#include <array>
#include <cstdint>

#include "support/bits.hpp"

namespace bf::search {

// Fast kernels for functions of n <= 6 variables packed into one uint64_t
// (bit x of the word = f(x)). The n <= 6 searches live on these; results are
// re-verified through the core module before being reported.

inline constexpr std::array<uint64_t, 6> kVarMask = {
    0xaaaaaaaaaaaaaaaaull, 0xccccccccccccccccull, 0xf0f0f0f0f0f0f0f0ull,
    0xff00ff00ff00ff00ull, 0xffff0000ffff0000ull, 0xffffffff00000000ull};

inline uint64_t table_mask(int n) { return n == 6 ? ~0ull : ((1ull << (1 << n)) - 1); }

// t[x ^ (1<<i)] for all x at once (delta swap along variable i).
inline uint64_t neighbor(uint64_t t, int i) {
    int sh = 1 << i;
    uint64_t hi = kVarMask[i];
    return ((t & hi) >> sh) | ((t & ~hi) << sh);
}

// Bitmask of points where every single flip preserves the value
// (fully dual sensitive witnesses).
inline uint64_t full_dual_sensitive_points(uint64_t t, int n) {
    uint64_t ok = table_mask(n);
    for (int i = 0; i < n && ok; ++i) ok &= ~(t ^ neighbor(t, i));
    return ok;
}

// Bitmask of points where every single flip changes the value
// (fully sensitive witnesses).
inline uint64_t full_sensitive_points(uint64_t t, int n) {
    uint64_t ok = table_mask(n);
    for (int i = 0; i < n && ok; ++i) ok &= t ^ neighbor(t, i);
    return ok;
}

// Points satisfying the dual-sensitivity condition for all |S| <= k.
inline uint64_t dual_sensitive_points_order(uint64_t t, int n, int k) {
    uint64_t ok = full_dual_sensitive_points(t, n);
    for (int sz = 2; sz <= k && ok; ++sz) {
        uint64_t s = (1ull << sz) - 1;
        uint64_t top = s << (n - sz);
        for (;;) {
            uint64_t shifted = t;
            for (int i = 0; i < n; ++i)
                if ((s >> i) & 1) shifted = neighbor(shifted, i);
            uint64_t diff = t ^ shifted;  // bit x: f(x) != f(x^S)
            ok &= (sz & 1) ? ~diff : diff;
            if (!ok || s == top) break;
            s = next_same_weight(s);
        }
    }
    return ok;
}

// Walsh spectrum of a packed table, exact, small enough for the stack.
template <int N>
inline void walsh_packed(uint64_t t, int16_t (&w)[1 << N]) {
    constexpr int sz = 1 << N;
    for (int i = 0; i < sz; ++i) w[i] = ((t >> i) & 1) ? -1 : 1;
    for (int step = 1; step < sz; step <<= 1)
        for (int block = 0; block < sz; block += step << 1)
            for (int i = block; i < block + step; ++i) {
                int16_t a = w[i], b = w[i + step];
                w[i] = (int16_t)(a + b);
                w[i + step] = (int16_t)(a - b);
            }
}

}  // namespace bf::search
