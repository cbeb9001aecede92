#pragma once

#include <bit>
#include <cstdint>

namespace bf {

inline int popcount64(uint64_t x) { return std::popcount(x); }

// <u,x> over F_2: parity of the AND.
inline int dot_parity(uint64_t u, uint64_t x) { return std::popcount(u & x) & 1; }

inline uint64_t bit_at(uint64_t word, int i) { return (word >> i) & 1u; }

// Next mask with the same popcount (Gosper). Returns 0 past the last one.
inline uint64_t next_same_weight(uint64_t v) {
    if (v == 0) return 0;
    uint64_t c = v & (~v + 1);
    uint64_t r = v + c;
    if (r == 0) return 0;  // overflowed: v was the top mask
    return (((r ^ v) >> 2) / c) | r;
}

// Visits every nonzero mask over `n` bits with popcount in [1, kmax].
// Fn: bool(uint64_t mask) — return false to stop early. Returns false if stopped.
template <typename Fn>
bool for_each_subset_up_to(int n, int kmax, Fn&& fn) {
    for (int k = 1; k <= kmax; ++k) {
        uint64_t m = (k == 64) ? ~0ull : ((1ull << k) - 1);
        uint64_t top = m << (n - k);
        for (;;) {
            if (!fn(m)) return false;
            if (m == top) break;
            m = next_same_weight(m);
        }
    }
    return true;
}

inline uint64_t binomial(int n, int k) {
    if (k < 0 || k > n) return 0;
    if (k > n - k) k = n - k;
    uint64_t r = 1;
    for (int i = 1; i <= k; ++i) r = r * (uint64_t)(n - k + i) / (uint64_t)i;
    return r;
}

}  // namespace bf
