#include "core/anf.hpp"

#include <algorithm>

#include "support/bits.hpp"

namespace bf {

namespace {

// In-place XOR zeta transform on a packed bit vector of 2^n entries:
// out[S] = XOR of in[T] over subsets T of S. Involution over F_2.
void xor_updown(std::vector<uint64_t>& v, int n) {
    // Levels inside a word use mask shifts; levels across words XOR blocks.
    static constexpr uint64_t kMask[6] = {
        0x5555555555555555ull, 0x3333333333333333ull, 0x0f0f0f0f0f0f0f0full,
        0x00ff00ff00ff00ffull, 0x0000ffff0000ffffull, 0x00000000ffffffffull};
    for (int lvl = 0; lvl < n; ++lvl) {
        if (lvl < 6) {
            int sh = 1 << lvl;
            for (auto& w : v) w ^= (w & kMask[lvl]) << sh;
        } else {
            size_t stride = size_t(1) << (lvl - 6);
            for (size_t block = 0; block < v.size(); block += stride * 2)
                for (size_t i = 0; i < stride; ++i) v[block + stride + i] ^= v[block + i];
        }
    }
}

}  // namespace

AnfPolynomial mobius_anf(const TruthTable& f) {
    AnfPolynomial a;
    a.n = f.n();
    a.coeffs.assign(f.words().begin(), f.words().end());
    xor_updown(a.coeffs, a.n);
    return a;
}

TruthTable anf_to_table(const AnfPolynomial& a) {
    std::vector<uint64_t> v = a.coeffs;
    xor_updown(v, a.n);
    TruthTable f(a.n);
    std::copy(v.begin(), v.end(), f.words_mut().begin());
    return f;
}

int algebraic_degree(const TruthTable& f) {
    AnfPolynomial a = mobius_anf(f);
    int d = 0;
    for (uint64_t s = 0; s < a.size(); ++s)
        if (a.get(s)) d = std::max(d, popcount64(s));
    return d;
}

}  // namespace bf
