#include "core/walsh.hpp"

#include <algorithm>
#include <cstdlib>

#include "support/bits.hpp"

namespace bf {

WalshSpectrum walsh_transform(const TruthTable& f) {
    WalshSpectrum w;
    w.n = f.n();
    uint64_t sz = f.size();
    w.coeffs.resize(sz);
    for (uint64_t i = 0; i < sz; ++i) w.coeffs[i] = f.get(i) ? -1 : 1;
    for (uint64_t step = 1; step < sz; step <<= 1) {
        for (uint64_t block = 0; block < sz; block += step << 1) {
            for (uint64_t i = block; i < block + step; ++i) {
                int32_t a = w.coeffs[i], b = w.coeffs[i + step];
                w.coeffs[i] = a + b;
                w.coeffs[i + step] = a - b;
            }
        }
    }
    return w;
}

TruthTable inverse_walsh(const WalshSpectrum& w) {
    // The same butterfly is its own inverse up to a 2^n factor.
    std::vector<int64_t> v(w.coeffs.begin(), w.coeffs.end());
    uint64_t sz = w.size();
    for (uint64_t step = 1; step < sz; step <<= 1) {
        for (uint64_t block = 0; block < sz; block += step << 1) {
            for (uint64_t i = block; i < block + step; ++i) {
                int64_t a = v[i], b = v[i + step];
                v[i] = a + b;
                v[i + step] = a - b;
            }
        }
    }
    TruthTable f(w.n);
    int64_t full = (int64_t)sz;
    for (uint64_t i = 0; i < sz; ++i) {
        if (v[i] == full) continue;          // (+1) -> f(i) = 0
        if (v[i] == -full) f.set(i, 1);      // (-1) -> f(i) = 1
        else throw VerifyError("inverse_walsh: coefficients are not a Boolean spectrum");
    }
    return f;
}

int pdeg(const WalshSpectrum& w) {
    int d = 0;
    for (uint64_t u = 0; u < w.size(); ++u)
        if (w.coeffs[u] != 0) d = std::max(d, popcount64(u));
    return d;
}

int pdeg(const TruthTable& f) { return pdeg(walsh_transform(f)); }

int resiliency_order(const WalshSpectrum& w) {
    if (w.coeffs[0] != 0) return -1;
    int m = w.n;  // lowered by the lightest nonzero coefficient
    for (uint64_t u = 1; u < w.size(); ++u)
        if (w.coeffs[u] != 0) m = std::min(m, popcount64(u) - 1);
    return m == w.n ? w.n - 1 : m;  // only parity reaches weight-n-only support
}

int resiliency_order(const TruthTable& f) { return resiliency_order(walsh_transform(f)); }

int64_t nonlinearity(const WalshSpectrum& w) {
    int64_t mx = 0;
    for (int32_t c : w.coeffs) mx = std::max<int64_t>(mx, std::abs((int64_t)c));
    return (1ll << (w.n - 1)) - mx / 2;
}

int64_t nonlinearity(const TruthTable& f) { return nonlinearity(walsh_transform(f)); }

}  // namespace bf
