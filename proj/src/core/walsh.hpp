#pragma once

#include <cstdint>
#include <vector>

#include "core/truth_table.hpp"

namespace bf {

/// W_f(u) = sum_x (-1)^(f(x) ^ u.x), 2^n exact signed integers.
struct WalshSpectrum {
    int n = 0;
    std::vector<int32_t> coeffs;

    int32_t at(uint64_t u) const { return coeffs[u]; }
    uint64_t size() const { return 1ull << n; }
};

/// Butterfly transform, O(n 2^n).
WalshSpectrum walsh_transform(const TruthTable& f);

/// Exact inverse; throws VerifyError if the coefficients are not a Boolean
/// function's spectrum.
TruthTable inverse_walsh(const WalshSpectrum& w);

/// max { wt(u) : W(u) != 0 }; 0 for constants.
int pdeg(const WalshSpectrum& w);
int pdeg(const TruthTable& f);

/// -1 when unbalanced, else the largest m with W(u) = 0 for all wt(u) <= m.
int resiliency_order(const WalshSpectrum& w);
int resiliency_order(const TruthTable& f);

/// 2^(n-1) - max|W|/2.
int64_t nonlinearity(const WalshSpectrum& w);
int64_t nonlinearity(const TruthTable& f);

}  // namespace bf
