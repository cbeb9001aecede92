#pragma once

#include <cstdint>
#include <vector>

#include "core/truth_table.hpp"

namespace bf {

/// F_2 algebraic normal form: coeff at index(S) is the coefficient of the
/// monomial prod_{j in S} x_j. Stored packed, like a truth table.
struct AnfPolynomial {
    int n = 0;
    std::vector<uint64_t> coeffs;  // 2^n bits

    int get(uint64_t s) const { return (int)((coeffs[s >> 6] >> (s & 63)) & 1u); }
    void set(uint64_t s, int b) {
        uint64_t m = 1ull << (s & 63);
        if (b) coeffs[s >> 6] |= m; else coeffs[s >> 6] &= ~m;
    }
    uint64_t size() const { return 1ull << n; }
};

/// Subset-sum Moebius transform over F_2 (an involution).
AnfPolynomial mobius_anf(const TruthTable& f);
TruthTable anf_to_table(const AnfPolynomial& a);

/// max wt(S) with ANF coefficient 1; 0 for constants.
int algebraic_degree(const TruthTable& f);

}  // namespace bf
