#pragma once

#include <cstdint>

#include "core/truth_table.hpp"

namespace bf {

struct WitnessedValue {
    int value = 0;
    uint64_t witness = 0;   // lowest point index attaining `value`
    bool has_witness = false;
};

/// s(f, x): number of single-bit flips that change f(x).
int sensitivity_at(const TruthTable& f, uint64_t x);

/// s(f) = max_x s(f, x), with the lowest witness. Constants report 0 with
/// witness 0 (every point attains the max).
WitnessedValue sensitivity(const TruthTable& f);

/// True iff f(x^(S)) != f(x) for every S with 1 <= |S| <= k.
bool is_k_order_sensitive_at(const TruthTable& f, uint64_t x, int k);

/// Largest k with a k-th order sensitive point; 0 when s(f) < n.
WitnessedValue max_sensitivity_order(const TruthTable& f);

/// Parity-alternating condition: flips of odd size <= k preserve the value,
/// flips of even size <= k complement it.
bool is_k_order_dual_sensitive_at(const TruthTable& f, uint64_t x, int k);

WitnessedValue max_dual_sensitivity_order(const TruthTable& f);

}  // namespace bf
