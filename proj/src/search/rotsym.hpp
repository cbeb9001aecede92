#pragma once

#include <cstdint>
#include <vector>

#include "core/truth_table.hpp"

namespace bf::search {

/// Partition of F_2^n into orbits under cyclic rotation of the coordinates
/// (binary necklaces). Representatives are the lexicographically smallest
/// member of each orbit.
struct RotSymClass {
    int n = 0;
    std::vector<int32_t> orbit_of;         // point -> orbit id
    std::vector<uint32_t> representatives; // orbit id -> lex-min point
    std::vector<uint16_t> orbit_size;
    int orbit_count() const { return (int)representatives.size(); }
};

RotSymClass rotsym_orbits(int n);  // 2 <= n <= 16

/// All rotation-symmetric n-variable functions that are m-resilient and
/// k-th order dual sensitive, found by depth-first search over orbit values
/// with the resiliency equations as pruned signed sums. Sorted by truth
/// table value. n <= 10.
std::vector<TruthTable> rotsym_search(int n, int m, int k);

/// Table of f followed by its reverse: out(2^n + i) = f(2^n - 1 - i).
TruthTable reverse_concat(const TruthTable& f);

}  // namespace bf::search
