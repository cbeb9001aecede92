#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <vector>

#include "core/truth_table.hpp"

namespace bf::search {

struct ProfileQuery {
    int n = 0;
    int min_resiliency = 0;
    std::optional<int> exact_dual_order;
    bool count_only = true;
};

/// Full enumeration of all 2^16 functions; counts of [4,k,0]-functions for
/// k = 1, 2, 3 (k-th order dual sensitive, balanced).
std::map<int, uint64_t> count_profiles_n4();

/// Independent pipeline: iterates (4,k,3)-functions (k-th order sensitive,
/// pdeg <= 3) whose duals are exactly the [4,k,0]-functions.
std::map<int, uint64_t> count_profiles_n4_via_duals();

/// Every (at least) 1-resilient 5-variable function, built by pairing
/// balanced 4-variable halves through W(u,0) = W1(u)+W2(u),
/// W(u,1) = W1(u)-W2(u). Never touches the 2^32 raw table space.
struct Resilient5 {
    std::vector<uint32_t> tables;
    std::vector<uint64_t> sig2;      // packed weight-2 Walsh signature
    std::vector<uint64_t> neg_sig2;  // signature an anti-matching half must have
    std::vector<uint32_t> ds_mask;   // fully-dual-sensitive witness points
};
const Resilient5& resilient5();

/// Counts of [5,k,1]-functions for k = 1..4.
std::map<int, uint64_t> count_profiles_n5();

struct N6Result {
    std::map<int, uint64_t> counts;  // k -> #[6,k,2]-functions, k = 1,2,3
    uint64_t split_both_exactly_1res = 0;
    uint64_t split_both_2res = 0;
    std::vector<uint64_t> functions;  // packed tables, sorted by table value
};

/// [6,k,2] search over half-pairs: both halves >= 1-resilient with
/// anti-matching weight-2 signatures, at least one half fully dual
/// sensitive. Counts are exact and partition-independent. Every hit is
/// re-verified through the core module.
N6Result search_n6(bool keep_functions = false, unsigned partitions = 0);

}  // namespace bf::search
