#pragma once

#include <cstdint>
#include <optional>
#include <string>

#include "core/truth_table.hpp"

namespace bf {

/// Every per-function property in one record. (n,k,p)-functions are k-th
/// order sensitive with pdeg <= p; [n,k,m]-functions are k-th order dual
/// sensitive and m-resilient.
struct FunctionProfile {
    int n = 0;
    int pdeg = 0;
    int adeg = 0;
    int resiliency_order = -1;   // -1 for unbalanced functions
    int64_t nonlinearity = 0;
    int sensitivity = 0;
    int sensitivity_order = 0;
    int dual_sensitivity_order = 0;
    bool balanced = false;
    std::optional<uint64_t> sensitivity_witness;
    std::optional<uint64_t> dual_witness;
};

FunctionProfile profile(const TruthTable& f);
std::string profile_json(const FunctionProfile& p);

}  // namespace bf
