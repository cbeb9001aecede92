#include "core/sensitivity.hpp"

#include <vector>

#include "support/bits.hpp"

namespace bf {

int sensitivity_at(const TruthTable& f, uint64_t x) {
    if (x >= f.size()) throw ArgumentError("sensitivity_at: point out of range");
    int fx = f.get(x), s = 0;
    for (int i = 0; i < f.n(); ++i) s += (f.get(x ^ (1ull << i)) != fx);
    return s;
}

WitnessedValue sensitivity(const TruthTable& f) {
    WitnessedValue r{0, 0, true};
    for (uint64_t x = 0; x < f.size(); ++x) {
        int s = sensitivity_at(f, x);
        if (s > r.value) { r.value = s; r.witness = x; }
        if (r.value == f.n()) break;  // cannot improve; lowest witness kept
    }
    return r;
}

bool is_k_order_sensitive_at(const TruthTable& f, uint64_t x, int k) {
    if (x >= f.size()) throw ArgumentError("is_k_order_sensitive_at: point out of range");
    if (k < 1 || k > f.n()) throw ArgumentError("is_k_order_sensitive_at: bad order");
    int fx = f.get(x);
    return for_each_subset_up_to(f.n(), k, [&](uint64_t s) {
        return f.get(x ^ s) != fx;
    });
}

namespace {

// Extends a point known to satisfy order j0 to its maximal order.
int order_at(const TruthTable& f, uint64_t x, int from) {
    int k = from;
    while (k < f.n() && is_k_order_sensitive_at(f, x, k + 1)) ++k;
    return k;
}

}  // namespace

WitnessedValue max_sensitivity_order(const TruthTable& f) {
    // Order >= 1 requires a fully sensitive point, which prunes candidates.
    WitnessedValue r{0, 0, false};
    int n = f.n();
    for (uint64_t x = 0; x < f.size(); ++x) {
        if (sensitivity_at(f, x) != n) continue;
        int k = order_at(f, x, 1);
        if (k > r.value) { r.value = k; r.witness = x; r.has_witness = true; }
        if (r.value == n) break;
    }
    return r;
}

bool is_k_order_dual_sensitive_at(const TruthTable& f, uint64_t x, int k) {
    if (x >= f.size()) throw ArgumentError("is_k_order_dual_sensitive_at: point out of range");
    if (k < 1 || k > f.n()) throw ArgumentError("is_k_order_dual_sensitive_at: bad order");
    int fx = f.get(x);
    return for_each_subset_up_to(f.n(), k, [&](uint64_t s) {
        int want = (popcount64(s) & 1) ? fx : fx ^ 1;
        return f.get(x ^ s) == want;
    });
}

namespace {

int dual_order_at(const TruthTable& f, uint64_t x, int from) {
    int k = from;
    while (k < f.n() && is_k_order_dual_sensitive_at(f, x, k + 1)) ++k;
    return k;
}

}  // namespace

WitnessedValue max_dual_sensitivity_order(const TruthTable& f) {
    WitnessedValue r{0, 0, false};
    int n = f.n();
    for (uint64_t x = 0; x < f.size(); ++x) {
        // Order >= 1 means every single flip preserves the value.
        int fx = f.get(x);
        bool ok = true;
        for (int i = 0; ok && i < n; ++i) ok = f.get(x ^ (1ull << i)) == fx;
        if (!ok) continue;
        int k = dual_order_at(f, x, 1);
        if (k > r.value) { r.value = k; r.witness = x; r.has_witness = true; }
        if (r.value == n) break;
    }
    return r;
}

}  // namespace bf
