#include "search/profile_counts.hpp"

#include <algorithm>
#include <array>
#include <mutex>
#include <unordered_map>

#include "core/sensitivity.hpp"
#include "core/walsh.hpp"
#include "search/packed.hpp"
#include "support/parallel.hpp"

namespace bf::search {

std::map<int, uint64_t> count_profiles_n4() {
    std::map<int, uint64_t> counts{{1, 0}, {2, 0}, {3, 0}};
    for (uint64_t t = 0; t < (1ull << 16); ++t) {
        if (popcount64(t) != 8) continue;  // [*,*,0] needs balance
        if (!full_dual_sensitive_points(t, 4)) continue;
        counts[1]++;
        if (dual_sensitive_points_order(t, 4, 2)) counts[2]++;
        if (dual_sensitive_points_order(t, 4, 3)) counts[3]++;
    }
    return counts;
}

std::map<int, uint64_t> count_profiles_n4_via_duals() {
    // (4,k,3)-functions: fully sensitive to order k with W(1111) = 0. Their
    // duals are the [4,k,0]-functions, a bijection.
    std::map<int, uint64_t> counts{{1, 0}, {2, 0}, {3, 0}};
    for (uint64_t t = 0; t < (1ull << 16); ++t) {
        int16_t w[16];
        walsh_packed<4>(t, w);
        if (w[15] != 0) continue;  // pdeg <= 3
        uint64_t s1 = full_sensitive_points(t, 4);
        if (!s1) continue;
        counts[1]++;
        TruthTable f = TruthTable::from_u64(4, t);
        if (max_sensitivity_order(f).value >= 2) counts[2]++;
        if (max_sensitivity_order(f).value >= 3) counts[3]++;
    }
    return counts;
}

namespace {

// Weight-2 points of F_2^5 in a fixed order; the packed signature stores
// W(u)/2 + 16 in 6 bits per point.
constexpr std::array<int, 10> kWeight2Points5 = {3, 5, 6, 9, 10, 12, 17, 18, 20, 24};

uint64_t pack_sig2(const int16_t (&w)[32], bool negate) {
    uint64_t key = 0;
    for (int i = 0; i < 10; ++i) {
        int v = w[kWeight2Points5[i]];
        if (negate) v = -v;
        key |= (uint64_t)(v / 2 + 16) << (6 * i);
    }
    return key;
}

constexpr uint64_t pack_sig2_zero() {
    uint64_t key = 0;
    for (int i = 0; i < 10; ++i) key |= (uint64_t)16 << (6 * i);
    return key;
}

Resilient5 build_resilient5() {
    // Balanced 4-variable halves keyed by their weight-<=1 Walsh signature.
    struct Half {
        uint16_t table;
        std::array<int16_t, 4> w1;
    };
    std::unordered_map<uint32_t, std::vector<uint16_t>> by_sig;
    std::vector<Half> halves;
    auto key_of = [](int16_t a, int16_t b, int16_t c, int16_t d) {
        return (uint32_t)(a / 2 + 8) | (uint32_t)(b / 2 + 8) << 5 |
               (uint32_t)(c / 2 + 8) << 10 | (uint32_t)(d / 2 + 8) << 15;
    };
    uint64_t t = 0x00ff;  // lowest weight-8 16-bit word
    for (;;) {
        int16_t w[16];
        walsh_packed<4>(t, w);
        halves.push_back({(uint16_t)t, {w[1], w[2], w[4], w[8]}});
        by_sig[key_of(w[1], w[2], w[4], w[8])].push_back((uint16_t)t);
        uint64_t nx = next_same_weight(t);
        if (nx == 0 || nx >= (1ull << 16)) break;
        t = nx;
    }

    Resilient5 r;
    for (const Half& h : halves) {
        auto it = by_sig.find(key_of((int16_t)-h.w1[0], (int16_t)-h.w1[1],
                                     (int16_t)-h.w1[2], (int16_t)-h.w1[3]));
        if (it == by_sig.end()) continue;
        for (uint16_t f2 : it->second) {
            uint32_t t5 = (uint32_t)h.table | ((uint32_t)f2 << 16);
            int16_t w5[32];
            walsh_packed<5>(t5, w5);
            r.tables.push_back(t5);
            r.sig2.push_back(pack_sig2(w5, false));
            r.neg_sig2.push_back(pack_sig2(w5, true));
            r.ds_mask.push_back((uint32_t)full_dual_sensitive_points(t5, 5));
        }
    }
    return r;
}

}  // namespace

const Resilient5& resilient5() {
    static const Resilient5 r = build_resilient5();
    return r;
}

std::map<int, uint64_t> count_profiles_n5() {
    const Resilient5& r = resilient5();
    std::map<int, uint64_t> counts{{1, 0}, {2, 0}, {3, 0}, {4, 0}};
    for (size_t i = 0; i < r.tables.size(); ++i) {
        if (!r.ds_mask[i]) continue;
        counts[1]++;
        uint64_t t = r.tables[i];
        if (dual_sensitive_points_order(t, 5, 2)) counts[2]++;
        if (dual_sensitive_points_order(t, 5, 3)) counts[3]++;
        if (dual_sensitive_points_order(t, 5, 4)) counts[4]++;
    }
    return counts;
}

namespace {

struct ChunkHits {
    std::array<uint64_t, 4> count{};  // index k = 1..3
    uint64_t both_1res = 0, both_2res = 0;
    std::vector<uint64_t> functions;
};

void score_pair(uint32_t t1, uint32_t t2, bool h1_2res, bool h2_2res,
                bool keep, ChunkHits& out) {
    uint64_t t6 = (uint64_t)t1 | ((uint64_t)t2 << 32);
    if (!full_dual_sensitive_points(t6, 6)) return;
    out.count[1]++;
    if (dual_sensitive_points_order(t6, 6, 2)) out.count[2]++;
    if (dual_sensitive_points_order(t6, 6, 3)) out.count[3]++;
    if (h1_2res && h2_2res) out.both_2res++;
    else out.both_1res++;
    if (keep) out.functions.push_back(t6);
}

}  // namespace

N6Result search_n6(bool keep_functions, unsigned partitions) {
    const Resilient5& r = resilient5();
    size_t m = r.tables.size();

    // Anti-match buckets over the full >=1-resilient set and over its fully
    // dual sensitive subset.
    std::unordered_map<uint64_t, std::vector<uint32_t>> all_by_sig, ds_by_sig;
    all_by_sig.reserve(m * 2);
    std::vector<uint32_t> ds_indices;
    for (size_t i = 0; i < m; ++i) {
        all_by_sig[r.sig2[i]].push_back((uint32_t)i);
        if (r.ds_mask[i]) {
            ds_by_sig[r.sig2[i]].push_back((uint32_t)i);
            ds_indices.push_back((uint32_t)i);
        }
    }

    if (partitions == 0) partitions = (unsigned)effective_threads();
    std::vector<ChunkHits> part1(partitions), part2(partitions);

    // Part 1: low half fully dual sensitive, high half any anti-match.
    parallel_chunks(0, ds_indices.size(), [&](unsigned c, uint64_t lo, uint64_t hi) {
        for (uint64_t ii = lo; ii < hi; ++ii) {
            uint32_t i = ds_indices[ii];
            auto it = all_by_sig.find(r.neg_sig2[i]);
            if (it == all_by_sig.end()) continue;
            bool h1_2res = r.sig2[i] == pack_sig2_zero();
            for (uint32_t j : it->second)
                score_pair(r.tables[i], r.tables[j], h1_2res,
                           r.sig2[j] == pack_sig2_zero(), keep_functions, part1[c]);
        }
    }, partitions);

    // Part 2: low half not fully dual sensitive, high half from the DS set.
    parallel_chunks(0, m, [&](unsigned c, uint64_t lo, uint64_t hi) {
        for (uint64_t i = lo; i < hi; ++i) {
            if (r.ds_mask[i]) continue;
            auto it = ds_by_sig.find(r.neg_sig2[i]);
            if (it == ds_by_sig.end()) continue;
            bool h1_2res = r.sig2[i] == pack_sig2_zero();
            for (uint32_t j : it->second)
                score_pair(r.tables[i], r.tables[j], h1_2res,
                           r.sig2[j] == pack_sig2_zero(), keep_functions, part2[c]);
        }
    }, partitions);

    N6Result res;
    res.counts = {{1, 0}, {2, 0}, {3, 0}};
    auto fold = [&](const std::vector<ChunkHits>& parts) {
        for (const ChunkHits& h : parts) {
            for (int k = 1; k <= 3; ++k) res.counts[k] += h.count[k];
            res.split_both_exactly_1res += h.both_1res;
            res.split_both_2res += h.both_2res;
            res.functions.insert(res.functions.end(), h.functions.begin(), h.functions.end());
        }
    };
    fold(part1);
    fold(part2);
    std::sort(res.functions.begin(), res.functions.end());

    // Re-check every kept hit through the core module; the search path is
    // not trusted for reported functions or their claimed orders.
    if (keep_functions) {
        std::array<uint64_t, 4> vk{};
        for (uint64_t t6 : res.functions) {
            TruthTable f = TruthTable::from_u64(6, t6);
            if (resiliency_order(f) < 2)
                throw VerifyError("search_n6: hit is not 2-resilient under core");
            int k = max_dual_sensitivity_order(f).value;
            if (k < 1) throw VerifyError("search_n6: hit is not fully dual sensitive");
            for (int j = 1; j <= std::min(k, 3); ++j) vk[j]++;
        }
        for (int k = 1; k <= 3; ++k)
            if (vk[k] != res.counts[k])
                throw VerifyError("search_n6: core re-verification count mismatch");
    }
    return res;
}

}  // namespace bf::search
