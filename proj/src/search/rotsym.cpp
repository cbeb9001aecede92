#include "search/rotsym.hpp"

#include <algorithm>
#include <functional>
#include <numeric>

#include "core/sensitivity.hpp"
#include "core/walsh.hpp"
#include "support/bits.hpp"
#include "support/parallel.hpp"

namespace bf::search {

namespace {

uint32_t rotate_point(uint32_t x, int n) {
    return ((x << 1) | (x >> (n - 1))) & ((1u << n) - 1);
}

}  // namespace

RotSymClass rotsym_orbits(int n) {
    if (n < 2 || n > 16) throw ArgumentError("rotsym_orbits: need 2 <= n <= 16");
    RotSymClass c;
    c.n = n;
    uint32_t sz = 1u << n;
    c.orbit_of.assign(sz, -1);
    for (uint32_t x = 0; x < sz; ++x) {
        if (c.orbit_of[x] >= 0) continue;
        int32_t id = (int32_t)c.representatives.size();
        c.representatives.push_back(x);  // scan order makes x the lex-min member
        uint16_t len = 0;
        uint32_t y = x;
        do {
            if (c.orbit_of[y] < 0) {
                c.orbit_of[y] = id;
                ++len;
            }
            y = rotate_point(y, n);
        } while (y != x);
        c.orbit_size.push_back(len);
    }
    return c;
}

namespace {

struct Constraint {
    std::vector<int32_t> coeff;       // per branch position
    std::vector<int64_t> suffix_abs;  // sum |coeff| over positions >= d
};

// Dual-sensitivity conditions for one candidate witness, expressed over
// orbit ids so solutions never need a materialized table. Rotating a
// witness rotates the whole condition set, so orbit representatives cover
// every witness.
struct WitnessConditions {
    int32_t base_orbit;
    std::vector<std::pair<int32_t, uint8_t>> checks;  // (orbit of x^S, equal?)
};

struct SearchContext {
    const RotSymClass* cls;
    std::vector<int> order;               // branch position -> orbit id
    std::vector<Constraint> cons;
    std::vector<WitnessConditions> wits;  // one per orbit representative

    bool witness_survives(const std::vector<int8_t>& orbit_val) const {
        for (const WitnessConditions& w : wits) {
            int8_t v = orbit_val[w.base_orbit];
            bool ok = true;
            for (auto [o, eq] : w.checks) {
                if ((orbit_val[o] == v) != (bool)eq) { ok = false; break; }
            }
            if (ok) return true;
        }
        return false;
    }
};

struct SubDfs {
    const SearchContext* ctx;
    std::vector<int64_t> partial;      // per constraint
    std::vector<int8_t> sign;          // per branch position, +1/-1
    std::vector<int8_t> orbit_val;     // per orbit id, 0/1
    std::vector<std::vector<int8_t>> hits;  // orbit-value snapshots

    bool feasible(int depth) const {
        for (size_t j = 0; j < ctx->cons.size(); ++j) {
            int64_t rest = ctx->cons[j].suffix_abs[depth];
            if (std::abs(partial[j]) > rest) return false;
            if (((partial[j] + rest) & 1) != 0) return false;
        }
        return true;
    }

    void assign(int depth, int s) {
        sign[depth] = (int8_t)s;
        orbit_val[ctx->order[depth]] = (int8_t)(s < 0);
        for (size_t j = 0; j < ctx->cons.size(); ++j)
            partial[j] += s * ctx->cons[j].coeff[depth];
    }
    void unassign(int depth, int s) {
        for (size_t j = 0; j < ctx->cons.size(); ++j)
            partial[j] -= s * ctx->cons[j].coeff[depth];
    }

    void run(int depth) {
        if (depth == (int)ctx->order.size()) {
            if (ctx->witness_survives(orbit_val)) hits.push_back(orbit_val);
            return;
        }
        for (int s = +1; s >= -1; s -= 2) {
            assign(depth, s);
            if (feasible(depth + 1)) run(depth + 1);
            unassign(depth, s);
        }
    }
};

}  // namespace

std::vector<TruthTable> rotsym_search(int n, int m, int k) {
    if (n > 10) throw CapacityError("rotsym_search: n > 10");
    if (m < 0 || m >= n) throw ArgumentError("rotsym_search: bad resiliency target");
    if (k < 1 || k > n) throw ArgumentError("rotsym_search: bad dual-order target");
    RotSymClass cls = rotsym_orbits(n);
    int nor = cls.orbit_count();

    SearchContext ctx;
    ctx.cls = &cls;

    // Large orbits first: they dominate the resiliency sums.
    ctx.order.resize(nor);
    std::iota(ctx.order.begin(), ctx.order.end(), 0);
    std::stable_sort(ctx.order.begin(), ctx.order.end(), [&](int a, int b) {
        return cls.orbit_size[a] > cls.orbit_size[b];
    });

    // One equation per orbit representative u with wt(u) <= m; rotation
    // covariance of W makes these cover every u of that weight.
    for (int o = 0; o < nor; ++o) {
        uint32_t u = cls.representatives[o];
        if (popcount64(u) > m) continue;
        Constraint con;
        std::vector<int32_t> per_orbit(nor, 0);
        for (uint32_t x = 0; x < (1u << n); ++x)
            per_orbit[cls.orbit_of[x]] += dot_parity(u, x) ? -1 : 1;
        con.coeff.resize(nor);
        for (int pos = 0; pos < nor; ++pos) con.coeff[pos] = per_orbit[ctx.order[pos]];
        con.suffix_abs.resize(nor + 1, 0);
        for (int pos = nor - 1; pos >= 0; --pos)
            con.suffix_abs[pos] = con.suffix_abs[pos + 1] + std::abs((int64_t)con.coeff[pos]);
        ctx.cons.push_back(std::move(con));
    }

    // Witness conditions at each orbit representative, smallest flip sets
    // first so violations are hit early.
    for (int o = 0; o < nor; ++o) {
        WitnessConditions w;
        w.base_orbit = o;
        uint32_t x = cls.representatives[o];
        for_each_subset_up_to(n, k, [&](uint64_t s) {
            bool eq = popcount64(s) & 1;  // odd flips preserve, even complement
            w.checks.emplace_back(cls.orbit_of[x ^ (uint32_t)s], (uint8_t)eq);
            return true;
        });
        ctx.wits.push_back(std::move(w));
    }

    // Split the tree at a fixed depth: enumerate alive prefixes
    // sequentially, then finish each subtree on the worker pool.
    int split = std::min(nor, 14);
    struct Prefix {
        std::vector<int8_t> sign;
        std::vector<int64_t> partial;
    };
    std::vector<Prefix> alive;
    {
        SubDfs probe;
        probe.ctx = &ctx;
        probe.partial.assign(ctx.cons.size(), 0);
        probe.sign.assign(nor, 0);
        probe.orbit_val.assign(nor, 0);
        std::function<void(int)> walk = [&](int depth) {
            if (depth == split) {
                alive.push_back({probe.sign, probe.partial});
                return;
            }
            for (int s = +1; s >= -1; s -= 2) {
                probe.assign(depth, s);
                if (probe.feasible(depth + 1)) walk(depth + 1);
                probe.unassign(depth, s);
            }
        };
        walk(0);
    }

    unsigned parts = (unsigned)effective_threads();
    std::vector<std::vector<std::vector<int8_t>>> chunk_hits(parts);
    parallel_chunks(0, alive.size(), [&](unsigned c, uint64_t lo, uint64_t hi) {
        SubDfs dfs;
        dfs.ctx = &ctx;
        dfs.sign.assign(nor, 0);
        dfs.orbit_val.assign(nor, 0);
        for (uint64_t idx = lo; idx < hi; ++idx) {
            const Prefix& p = alive[idx];
            dfs.partial = p.partial;
            for (int d = 0; d < split; ++d) {
                dfs.sign[d] = p.sign[d];
                dfs.orbit_val[ctx.order[d]] = (int8_t)(p.sign[d] < 0);
            }
            dfs.run(split);
        }
        chunk_hits[c] = std::move(dfs.hits);
    }, parts);

    std::vector<TruthTable> out;
    for (const auto& chunk : chunk_hits) {
        for (const auto& vals : chunk) {
            TruthTable f(n);
            for (uint32_t x = 0; x < (1u << n); ++x)
                if (vals[cls.orbit_of[x]]) f.set(x, 1);
            // Survivors are re-checked through the core module before they
            // are reported.
            if (resiliency_order(f) < m)
                throw VerifyError("rotsym_search: hit failed resiliency re-check");
            if (max_dual_sensitivity_order(f).value < k)
                throw VerifyError("rotsym_search: hit failed dual-order re-check");
            out.push_back(f);
        }
    }
    std::sort(out.begin(), out.end(), [](const TruthTable& a, const TruthTable& b) {
        auto wa = a.words(), wb = b.words();
        for (size_t i = wa.size(); i-- > 0;)
            if (wa[i] != wb[i]) return wa[i] < wb[i];
        return false;
    });
    return out;
}

TruthTable reverse_concat(const TruthTable& f) {
    TruthTable out(f.n() + 1);
    uint64_t half = f.size();
    for (uint64_t i = 0; i < half; ++i) {
        out.set(i, f.get(i));
        out.set(half + i, f.get(half - 1 - i));
    }
    return out;
}

}  // namespace bf::search
