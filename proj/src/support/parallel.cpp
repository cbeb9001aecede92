#include "support/parallel.hpp"

#include <algorithm>
#include <atomic>

namespace bf {

namespace {
std::atomic<int> g_thread_cap{0};
}

void set_thread_cap(int cap) { g_thread_cap.store(cap < 0 ? 0 : cap); }

int effective_threads() {
    int cap = g_thread_cap.load();
    unsigned hw = std::thread::hardware_concurrency();
    if (hw == 0) hw = 1;
    if (cap <= 0) return (int)hw;
    return std::min<int>(cap, (int)hw);
}

void parallel_chunks(uint64_t begin, uint64_t end,
                     const std::function<void(unsigned, uint64_t, uint64_t)>& fn,
                     unsigned parts) {
    if (end <= begin) return;
    if (parts == 0) parts = (unsigned)effective_threads();
    uint64_t total = end - begin;
    if (parts > total) parts = (unsigned)total;
    if (parts <= 1) {
        fn(0, begin, end);
        return;
    }
    std::vector<std::thread> pool;
    pool.reserve(parts);
    uint64_t base = total / parts, rem = total % parts;
    uint64_t lo = begin;
    for (unsigned c = 0; c < parts; ++c) {
        uint64_t hi = lo + base + (c < rem ? 1 : 0);
        pool.emplace_back([&fn, c, lo, hi] { fn(c, lo, hi); });
        lo = hi;
    }
    for (auto& t : pool) t.join();
}

}  // namespace bf
