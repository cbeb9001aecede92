#pragma once

#include <cstdint>
#include <functional>
#include <thread>
#include <vector>

namespace bf {

// Global worker cap (CLI --threads). 0 = hardware concurrency.
void set_thread_cap(int cap);
int effective_threads();

// Splits [begin, end) into `parts` contiguous chunks and runs
// fn(chunk_index, lo, hi) on a worker pool. Chunk boundaries depend only on
// `parts`, so per-chunk results can be reduced in chunk order for
// thread-count-independent totals. parts == 0 uses effective_threads().
void parallel_chunks(uint64_t begin, uint64_t end,
                     const std::function<void(unsigned, uint64_t, uint64_t)>& fn,
                     unsigned parts = 0);

}  // namespace bf
