#pragma once

#include <cstdint>
#include <functional>

namespace zhardy {

// Effective worker count: `requested` if positive, else the ZHARDY_THREADS
// environment variable, else hardware concurrency. Thread count must never
// influence computed values (fixed-order reductions everywhere), only speed.
int resolve_threads(int requested = 0);

// Run fn(i) for i in [0, n). Work items must be independent and write only
// to their own (preallocated) slots; scheduling order is unspecified.
// Exceptions from workers are rethrown on the calling thread.
void parallel_for(std::int64_t n, int threads, const std::function<void(std::int64_t)>& fn);

}  // namespace zhardy
