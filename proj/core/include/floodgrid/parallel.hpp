#pragma once

#include <cstddef>
#include <functional>

namespace floodgrid {

// Worker count: hardware concurrency, capped by FLOODGRID_THREADS when set.
unsigned default_thread_count();

// Calls fn(i) for i in [0, n), split into contiguous chunks over at most
// `threads` workers. The first exception thrown by a worker is rethrown.
void parallel_for(std::size_t n, unsigned threads, const std::function<void(std::size_t)> &fn);

} // namespace floodgrid
