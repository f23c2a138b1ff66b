#pragma once

#include <cstddef>
#include <functional>

namespace ballres {

// Worker cap: min(hardware_concurrency, THREADS env var if set).
int worker_count();

// Runs fn(i) for i in [0, n). Work is split into contiguous blocks over the
// worker threads; fn must only write to slots owned by index i, so the result
// is identical for any thread count. Falls back to serial for small n.
void parallel_for(std::size_t n, const std::function<void(std::size_t)>& fn);

}  // namespace ballres
