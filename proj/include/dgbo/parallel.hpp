#pragma once

#include <cstddef>
#include <functional>

namespace dgbo {

// Worker count from DGBO_THREADS, else hardware concurrency.
int thread_count();

// Calls fn(i) for every i in [0, n). Work is split by index, never by thread,
// so reductions done in index order are identical for any thread count.
// The exception of the lowest failing index is rethrown.
void parallel_for(std::size_t n, const std::function<void(std::size_t)>& fn);

} // namespace dgbo
