#pragma once

#include <cstddef>
#include <functional>

namespace fringelab {

// Worker count: hardware concurrency, capped by the FRINGELAB_THREADS
// environment variable when it is set to a positive integer. Always >= 1.
int thread_budget();

// Runs fn(i) for i in [0, n). Splits into contiguous chunks across threads
// when n is large enough to be worth it; falls back to a plain loop
// otherwise. fn must only touch state owned by index i, which keeps results
// independent of the schedule.
void parallel_for(std::size_t n, const std::function<void(std::size_t)>& fn);

} // namespace fringelab
