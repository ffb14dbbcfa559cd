#pragma once

#include <cstddef>
#include <functional>

namespace cornerlight {

// Worker count: CORNER_LIGHTNING_THREADS when set (>=1), else the hardware
// concurrency. Results must not depend on it; parallel loops write to
// preallocated slots and reductions run in index order.
int thread_cap();

// Runs body(i) for i in [0, count), possibly on several threads.
void parallel_for(std::size_t count, const std::function<void(std::size_t)>& body);

}  // namespace cornerlight
