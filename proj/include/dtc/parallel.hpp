#pragma once
// Minimal worker pool for sweep fan-out.  Worker count comes from the
// DTC_WORKERS environment variable, defaulting to the machine parallelism.

#include <cstddef>
#include <functional>

namespace dtc {

int worker_count();

// invokes fn(i) for i = 0..count-1; tasks must be independent
void parallel_for(std::size_t count, const std::function<void(std::size_t)>& fn);

}  // namespace dtc
