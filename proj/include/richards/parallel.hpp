#pragma once

#include <cstddef>
#include <functional>

namespace richards {

// Worker cap from RICHARDS_RBF_THREADS (0 or unset = hardware concurrency).
int worker_count();

// Runs fn(begin, end) on disjoint index chunks across workers. Falls back to a
// plain call when one worker suffices. fn must only write to per-index slots.
void parallel_chunks(std::size_t n, const std::function<void(std::size_t, std::size_t)>& fn);

}  // namespace richards
