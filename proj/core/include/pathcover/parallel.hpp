#pragma once

#include <cstddef>
#include <functional>

namespace pathcover {

// Worker count for internal parallel loops: hardware concurrency, capped by
// the PATHCOVER_THREADS environment variable when set. Always >= 1.
int worker_count();

// Runs fn(i) for i in [0, count) on up to worker_count() threads.
// Indices are statically striped, so any output written to slot i is
// deterministic regardless of scheduling. The first exception thrown by a
// worker is rethrown after all workers join.
void parallel_for(std::size_t count, const std::function<void(std::size_t)>& fn);

}  // namespace pathcover
