#pragma once

#include <cstdint>
#include <functional>

namespace caryb {

// Global worker count for basis-parallel verification loops.
// 0 = auto (hardware concurrency). All loops have deterministic results
// regardless of the schedule.
void set_thread_count(int n);
int thread_count();

// Runs fn(begin, end) over a partition of [0, total) on worker threads.
// Exceptions propagate (first one wins).
void parallel_chunks(std::int64_t total, const std::function<void(std::int64_t, std::int64_t)>& fn);

}  // namespace caryb
