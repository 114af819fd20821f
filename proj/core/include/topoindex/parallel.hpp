#pragma once

#include <cstddef>
#include <functional>

namespace topoindex {

/// Hardware concurrency, capped by TOPOINDEX_THREADS when that is a positive integer.
std::size_t worker_count();

/// Runs body(task) for every task in [0, tasks) on up to `workers` threads.
/// Tasks are handed out in increasing order; the first exception thrown by
/// any worker is rethrown after all threads join.
void parallel_for(std::size_t tasks, std::size_t workers, const std::function<void(std::size_t)>& body);

}  // namespace topoindex
