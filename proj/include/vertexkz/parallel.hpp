#pragma once

#include <cstddef>
#include <functional>

namespace vertexkz {

/// Worker count: VERTEXKZ_THREADS if set to a positive integer, else the
/// hardware concurrency (at least 1).
std::size_t worker_count();

/// Runs body(k) for k in [0, count). Each index writes only its own output
/// slot, so results do not depend on the schedule. If any calls throw, the
/// exception from the lowest failing index is rethrown after all workers join.
void parallel_for(std::size_t count, const std::function<void(std::size_t)>& body);

}  // namespace vertexkz
