#pragma once

#include <cstddef>
#include <functional>

namespace eikonal {

/// Worker count: hardware concurrency, capped by MONOPOLE_EIKONAL_THREADS
/// when that is set to a positive integer.
unsigned worker_count();

/// Runs body(i) for i in [0, n). Each index is evaluated exactly once and
/// writes only its own slot, so results do not depend on scheduling. The
/// first exception thrown by any body is rethrown after all workers stop.
void parallel_for(std::size_t n, const std::function<void(std::size_t)>& body);

}  // namespace eikonal
