#pragma once

#include <cstddef>
#include <functional>

namespace resonance {

// Worker count: RESONANCE_THREADS if set and positive, otherwise the hardware
// concurrency (at least one).
std::size_t worker_count();

// Runs body(i) for i in [0, count). Each index is processed exactly once;
// callers write results into slot i so output order never depends on the
// schedule. The first exception thrown by any body is rethrown.
void parallel_for(std::size_t count, const std::function<void(std::size_t)>& body);

}  // namespace resonance
