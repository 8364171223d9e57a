#pragma once

#include <cstddef>
#include <functional>

namespace swforge {

/// Worker count: SW_FORGE_THREADS if set and positive, else the hardware
/// concurrency (at least 1).
unsigned worker_count();

/// Runs body(worker, begin, end) over [0, count) in chunks pulled from a
/// shared counter. Blocks until every chunk is done; the first exception
/// thrown by any worker is rethrown here.
void parallel_chunks(std::size_t count, std::size_t chunk,
                     const std::function<void(unsigned, std::size_t, std::size_t)>& body);

}  // namespace swforge
