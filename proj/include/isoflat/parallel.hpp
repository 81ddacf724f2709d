#pragma once

#include <cstddef>
#include <functional>

namespace isoflat {

/// Worker count: min(hardware concurrency, ISOFLAT_THREADS if set), at least 1.
int worker_count();

/// Runs fn(i) for i in [0, n). Tasks must be independent; results should be
/// written to caller-owned slots indexed by i so the outcome does not depend
/// on scheduling. Runs inline when n is small or a single worker is configured.
void parallel_for(std::size_t n, const std::function<void(std::size_t)>& fn);

} // namespace isoflat
