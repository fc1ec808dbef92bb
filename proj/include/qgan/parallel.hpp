#pragma once

#include <functional>

namespace qgan {

/// Worker cap: min(hardware_concurrency, QGAN_FORGE_THREADS if set).
int worker_count();

/// Runs fn(i) for i in [0, n). Each index must own its outputs; results are
/// schedule-independent by construction.
void parallel_for(int n, const std::function<void(int)>& fn);

}  // namespace qgan
