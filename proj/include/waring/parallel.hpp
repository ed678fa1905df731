#pragma once

#include <cstddef>
#include <functional>

namespace waring {

// Worker cap from WARING_THREADS; defaults to the hardware concurrency.
unsigned worker_count_from_env();

// Runs body(0..count-1) on up to `threads` workers. Each index runs exactly
// once; callers write results into per-index slots so collation is
// independent of scheduling. The exception from the lowest failing index is
// rethrown after all workers finish.
void parallel_for(std::size_t count, unsigned threads, const std::function<void(std::size_t)>& body);

}  // namespace waring
