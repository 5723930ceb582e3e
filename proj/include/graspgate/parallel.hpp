#pragma once

#include <cstdint>
#include <functional>

namespace graspgate {

// Resolve a --threads style request: <= 0 means "use what the machine has",
// never less than one worker.
int effective_threads(int requested);

// Run chunk_fn over [0, n) split into contiguous ranges, one per worker.
// Workers write to disjoint index ranges only, so the result is identical for
// any worker count; nothing here may accumulate across chunks.
void parallel_for(std::int64_t n, int threads,
                  const std::function<void(std::int64_t begin, std::int64_t end)>& chunk_fn);

}  // namespace graspgate
