#pragma once

#include <cstddef>
#include <functional>

namespace voroto {

/// Worker count resolution: explicit request > VOROTO_THREADS env > hardware.
/// A request of 0 means "decide for me".
int resolve_threads(int requested);

/// Runs fn(worker, index) for index in [0, n), distributing indices over
/// `threads` workers via an atomic counter. `worker` in [0, threads) lets the
/// caller keep one scratch object per worker. Exceptions from fn are captured
/// and the first one is rethrown after all workers join.
void parallel_for(std::size_t n, int threads,
                  const std::function<void(int worker, std::size_t index)>& fn);

}  // namespace voroto
