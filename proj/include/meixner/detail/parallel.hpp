#pragma once

#include <cstddef>
#include <functional>

namespace meixner::detail {

// Runs fn(i) for every i in [0, count), fanning out across threads when the
// range is large enough. Callers must only touch disjoint state per index.
// MEIXNER_THREADS=1 forces serial execution.
void parallel_for(std::size_t count, const std::function<void(std::size_t)>& fn);

}  // namespace meixner::detail
