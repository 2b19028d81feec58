#pragma once

#include <cstddef>
#include <functional>

namespace rmcoset {

// RM_PMEPR_WORKERS environment override, else the requested count,
// else hardware concurrency.
int resolve_workers(int requested);

// Run fn(i) for i in [0, count) on up to `workers` threads.  Work items
// must write only to their own slots; any reduction happens caller-side in
// index order, so results do not depend on the worker count.
void parallel_for(std::size_t count, int workers,
                  const std::function<void(std::size_t)>& fn);

}  // namespace rmcoset
