#pragma once

#include <cstddef>
#include <functional>

namespace pansharp {

// Worker threads used by parallel_for. 0 resets to hardware concurrency.
void set_thread_count(int n);
int thread_count();

// Runs fn(i) for i in [0, n). Work is split across threads; callers get
// determinism by writing to per-index slots and reducing in index order.
void parallel_for(std::size_t n, const std::function<void(std::size_t)>& fn);

}  // namespace pansharp
