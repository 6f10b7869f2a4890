#ifndef BCT_PARALLEL_HPP
#define BCT_PARALLEL_HPP

#include <cstddef>
#include <functional>

namespace bct {

// Worker count: BCT_THREADS when set (clamped to [1,64]), otherwise the
// hardware concurrency.
int worker_count();

// Runs fn(worker, begin, end) over [0, n) split into contiguous chunks,
// one per worker. fn must be pure up to its own worker slot.
void parallel_chunks(std::size_t n,
                     const std::function<void(int, std::size_t, std::size_t)>& fn);

}  // namespace bct

#endif
