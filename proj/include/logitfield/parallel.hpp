#ifndef LOGITFIELD_PARALLEL_HPP
#define LOGITFIELD_PARALLEL_HPP

#include <cstddef>
#include <functional>

namespace logitfield {

// Resolves the worker count: explicit request > LOGITFIELD_THREADS env > hardware.
int resolve_threads(int requested = 0);

// Sets the process-wide default used when solvers are constructed without an
// explicit thread count.
void set_default_threads(int n);
int default_threads();

// Runs fn(begin, end) over [0, n) split into contiguous chunks, one per worker.
// Each index is processed by exactly one worker and chunk boundaries depend only
// on (n, threads), so results are schedule-independent.
void parallel_for(std::size_t n, int threads,
                  const std::function<void(std::size_t, std::size_t)>& fn);

}  // namespace logitfield

#endif
