#ifndef KINET_PARALLEL_HPP
#define KINET_PARALLEL_HPP

#include <cstddef>
#include <functional>
#include <thread>
#include <vector>

namespace kinet {

/// Global worker count for data-parallel loops. One value per process,
/// set once from the run configuration before heavy calls.
int parallel_threads();
void set_parallel_threads(int n);

/// Static block partition of [0, n). The callback receives
/// (begin, end, worker_index). Workers never share output ranges and the
/// partition depends only on (n, thread count), so results are
/// deterministic for a fixed thread count.
void parallel_for_blocks(std::size_t n,
                         const std::function<void(std::size_t, std::size_t, int)>& body);

/// Deterministic parallel reduction: each worker fills its own
/// accumulator, then accumulators are combined in worker order.
template <typename Acc, typename Body, typename Combine>
Acc parallel_reduce_blocks(std::size_t n, Acc init, Body&& body, Combine&& combine) {
    const int workers = parallel_threads();
    std::vector<Acc> partial(static_cast<std::size_t>(workers), init);
    parallel_for_blocks(n, [&](std::size_t b, std::size_t e, int w) {
        body(b, e, partial[static_cast<std::size_t>(w)]);
    });
    Acc total = init;
    for (const Acc& p : partial) total = combine(total, p);
    return total;
}

}  // namespace kinet

#endif
