#include "kinet/parallel.hpp"

#include <algorithm>
#include <atomic>

namespace kinet {

namespace {
std::atomic<int> g_threads{0};  // 0 = not set yet, use hardware concurrency
}

int parallel_threads() {
    int n = g_threads.load(std::memory_order_relaxed);
    if (n <= 0) {
        n = static_cast<int>(std::thread::hardware_concurrency());
        if (n <= 0) n = 1;
    }
    return n;
}

void set_parallel_threads(int n) { g_threads.store(n, std::memory_order_relaxed); }

void parallel_for_blocks(std::size_t n,
                         const std::function<void(std::size_t, std::size_t, int)>& body) {
    const int workers = std::max(1, std::min<int>(parallel_threads(),
                                                  static_cast<int>(std::max<std::size_t>(n, 1))));
    if (workers == 1 || n == 0) {
        body(0, n, 0);
        return;
    }
    const std::size_t chunk = (n + static_cast<std::size_t>(workers) - 1) / workers;
    std::vector<std::thread> pool;
    pool.reserve(static_cast<std::size_t>(workers));
    for (int w = 0; w < workers; ++w) {
        const std::size_t b = std::min(n, static_cast<std::size_t>(w) * chunk);
        const std::size_t e = std::min(n, b + chunk);
        pool.emplace_back([&body, b, e, w] { body(b, e, w); });
    }
    for (auto& t : pool) t.join();
}

}  // namespace kinet
