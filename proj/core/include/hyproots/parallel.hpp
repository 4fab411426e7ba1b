#ifndef HYPROOTS_PARALLEL_HPP
#define HYPROOTS_PARALLEL_HPP

#include <cstdint>
#include <functional>
#include <thread>
#include <vector>

namespace hyproots {

inline unsigned effective_threads(unsigned requested) {
    if (requested > 0) return requested;
    unsigned hw = std::thread::hardware_concurrency();
    return hw ? hw : 1;
}

// Run fn(lo, hi, worker) over a fixed partition of [0, n) into `threads`
// contiguous chunks. The partition depends only on (n, threads), so results
// merged by commutative accumulation are deterministic.
inline void parallel_chunks(std::uint64_t n, unsigned threads,
                            const std::function<void(std::uint64_t, std::uint64_t, unsigned)>& fn) {
    threads = effective_threads(threads);
    if (threads <= 1 || n < 2) {
        fn(0, n, 0);
        return;
    }
    std::vector<std::thread> pool;
    pool.reserve(threads);
    for (unsigned w = 0; w < threads; ++w) {
        std::uint64_t lo = n * w / threads;
        std::uint64_t hi = n * (w + 1) / threads;
        pool.emplace_back([&fn, lo, hi, w] { fn(lo, hi, w); });
    }
    for (auto& t : pool) t.join();
}

}  // namespace hyproots

#endif
