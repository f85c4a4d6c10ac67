#pragma once

#include <cstdint>
#include <functional>
#include <thread>
#include <vector>

namespace loops {

inline int default_threads() {
    unsigned hc = std::thread::hardware_concurrency();
    return hc == 0 ? 1 : static_cast<int>(hc);
}

// Splits [0, count) into contiguous chunks, one per worker.
// The chunking is a pure function of (count, threads), never of timing,
// so any per-chunk results can be merged deterministically.
inline void parallel_chunks(std::uint64_t count, int threads,
                            const std::function<void(int, std::uint64_t, std::uint64_t)>& body) {
    if (threads <= 1 || count < 2) {
        body(0, 0, count);
        return;
    }
    if (static_cast<std::uint64_t>(threads) > count) threads = static_cast<int>(count);
    std::vector<std::thread> pool;
    pool.reserve(threads);
    const std::uint64_t chunk = (count + threads - 1) / threads;
    for (int t = 0; t < threads; ++t) {
        std::uint64_t lo = chunk * t;
        std::uint64_t hi = lo + chunk < count ? lo + chunk : count;
        if (lo >= hi) break;
        pool.emplace_back([&body, t, lo, hi] { body(t, lo, hi); });
    }
    for (auto& th : pool) th.join();
}

}  // namespace loops
