#pragma once

#include <algorithm>
#include <atomic>
#include <exception>
#include <functional>
#include <mutex>
#include <thread>
#include <vector>

namespace netcurv {

inline int resolve_threads(int requested) {
    if (requested > 0) return requested;
    unsigned hw = std::thread::hardware_concurrency();
    return hw == 0 ? 1 : static_cast<int>(hw);
}

// Runs fn(begin, end, chunk_index) over [0, n) split into fixed-size chunks.
// Chunks are claimed dynamically, so callers that reduce floating-point
// results must accumulate per chunk_index and merge in index order — that
// keeps outputs identical no matter how many workers ran.
inline void parallel_chunks(long long n, long long chunk_size, int threads,
                            const std::function<void(long long, long long, long long)>& fn) {
    if (n <= 0) return;
    if (chunk_size < 1) chunk_size = 1;
    const long long nchunks = (n + chunk_size - 1) / chunk_size;
    long long nworkers = std::min<long long>(resolve_threads(threads), nchunks);
    if (nworkers <= 1) {
        for (long long c = 0; c < nchunks; ++c)
            fn(c * chunk_size, std::min(n, (c + 1) * chunk_size), c);
        return;
    }
    std::atomic<long long> next{0};
    std::atomic<bool> failed{false};
    std::exception_ptr error;
    std::mutex error_mutex;
    auto worker = [&] {
        for (;;) {
            if (failed.load(std::memory_order_relaxed)) return;
            long long c = next.fetch_add(1);
            if (c >= nchunks) return;
            try {
                fn(c * chunk_size, std::min(n, (c + 1) * chunk_size), c);
            } catch (...) {
                std::lock_guard<std::mutex> lock(error_mutex);
                if (!error) error = std::current_exception();
                failed.store(true, std::memory_order_relaxed);
                return;
            }
        }
    };
    std::vector<std::thread> pool;
    pool.reserve(nworkers - 1);
    for (long long t = 1; t < nworkers; ++t) pool.emplace_back(worker);
    worker();
    for (auto& th : pool) th.join();
    if (error) std::rethrow_exception(error);
}

// Convenience: fn(i) per item, dynamic scheduling.
inline void parallel_for(long long n, int threads, const std::function<void(long long)>& fn) {
    parallel_chunks(n, 64, threads, [&](long long b, long long e, long long) {
        for (long long i = b; i < e; ++i) fn(i);
    });
}

} // namespace netcurv
