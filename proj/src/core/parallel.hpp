#pragma once

#include <algorithm>
#include <exception>
#include <mutex>
#include <thread>
#include <utility>
#include <vector>

namespace fracdim {

/// Caps the worker count used by parallel_for. n <= 0 restores the
/// hardware default. Thread-safe.
void set_max_threads(int n) noexcept;

/// Resolved worker count, always >= 1.
int max_threads() noexcept;

/// Runs fn(i) for every i in [0, n). Indices are split into contiguous
/// chunks, one chunk per worker, so each fn(i) runs exactly once and the
/// iteration order inside a chunk is ascending. Results must not depend on
/// which worker handles an index; with independent per-index outputs the
/// computation is deterministic for any thread count.
template <class Fn>
void parallel_for(int n, Fn&& fn, int grain = 1) {
    if (n <= 0) return;
    const int workers = std::min(max_threads(), std::max(1, n / std::max(grain, 1)));
    if (workers <= 1) {
        for (int i = 0; i < n; ++i) fn(i);
        return;
    }

    std::vector<std::thread> pool;
    pool.reserve(static_cast<std::size_t>(workers));
    std::mutex err_mutex;
    std::exception_ptr first_error;

    const int chunk = (n + workers - 1) / workers;
    for (int w = 0; w < workers; ++w) {
        const int lo = w * chunk;
        const int hi = std::min(n, lo + chunk);
        if (lo >= hi) break;
        pool.emplace_back([&, lo, hi] {
            try {
                for (int i = lo; i < hi; ++i) fn(i);
            } catch (...) {
                std::lock_guard<std::mutex> lock(err_mutex);
                if (!first_error) first_error = std::current_exception();
            }
        });
    }
    for (auto& t : pool) t.join();
    if (first_error) std::rethrow_exception(first_error);
}

}  // namespace fracdim
