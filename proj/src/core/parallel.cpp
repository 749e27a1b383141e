#include "core/parallel.hpp"

#include <atomic>

namespace fracdim {

namespace {
std::atomic<int> g_max_threads{0};  // 0 = auto
}

void set_max_threads(int n) noexcept { g_max_threads.store(n, std::memory_order_relaxed); }

int max_threads() noexcept {
    int n = g_max_threads.load(std::memory_order_relaxed);
    if (n <= 0) n = static_cast<int>(std::thread::hardware_concurrency());
    return std::max(1, n);
}

}  // namespace fracdim
