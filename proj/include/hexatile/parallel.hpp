#pragma once

// Minimal fan-out helper for parameter sweeps.  Results are written into
// caller-owned slots indexed by task, so output order never depends on
// scheduling.

#include <algorithm>
#include <atomic>
#include <cstdlib>
#include <exception>
#include <mutex>
#include <string>
#include <thread>
#include <vector>

namespace hexatile {

/// Worker count: HEXATILE_THREADS if set to a positive integer, otherwise
/// the hardware concurrency (at least 1).
inline unsigned worker_count()
{
    if (const char* env = std::getenv("HEXATILE_THREADS")) {
        try {
            const long v = std::stol(env);
            if (v > 0)
                return static_cast<unsigned>(v);
        } catch (const std::exception&) {
        }
    }
    return std::max(1u, std::thread::hardware_concurrency());
}

/// Calls fn(i) for i in [0, n) on up to `threads` workers.  The first
/// exception thrown by any task is rethrown after all workers join.
template <class Fn>
void parallel_for(size_t n, Fn&& fn, unsigned threads = 0)
{
    if (threads == 0)
        threads = worker_count();
    threads = static_cast<unsigned>(std::min<size_t>(threads, n));
    if (threads <= 1) {
        for (size_t i = 0; i < n; ++i)
            fn(i);
        return;
    }
    std::atomic<size_t> next{0};
    std::exception_ptr error;
    std::mutex error_mutex;
    auto worker = [&] {
        for (;;) {
            const size_t i = next.fetch_add(1);
            if (i >= n)
                return;
            try {
                fn(i);
            } catch (...) {
                std::lock_guard<std::mutex> lock(error_mutex);
                if (!error)
                    error = std::current_exception();
            }
        }
    };
    std::vector<std::thread> pool;
    pool.reserve(threads);
    for (unsigned t = 0; t < threads; ++t)
        pool.emplace_back(worker);
    for (auto& t : pool)
        t.join();
    if (error)
        std::rethrow_exception(error);
}

} // namespace hexatile
