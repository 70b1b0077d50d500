#pragma once

#include <algorithm>
#include <atomic>
#include <cstddef>
#include <exception>
#include <mutex>
#include <thread>
#include <vector>

namespace tourney::detail {

inline int resolve_jobs(int jobs)
{
    if (jobs > 0)
        return jobs;
    return std::max(1u, std::thread::hardware_concurrency());
}

/// Calls body(i, worker) for every i in [0, count) on up to `jobs` threads;
/// worker is in [0, jobs) and identifies the calling thread. Work is
/// handed out in chunks from a shared counter; the first exception thrown by
/// any worker is rethrown once all workers have stopped.
template <typename Body>
void parallel_for(std::size_t count, int jobs, Body && body)
{
    const int workers = static_cast<int>(std::min<std::size_t>(resolve_jobs(jobs), std::max<std::size_t>(count, 1)));
    if (workers <= 1) {
        for (std::size_t i = 0; i < count; ++i)
            body(i, 0);
        return;
    }

    const std::size_t chunk = std::max<std::size_t>(1, count / (static_cast<std::size_t>(workers) * 16));
    std::atomic<std::size_t> next{0};
    std::atomic<bool> failed{false};
    std::exception_ptr error;
    std::mutex error_mutex;

    auto work = [&](int worker) {
        while (! failed.load(std::memory_order_relaxed)) {
            const std::size_t start = next.fetch_add(chunk);
            if (start >= count)
                return;
            const std::size_t stop = std::min(count, start + chunk);
            try {
                for (std::size_t i = start; i < stop; ++i)
                    body(i, worker);
            }
            catch (...) {
                std::lock_guard lock(error_mutex);
                if (! error)
                    error = std::current_exception();
                failed = true;
                return;
            }
        }
    };

    std::vector<std::thread> threads;
    threads.reserve(workers - 1);
    for (int w = 1; w < workers; ++w)
        threads.emplace_back(work, w);
    work(0);
    for (auto & t : threads)
        t.join();
    if (error)
        std::rethrow_exception(error);
}

}
