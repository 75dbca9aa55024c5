#pragma once

#include <atomic>
#include <cstddef>
#include <exception>
#include <mutex>
#include <thread>
#include <vector>

namespace cq {

/// Runs fn(0) .. fn(ntasks-1) on up to `jobs` worker threads. Callers keep
/// results in per-task slots and reduce them afterwards in task order, so
/// outcomes are independent of scheduling.
template <class Fn>
void run_tasks(std::size_t ntasks, unsigned jobs, Fn&& fn) {
    if (jobs <= 1 || ntasks <= 1) {
        for (std::size_t i = 0; i < ntasks; ++i) fn(i);
        return;
    }
    unsigned workers = jobs;
    if (workers > ntasks) workers = static_cast<unsigned>(ntasks);
    std::atomic<std::size_t> next{0};
    std::exception_ptr failure;
    std::mutex failure_mutex;
    std::vector<std::thread> pool;
    pool.reserve(workers);
    for (unsigned t = 0; t < workers; ++t) {
        pool.emplace_back([&] {
            try {
                for (std::size_t i; (i = next.fetch_add(1)) < ntasks;) fn(i);
            } catch (...) {
                std::lock_guard<std::mutex> lock(failure_mutex);
                if (!failure) failure = std::current_exception();
            }
        });
    }
    for (auto& th : pool) th.join();
    if (failure) std::rethrow_exception(failure);
}

} // namespace cq
