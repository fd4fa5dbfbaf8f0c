#pragma once

// Index-space parallel map. f(i) runs exactly once for each i in [0, count);
// callers keep determinism by writing to disjoint slots. jobs <= 0 picks
// hardware concurrency. The first exception wins and is rethrown after join.

#include <algorithm>
#include <atomic>
#include <exception>
#include <functional>
#include <mutex>
#include <thread>
#include <vector>

namespace hmp {

inline void parallel_for(unsigned long count, int jobs,
                         const std::function<void(unsigned long)>& f) {
    unsigned long workers = jobs > 0
                                ? static_cast<unsigned long>(jobs)
                                : std::max(1u, std::thread::hardware_concurrency());
    workers = std::min(workers, count);
    if (workers <= 1) {
        for (unsigned long i = 0; i < count; ++i) f(i);
        return;
    }
    std::atomic<unsigned long> next{0};
    std::atomic<bool> failed{false};
    std::exception_ptr error;
    std::mutex error_mutex;
    auto work = [&] {
        while (!failed.load()) {
            const unsigned long i = next.fetch_add(1);
            if (i >= count) return;
            try {
                f(i);
            } catch (...) {
                std::lock_guard<std::mutex> lock(error_mutex);
                if (!error) error = std::current_exception();
                failed.store(true);
                return;
            }
        }
    };
    std::vector<std::thread> pool;
    pool.reserve(workers);
    for (unsigned long w = 0; w < workers; ++w) pool.emplace_back(work);
    for (auto& t : pool) t.join();
    if (error) std::rethrow_exception(error);
}

}  // namespace hmp
