#pragma once

#include <algorithm>
#include <atomic>
#include <cstddef>
#include <exception>
#include <mutex>
#include <thread>
#include <vector>

namespace minorsat {

inline unsigned default_jobs() { return std::max(1u, std::thread::hardware_concurrency()); }

/// Smallest index i < count with stop(i) true, or count if none. Indices above
/// an already-found hit are skipped, so the answer does not depend on `jobs`.
/// The first exception (by index) is rethrown.
template <class Pred>
std::size_t first_index_where(std::size_t count, unsigned jobs, Pred&& stop) {
    std::atomic<std::size_t> next{0};
    std::atomic<std::size_t> best{count};
    std::mutex err_mu;
    std::size_t err_index = count;
    std::exception_ptr err;

    auto worker = [&] {
        for (;;) {
            std::size_t i = next.fetch_add(1);
            if (i >= count || i > best.load()) return;
            try {
                if (stop(i)) {
                    std::size_t cur = best.load();
                    while (i < cur && !best.compare_exchange_weak(cur, i)) {
                    }
                }
            } catch (...) {
                std::lock_guard lock(err_mu);
                if (i < err_index) {
                    err_index = i;
                    err = std::current_exception();
                }
                std::size_t cur = best.load();
                while (i < cur && !best.compare_exchange_weak(cur, i)) {
                }
            }
        }
    };

    jobs = std::max(1u, std::min<unsigned>(jobs, static_cast<unsigned>(std::max<std::size_t>(count, 1))));
    if (jobs == 1) {
        worker();
    } else {
        std::vector<std::thread> pool;
        for (unsigned j = 0; j < jobs; ++j) pool.emplace_back(worker);
        for (auto& t : pool) t.join();
    }
    if (err && err_index <= best.load()) std::rethrow_exception(err);
    return best.load();
}

/// Runs fn(i) for every i < count.
template <class Fn>
void parallel_for(std::size_t count, unsigned jobs, Fn&& fn) {
    first_index_where(count, jobs, [&](std::size_t i) {
        fn(i);
        return false;
    });
}

}  // namespace minorsat
