#pragma once

// Deterministic parallel map: results land in input order no matter how the
// workers are scheduled.

#include <algorithm>
#include <atomic>
#include <thread>
#include <vector>

#include "moduli/arith.hpp"

namespace moduli {

template <typename R, typename Fn>
std::vector<R> parallel_map(i64 n, i64 jobs, Fn fn) {
    std::vector<R> out(static_cast<std::size_t>(n));
    if (jobs < 1) jobs = 1;
    if (jobs == 1 || n <= 1) {
        for (i64 i = 0; i < n; ++i) out[static_cast<std::size_t>(i)] = fn(i);
        return out;
    }
    std::atomic<i64> next{0};
    auto worker = [&] {
        for (;;) {
            i64 i = next.fetch_add(1);
            if (i >= n) return;
            out[static_cast<std::size_t>(i)] = fn(i);
        }
    };
    std::vector<std::thread> pool;
    i64 k = std::min<i64>(jobs, n);
    for (i64 j = 0; j < k; ++j) pool.emplace_back(worker);
    for (auto& th : pool) th.join();
    return out;
}

inline i64 default_jobs() {
    unsigned n = std::thread::hardware_concurrency();
    return n == 0 ? 1 : static_cast<i64>(n);
}

} // namespace moduli
