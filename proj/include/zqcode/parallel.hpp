#pragma once

#include <algorithm>
#include <cstddef>
#include <exception>
#include <functional>
#include <thread>
#include <vector>

namespace zqcode {

/// Runs body(first, last) over [0, count), split into contiguous chunks across
/// at most `jobs` threads. jobs <= 1 (or a small count) runs inline.
inline void parallel_chunks(int jobs, std::size_t count,
                            const std::function<void(std::size_t, std::size_t)>& body) {
    if (jobs <= 1 || count < 4096) {
        body(0, count);
        return;
    }
    const std::size_t threads = std::min<std::size_t>(jobs, (count + 4095) / 4096);
    const std::size_t chunk = (count + threads - 1) / threads;
    std::vector<std::thread> pool;
    std::vector<std::exception_ptr> errors(threads);
    for (std::size_t t = 0; t < threads; ++t) {
        const std::size_t first = t * chunk;
        const std::size_t last = std::min(count, first + chunk);
        if (first >= last) break;
        pool.emplace_back([&body, &errors, t, first, last] {
            try {
                body(first, last);
            } catch (...) {
                errors[t] = std::current_exception();
            }
        });
    }
    for (auto& th : pool) th.join();
    for (auto& err : errors)
        if (err) std::rethrow_exception(err);
}

}  // namespace zqcode
