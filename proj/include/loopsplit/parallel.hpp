#pragma once

#include <algorithm>
#include <atomic>
#include <cstdlib>
#include <exception>
#include <optional>
#include <thread>
#include <vector>

namespace loopsplit {

inline int worker_count() {
    const char* env = std::getenv("LOOPSPLIT_THREADS");
    if (!env) return 1;
    char* end = nullptr;
    long v = std::strtol(env, &end, 10);
    if (end == env || *end != '\0' || v < 1) return 1;
    return static_cast<int>(std::min(v, 64l));
}

// Evaluates f(0..count-1), possibly on several workers. Results land in index
// order, so the output is identical for any worker count.
template <class T, class F>
std::vector<T> parallel_map(int count, F f) {
    std::vector<std::optional<T>> slots(static_cast<size_t>(std::max(count, 0)));
    const int workers = std::min(worker_count(), count);
    if (workers <= 1) {
        for (int i = 0; i < count; ++i) slots[static_cast<size_t>(i)] = f(i);
    } else {
        std::vector<std::exception_ptr> errors(slots.size());
        std::atomic<int> next{0};
        auto run = [&] {
            for (int i = next.fetch_add(1); i < count; i = next.fetch_add(1)) {
                try {
                    slots[static_cast<size_t>(i)] = f(i);
                } catch (...) {
                    errors[static_cast<size_t>(i)] = std::current_exception();
                }
            }
        };
        std::vector<std::thread> pool;
        pool.reserve(static_cast<size_t>(workers));
        for (int w = 0; w < workers; ++w) pool.emplace_back(run);
        for (auto& t : pool) t.join();
        for (auto& err : errors)
            if (err) std::rethrow_exception(err);
    }
    std::vector<T> out;
    out.reserve(slots.size());
    for (auto& s : slots) out.push_back(std::move(*s));
    return out;
}

}  // namespace loopsplit
