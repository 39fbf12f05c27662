#pragma once

#include <algorithm>
#include <cstddef>
#include <exception>
#include <functional>
#include <optional>
#include <thread>
#include <vector>

namespace dicke2p {

// Worker count: DICKE2P_THREADS if set to a positive integer, otherwise the
// hardware concurrency (at least 1).
unsigned thread_budget();

// Evaluates fn(i) for i in [0, n) on up to thread_budget() threads and returns
// results in index order. The exception of the lowest failing index is rethrown.
template <typename T>
std::vector<T> parallel_map(std::size_t n, const std::function<T(std::size_t)>& fn) {
    std::vector<std::optional<T>> slots(n);
    std::vector<std::exception_ptr> errors(n);
    const std::size_t workers = std::min<std::size_t>(thread_budget(), n);

    auto run = [&](std::size_t first) {
        for (std::size_t i = first; i < n; i += workers) {
            try {
                slots[i].emplace(fn(i));
            } catch (...) {
                errors[i] = std::current_exception();
            }
        }
    };

    if (workers <= 1) {
        run(0);
    } else {
        std::vector<std::jthread> pool;
        pool.reserve(workers);
        for (std::size_t w = 0; w < workers; ++w) pool.emplace_back(run, w);
    }
    for (const auto& e : errors)
        if (e) std::rethrow_exception(e);
    std::vector<T> out;
    out.reserve(n);
    for (auto& s : slots) out.push_back(std::move(*s));
    return out;
}

}  // namespace dicke2p
