#pragma once

#include <cstdint>
#include <thread>
#include <vector>

namespace omfib {

// Thread count for internal parallelism. Defaults to 1; the OMFIB_THREADS
// environment variable (or set_thread_count) overrides it. All parallel
// helpers produce results independent of the thread count.
int thread_count();
void set_thread_count(int n);

// Static chunking over [0, n). f(i) must only write to slots owned by i.
template <class F>
void parallel_for(uint32_t n, F&& f) {
    int tc = thread_count();
    if (tc <= 1 || n < 2 * static_cast<uint32_t>(tc)) {
        for (uint32_t i = 0; i < n; ++i) f(i);
        return;
    }
    std::vector<std::thread> workers;
    workers.reserve(tc);
    uint32_t chunk = (n + tc - 1) / tc;
    for (int t = 0; t < tc; ++t) {
        uint32_t lo = t * chunk;
        uint32_t hi = std::min(n, lo + chunk);
        if (lo >= hi) break;
        workers.emplace_back([&, lo, hi] {
            for (uint32_t i = lo; i < hi; ++i) f(i);
        });
    }
    for (auto& w : workers) w.join();
}

// Deterministic reduction: every chunk produces a partial value, partials are
// combined in chunk order. combine(acc, partial) must be associative enough
// for the caller's purposes (we always fold left in index order).
template <class Partial, class F, class Combine>
Partial parallel_reduce(uint32_t n, Partial init, F&& per_index, Combine&& combine) {
    int tc = thread_count();
    if (tc <= 1 || n < 2 * static_cast<uint32_t>(tc)) {
        Partial acc = init;
        for (uint32_t i = 0; i < n; ++i) acc = combine(std::move(acc), per_index(i));
        return acc;
    }
    uint32_t chunk = (n + tc - 1) / tc;
    uint32_t parts = (n + chunk - 1) / chunk;
    std::vector<Partial> partial(parts, init);
    std::vector<std::thread> workers;
    workers.reserve(parts);
    for (uint32_t t = 0; t < parts; ++t) {
        uint32_t lo = t * chunk;
        uint32_t hi = std::min(n, lo + chunk);
        workers.emplace_back([&, t, lo, hi] {
            Partial acc = init;
            for (uint32_t i = lo; i < hi; ++i) acc = combine(std::move(acc), per_index(i));
            partial[t] = std::move(acc);
        });
    }
    for (auto& w : workers) w.join();
    Partial acc = init;
    for (uint32_t t = 0; t < parts; ++t) acc = combine(std::move(acc), std::move(partial[t]));
    return acc;
}

}  // namespace omfib
