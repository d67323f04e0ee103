#pragma once
// Deterministic data-parallel helpers.  Work is split into a fixed number of
// chunks independent of the thread count; per-chunk results are reduced in
// chunk order, so sums are bit-identical for any --threads value.

#include <cstddef>
#include <functional>
#include <thread>
#include <vector>

namespace zml {

inline int& thread_count() {
    static int n = static_cast<int>(std::thread::hardware_concurrency());
    return n;
}

// f(chunk_begin, chunk_end) -> partial value; returns sum over chunks in order.
template <class T, class F>
T parallel_reduce(std::size_t n, F&& f, std::size_t n_chunks = 256) {
    if (n_chunks > n) n_chunks = n ? n : 1;
    std::vector<T> partial(n_chunks, T{});
    int nt = thread_count() > 0 ? thread_count() : 1;
    std::vector<std::thread> pool;
    std::size_t chunk = (n + n_chunks - 1) / n_chunks;
    for (int t = 0; t < nt; ++t) {
        pool.emplace_back([&, t]() {
            for (std::size_t c = t; c < n_chunks; c += nt) {
                std::size_t lo = c * chunk, hi = std::min(n, lo + chunk);
                if (lo < hi) partial[c] = f(lo, hi);
            }
        });
    }
    for (auto& th : pool) th.join();
    T total{};
    for (auto& p : partial) total += p;
    return total;
}

template <class F>
void parallel_for(std::size_t n, F&& f) {
    int nt = thread_count() > 0 ? thread_count() : 1;
    std::vector<std::thread> pool;
    std::size_t chunk = (n + 8 * nt - 1) / (8 * nt);
    if (chunk == 0) chunk = 1;
    std::size_t n_chunks = (n + chunk - 1) / chunk;
    for (int t = 0; t < nt; ++t) {
        pool.emplace_back([&, t]() {
            for (std::size_t c = t; c < n_chunks; c += nt) {
                std::size_t lo = c * chunk, hi = std::min(n, lo + chunk);
                for (std::size_t i = lo; i < hi; ++i) f(i);
            }
        });
    }
    for (auto& th : pool) th.join();
}

}  // namespace zml
