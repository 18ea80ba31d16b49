#pragma once

#include <algorithm>
#include <cstdlib>
#include <string>
#include <thread>
#include <vector>

namespace mpg {

/// Worker count from MPG_THREADS, else hardware concurrency.
inline unsigned thread_count() {
    if (const char* env = std::getenv("MPG_THREADS")) {
        try {
            const int n = std::stoi(env);
            if (n > 0) return static_cast<unsigned>(n);
        } catch (...) {
        }
    }
    return std::max(1u, std::thread::hardware_concurrency());
}

/// Splits [0, n) into contiguous chunks; fn(chunk_index, begin, end). Chunk boundaries depend only on n and
/// the worker count, so callers that merge per-chunk results in chunk order are deterministic.
template <class Fn>
void parallel_chunks(std::size_t n, unsigned workers, Fn&& fn) {
    workers = std::max(1u, std::min<unsigned>(workers, static_cast<unsigned>(std::max<std::size_t>(1, n / 512))));
    if (workers == 1) {
        fn(0u, std::size_t{0}, n);
        return;
    }
    std::vector<std::thread> pool;
    pool.reserve(workers);
    const std::size_t step = (n + workers - 1) / workers;
    for (unsigned w = 0; w < workers; ++w) {
        const std::size_t b = std::min(n, w * step);
        const std::size_t e = std::min(n, b + step);
        pool.emplace_back([&fn, w, b, e] { fn(w, b, e); });
    }
    for (auto& t : pool) t.join();
}

}  // namespace mpg
