#pragma once

#include <atomic>
#include <cstdint>
#include <functional>
#include <stdexcept>
#include <string>
#include <thread>
#include <vector>

namespace caylab {

// A computation would exceed a size/memory cap. CLI maps this to exit code 4.
struct resource_error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// A kernel/window combination cannot guarantee exact values.
struct exactness_error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Invalid experiment configuration. CLI maps this to exit code 2.
struct config_error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

inline std::uint64_t mix64(std::uint64_t x) {
    x += 0x9e3779b97f4a7c15ull;
    x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ull;
    x = (x ^ (x >> 27)) * 0x94d049bb133111ebull;
    return x ^ (x >> 31);
}

inline std::uint64_t mix64(std::uint64_t a, std::uint64_t b) { return mix64(mix64(a) ^ b); }

// Deterministic chunked parallel loop. The body sees (chunk_index, begin, end);
// chunk boundaries depend only on chunk_size, so per-chunk results reduced in
// chunk order are independent of the worker count.
inline void parallel_chunks(std::int64_t n, std::int64_t chunk_size, int workers,
                            const std::function<void(std::int64_t, std::int64_t, std::int64_t)>& body) {
    if (n <= 0) return;
    if (chunk_size <= 0) chunk_size = 1;
    const std::int64_t n_chunks = (n + chunk_size - 1) / chunk_size;
    if (workers <= 0) workers = static_cast<int>(std::thread::hardware_concurrency());
    if (workers < 1) workers = 1;
    workers = static_cast<int>(std::min<std::int64_t>(workers, n_chunks));

    if (workers == 1) {
        for (std::int64_t c = 0; c < n_chunks; ++c)
            body(c, c * chunk_size, std::min(n, (c + 1) * chunk_size));
        return;
    }
    std::atomic<std::int64_t> next{0};
    std::vector<std::thread> pool;
    pool.reserve(workers);
    for (int w = 0; w < workers; ++w) {
        pool.emplace_back([&] {
            for (;;) {
                const std::int64_t c = next.fetch_add(1);
                if (c >= n_chunks) return;
                body(c, c * chunk_size, std::min(n, (c + 1) * chunk_size));
            }
        });
    }
    for (auto& t : pool) t.join();
}

}  // namespace caylab
