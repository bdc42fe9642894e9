#ifndef SALEMFIELD_PARALLEL_HPP
#define SALEMFIELD_PARALLEL_HPP

#include <cstdint>
#include <thread>
#include <vector>

namespace salemfield {

// Static range partition; each worker writes disjoint output slots, so results
// do not depend on the worker count.
template <typename Fn>
void parallel_for(std::uint64_t n, unsigned workers, Fn&& fn) {
    if (workers <= 1 || n < 2 * workers) {
        fn(std::uint64_t{0}, n);
        return;
    }
    std::vector<std::thread> pool;
    pool.reserve(workers);
    const std::uint64_t chunk = (n + workers - 1) / workers;
    for (unsigned w = 0; w < workers; ++w) {
        const std::uint64_t begin = w * chunk;
        if (begin >= n) break;
        const std::uint64_t end = std::min(n, begin + chunk);
        pool.emplace_back([&fn, begin, end] { fn(begin, end); });
    }
    for (auto& t : pool) t.join();
}

inline unsigned hardware_workers() {
    const unsigned hc = std::thread::hardware_concurrency();
    return hc == 0 ? 1 : hc;
}

} // namespace salemfield

#endif
