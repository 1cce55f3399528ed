#pragma once

#include <algorithm>
#include <atomic>
#include <cstddef>
#include <thread>
#include <vector>

namespace hydrocomplex {

/// Calls fn(i) for i in [0, count) on up to `threads` workers (0: one per
/// hardware thread). fn must not throw and must write only to slot i.
template <class Fn>
void parallel_for(std::size_t count, unsigned threads, Fn&& fn) {
    unsigned workers = threads != 0 ? threads : std::max(1u, std::thread::hardware_concurrency());
    workers = static_cast<unsigned>(std::min<std::size_t>(workers, std::max<std::size_t>(count, 1)));
    std::atomic<std::size_t> next{0};
    auto worker = [&] {
        for (std::size_t i; (i = next.fetch_add(1)) < count;) fn(i);
    };
    std::vector<std::jthread> pool;
    for (unsigned t = 1; t < workers; ++t) pool.emplace_back(worker);
    worker();
}

} // namespace hydrocomplex
