#pragma once

#include <algorithm>
#include <thread>
#include <vector>

namespace circlemap {

// Runs fn(i) for i in [begin, end) across hardware threads. Work items must
// be independent; ordering of side effects is by index only when the caller
// writes to disjoint slots.
template <typename Fn>
void parallel_for(int begin, int end, Fn&& fn)
{
    const int count = end - begin;
    if (count <= 0)
        return;
    const unsigned hw = std::max(1u, std::thread::hardware_concurrency());
    const int workers = static_cast<int>(std::min<unsigned>(hw, static_cast<unsigned>(count)));
    if (workers == 1) {
        for (int i = begin; i < end; ++i)
            fn(i);
        return;
    }
    std::vector<std::thread> pool;
    pool.reserve(workers);
    for (int w = 0; w < workers; ++w) {
        pool.emplace_back([=, &fn] {
            for (int i = begin + w; i < end; i += workers)
                fn(i);
        });
    }
    for (auto& t : pool)
        t.join();
}

} // namespace circlemap
