#include "detail/unit_grid.hpp"

#include <cmath>
#include <map>
#include <mutex>

#include "circlemap/blaschke.hpp"

namespace circlemap::detail {

std::shared_ptr<const UnitGrid> unit_grid(int n)
{
    static std::mutex mtx;
    static std::map<int, std::shared_ptr<const UnitGrid>> cache;

    {
        std::lock_guard<std::mutex> lock(mtx);
        auto it = cache.find(n);
        if (it != cache.end())
            return it->second;
    }

    auto grid = std::make_shared<UnitGrid>();
    grid->n = n;
    grid->cos_v.resize(n);
    grid->sin_v.resize(n);
    for (int j = 0; j < n; ++j) {
        const double theta = kTwoPi * static_cast<double>(j) / n;
        grid->cos_v[j] = std::cos(theta);
        grid->sin_v[j] = std::sin(theta);
    }

    std::lock_guard<std::mutex> lock(mtx);
    auto [it, inserted] = cache.emplace(n, std::move(grid));
    return it->second;
}

} // namespace circlemap::detail
