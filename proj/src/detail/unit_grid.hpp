#pragma once

#include <memory>
#include <vector>

namespace circlemap::detail {

// Cached cos/sin table for the uniform grid exp(2*pi*i*j/n), j = 0..n-1.
// Grid evaluation of kernel sums dominates the sweep workloads; recomputing
// the trig table per call would dominate the evaluation itself.
struct UnitGrid {
    int n = 0;
    std::vector<double> cos_v;
    std::vector<double> sin_v;
};

std::shared_ptr<const UnitGrid> unit_grid(int n);

} // namespace circlemap::detail
