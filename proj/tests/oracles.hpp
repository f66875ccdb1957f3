#pragma once

// Test-only oracles. Each one recomputes a quantity along a route that is
// independent of the library code it is used to check: extended precision,
// brute-force scans, or explicit series expansion.

#include <cmath>
#include <complex>
#include <utility>
#include <vector>

namespace oracles {

using cplx = std::complex<double>;
using cplxl = std::complex<long double>;

constexpr double kPi = 3.141592653589793238462643383279502884;

// Extended-precision Blaschke evaluation.
inline cplxl eval_blaschke_ld(long double sigma_angle, const std::vector<cplxl>& zeros, cplxl z)
{
    cplxl acc = std::polar<long double>(1.0L, sigma_angle);
    for (const cplxl& zk : zeros)
        acc *= (z - zk) / (cplxl(1.0L, 0.0L) - std::conj(zk) * z);
    return acc;
}

// Raw kernel, written out again on purpose.
inline double poisson_raw(cplx z, cplx zeta)
{
    return (1.0 - std::norm(z)) / std::norm(zeta - z);
}

// Brute-force minimum of f(theta) over [0, 2*pi) on an n-point scan.
template <typename F>
std::pair<double, double> dense_min(F&& f, int n)
{
    double best = f(0.0);
    double best_theta = 0.0;
    for (int j = 1; j < n; ++j) {
        const double theta = 2.0 * kPi * static_cast<double>(j) / n;
        const double v = f(theta);
        if (v < best) {
            best = v;
            best_theta = theta;
        }
    }
    return {best, best_theta};
}

// Winding number of a closed sample loop about 0 via summed increments.
inline int winding_number(const std::vector<cplx>& points)
{
    double sum = 0.0;
    const std::size_t n = points.size();
    for (std::size_t k = 0; k < n; ++k)
        sum += std::arg(points[(k + 1) % n] * std::conj(points[k]));
    return static_cast<int>(std::lround(sum / (2.0 * kPi)));
}

// Taylor coefficients of sigma * prod (z - z_k)/(1 - conj(z_k) z) on the
// disk, by multiplying out the factor series
//   (z - z_k) * sum_j conj(z_k)^j z^j
//     = -z_k + sum_{j>=1} conj(z_k)^(j-1) (1 - |z_k|^2) z^j.
inline std::vector<cplx> blaschke_taylor(const std::vector<cplx>& zeros, cplx sigma, int count)
{
    std::vector<cplx> acc(count, cplx(0.0, 0.0));
    acc[0] = sigma;
    for (const cplx& zk : zeros) {
        std::vector<cplx> factor(count, cplx(0.0, 0.0));
        factor[0] = -zk;
        const double scale = 1.0 - std::norm(zk);
        cplx pw = 1.0;
        for (int j = 1; j < count; ++j) {
            factor[j] = pw * scale;
            pw *= std::conj(zk);
        }
        std::vector<cplx> next(count, cplx(0.0, 0.0));
        for (int i = 0; i < count; ++i) {
            if (acc[i] == cplx(0.0, 0.0))
                continue;
            for (int j = 0; i + j < count; ++j)
                next[i + j] += acc[i] * factor[j];
        }
        acc = std::move(next);
    }
    return acc;
}

} // namespace oracles
