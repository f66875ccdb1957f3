#pragma once

#include <functional>
#include <optional>

#include "circlemap/blaschke.hpp"

namespace circlemap {

/// Values of a circle map on the uniform grid exp(2*pi*i*k/N), k = 0..N-1.
/// N must be a power of two >= 64 so the discrete transform is an exact
/// quadrature for every trigonometric polynomial that fits the grid.
class SampledCircleMap {
public:
    explicit SampledCircleMap(std::vector<cplx> values);

    int size() const { return static_cast<int>(values_.size()); }
    const std::vector<cplx>& values() const { return values_; }
    double angle(int k) const { return kTwoPi * static_cast<double>(k) / size(); }

private:
    std::vector<cplx> values_;
};

/// values[k] = f(exp(2*pi*i*k/N)); callback failures propagate.
SampledCircleMap sample_map(const std::function<cplx(cplx)>& f, int n);

/// Coefficients c(n) for n in [-window, window], plus the resolution that
/// produced them. Coefficients outside the window are unknown, not zero;
/// tail_energy reports the grid L2 mass left outside the window.
class FourierSpectrum {
public:
    FourierSpectrum(std::vector<cplx> coefficients, int window, int source_resolution,
                    double tail_energy = 0.0);

    int window() const { return window_; }
    int source_resolution() const { return source_resolution_; }
    double tail_energy() const { return tail_energy_; }

    /// c(n) for |n| <= window; throws DomainError outside.
    cplx at(int n) const;

private:
    std::vector<cplx> coefficients_; // index n + window
    int window_ = 0;
    int source_resolution_ = 0;
    double tail_energy_ = 0.0;
};

/// Trapezoidal (discrete-transform) coefficients; exact for trigonometric
/// polynomials of degree < N - window, spectrally accurate for smooth maps.
/// Throws WindowTooWideError when 2*window + 1 > N.
FourierSpectrum spectrum(const SampledCircleMap& s, int window);

struct SupportProfile {
    std::optional<int> min_active;
    std::optional<int> max_active;
};

/// Smallest and largest index inside the window whose coefficient modulus
/// exceeds tol; tol < 0 selects the default 1e-9 * max |c(n)|.
SupportProfile support_profile(const FourierSpectrum& sp, double tol = -1.0);

/// F(z) = sum_{n>=0} c(n) z^n + sum_{n>=1} c(-n) conj(z)^n over the window.
/// Exact when the source map is a trigonometric polynomial inside the
/// window; otherwise truncated, with tail mass visible via tail_energy().
cplx harmonic_extension(const FourierSpectrum& sp, cplx z);

struct WirtingerPair {
    cplx fz;
    cplx fzbar;
};

/// Termwise derivatives of the truncated series:
/// fz = sum_{n>=1} n c(n) z^(n-1), fzbar = sum_{n>=1} n c(-n) conj(z)^(n-1).
WirtingerPair wirtinger(const FourierSpectrum& sp, cplx z);

} // namespace circlemap
