#include "circlemap/fourier.hpp"

#include <cmath>
#include <utility>

namespace circlemap {

namespace {

bool power_of_two(int n)
{
    return n > 0 && (n & (n - 1)) == 0;
}

// Neumaier-compensated accumulator; the transform sums up to 2^20 terms with
// heavy cancellation and plain summation would eat the 1e-13 exactness
// budget.
struct CompensatedSum {
    double sum = 0.0;
    double comp = 0.0;

    void add(double v)
    {
        const double t = sum + v;
        if (std::abs(sum) >= std::abs(v))
            comp += (sum - t) + v;
        else
            comp += (v - t) + sum;
        sum = t;
    }

    double value() const { return sum + comp; }
};

} // namespace

SampledCircleMap::SampledCircleMap(std::vector<cplx> values) : values_(std::move(values))
{
    const int n = static_cast<int>(values_.size());
    if (n < 64 || !power_of_two(n))
        throw DomainError("sample count must be a power of two >= 64");
}

SampledCircleMap sample_map(const std::function<cplx(cplx)>& f, int n)
{
    if (n < 64 || !power_of_two(n))
        throw DomainError("sample count must be a power of two >= 64");
    std::vector<cplx> values(n);
    for (int k = 0; k < n; ++k) {
        const double theta = kTwoPi * static_cast<double>(k) / n;
        values[k] = f(std::polar(1.0, theta));
    }
    return SampledCircleMap(std::move(values));
}

FourierSpectrum::FourierSpectrum(std::vector<cplx> coefficients, int window,
                                 int source_resolution, double tail_energy)
    : coefficients_(std::move(coefficients)),
      window_(window),
      source_resolution_(source_resolution),
      tail_energy_(tail_energy)
{
    if (window_ < 0 || static_cast<int>(coefficients_.size()) != 2 * window_ + 1)
        throw DomainError("coefficient vector must cover exactly [-window, window]");
}

cplx FourierSpectrum::at(int n) const
{
    if (n < -window_ || n > window_)
        throw DomainError("coefficient index outside the computed window");
    return coefficients_[n + window_];
}

FourierSpectrum spectrum(const SampledCircleMap& s, int window)
{
    const int n = s.size();
    if (2 * window + 1 > n)
        throw WindowTooWideError("coefficient window does not fit the sample resolution");

    const std::vector<cplx>& v = s.values();
    std::vector<cplx> coeffs(2 * window + 1);
    for (int m = -window; m <= window; ++m) {
        CompensatedSum re, im;
        for (int k = 0; k < n; ++k) {
            // k*m reduced mod n keeps the twiddle angle in [0, 2*pi) exactly.
            const long long idx = (static_cast<long long>(k) * m) % n;
            const double theta = -kTwoPi * static_cast<double>(idx) / n;
            const double c = std::cos(theta);
            const double si = std::sin(theta);
            re.add(v[k].real() * c - v[k].imag() * si);
            im.add(v[k].real() * si + v[k].imag() * c);
        }
        coeffs[m + window] = cplx(re.value() / n, im.value() / n);
    }

    CompensatedSum power;
    for (int k = 0; k < n; ++k)
        power.add(std::norm(v[k]));
    double tail = power.value() / n;
    for (const cplx& c : coeffs)
        tail -= std::norm(c);
    if (tail < 0.0)
        tail = 0.0; // Bessel slack eaten by rounding

    return FourierSpectrum(std::move(coeffs), window, n, tail);
}

SupportProfile support_profile(const FourierSpectrum& sp, double tol)
{
    const int m = sp.window();
    if (tol < 0.0) {
        double peak = 0.0;
        for (int n = -m; n <= m; ++n)
            peak = std::max(peak, std::abs(sp.at(n)));
        tol = 1e-9 * peak;
    }
    SupportProfile profile;
    for (int n = -m; n <= m; ++n) {
        if (std::abs(sp.at(n)) > tol) {
            if (!profile.min_active)
                profile.min_active = n;
            profile.max_active = n;
        }
    }
    return profile;
}

cplx harmonic_extension(const FourierSpectrum& sp, cplx z)
{
    if (std::norm(z) >= 1.0)
        throw DomainError("harmonic extension is defined on the open disk");
    const int m = sp.window();
    // Horner on each half of the series.
    cplx analytic = 0.0;
    for (int n = m; n >= 0; --n)
        analytic = analytic * z + sp.at(n);
    cplx conj_part = 0.0;
    const cplx zb = std::conj(z);
    for (int n = m; n >= 1; --n)
        conj_part = (conj_part + sp.at(-n)) * zb;
    return analytic + conj_part;
}

WirtingerPair wirtinger(const FourierSpectrum& sp, cplx z)
{
    if (std::norm(z) >= 1.0)
        throw DomainError("Wirtinger derivatives are evaluated on the open disk");
    const int m = sp.window();
    cplx fz = 0.0;
    for (int n = m; n >= 1; --n)
        fz = fz * z + static_cast<double>(n) * sp.at(n);
    cplx fzbar = 0.0;
    const cplx zb = std::conj(z);
    for (int n = m; n >= 1; --n)
        fzbar = fzbar * zb + static_cast<double>(n) * sp.at(-n);
    return {fz, fzbar};
}

} // namespace circlemap
