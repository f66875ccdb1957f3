#include <doctest.h>

#include <random>

#include "circlemap/fourier.hpp"
#include "circlemap/geometry.hpp"
#include "circlemap/poisson.hpp"
#include "oracles.hpp"

using namespace circlemap;

namespace {

FourierSpectrum planted_spectrum(const std::vector<cplx>& coeffs, int window, int n)
{
    // Synthesize a trig polynomial from coefficients indexed -window..window.
    auto f = [&](cplx zeta) {
        cplx v = 0.0;
        cplx pos = 1.0;
        for (int m = 0; m <= window; ++m) {
            v += coeffs[m + window] * pos;
            pos *= zeta;
        }
        cplx neg = std::conj(zeta);
        for (int m = 1; m <= window; ++m) {
            v += coeffs[window - m] * neg;
            neg *= std::conj(zeta);
        }
        return v;
    };
    return spectrum(sample_map(f, n), window);
}

} // namespace

TEST_CASE("sampling basics")
{
    const SampledCircleMap identity = sample_map([](cplx z) { return z; }, 64);
    for (int k = 0; k < 64; ++k)
        CHECK(std::abs(identity.values()[k] - std::polar(1.0, kTwoPi * k / 64.0)) < 1e-15);

    const SampledCircleMap ones = sample_map([](cplx) { return cplx(1.0, 0.0); }, 128);
    for (const cplx& v : ones.values())
        CHECK(v == cplx(1.0, 0.0));

    const SampledCircleMap folding = sample_map(folding_curve, 64);
    CHECK(std::abs(folding.values()[0] - cplx(2.5, 0.0)) < 1e-15);

    CHECK_THROWS_AS(sample_map([](cplx z) { return z; }, 32), DomainError);
    CHECK_THROWS_AS(sample_map([](cplx z) { return z; }, 100), DomainError);
    CHECK_THROWS_AS(SampledCircleMap(std::vector<cplx>(48)), DomainError);
}

TEST_CASE("spectrum of the identity map")
{
    const FourierSpectrum sp = spectrum(sample_map([](cplx z) { return z; }, 64), 5);
    for (int n = -5; n <= 5; ++n) {
        const cplx expected = n == 1 ? cplx(1.0, 0.0) : cplx(0.0, 0.0);
        CHECK(std::abs(sp.at(n) - expected) <= 1e-14);
    }
    CHECK(sp.source_resolution() == 64);
}

TEST_CASE("spectrum of the folding curve")
{
    const FourierSpectrum sp = spectrum(sample_map(folding_curve, 256), 4);
    CHECK(std::abs(sp.at(1) - 1.0) <= 1e-13);
    CHECK(std::abs(sp.at(2) - 1.0) <= 1e-13);
    CHECK(std::abs(sp.at(-2) - 0.5) <= 1e-13);
    for (int n : {-4, -3, -1, 0, 3, 4})
        CHECK(std::abs(sp.at(n)) <= 1e-13);
}

TEST_CASE("spectrum of a single Blaschke factor matches its series")
{
    const double a = 0.4;
    const BlaschkeProduct b(0.0, {cplx(a, 0.0)});
    const FourierSpectrum sp =
        spectrum(sample_map([&b](cplx z) { return eval_blaschke(b, z); }, 1024), 8);

    // Geometric-series route: (z - a) sum a^n z^n.
    CHECK(std::abs(sp.at(0) - (-0.4)) <= 1e-13);
    CHECK(std::abs(sp.at(1) - 0.84) <= 1e-13);
    CHECK(std::abs(sp.at(2) - 0.336) <= 1e-13);
    for (int n = -8; n < 0; ++n)
        CHECK(std::abs(sp.at(n)) <= 1e-13);

    const auto series = oracles::blaschke_taylor({cplx(a, 0.0)}, cplx(1.0, 0.0), 9);
    for (int n = 0; n <= 8; ++n)
        CHECK(std::abs(sp.at(n) - series[n]) <= 1e-12);
}

TEST_CASE("window validation")
{
    const SampledCircleMap s = sample_map([](cplx z) { return z; }, 64);
    CHECK_THROWS_AS(spectrum(s, 32), WindowTooWideError);
    CHECK_NOTHROW(spectrum(s, 31));
}

TEST_CASE("planted trigonometric polynomials are recovered exactly")
{
    std::mt19937_64 rng(2024);
    std::uniform_real_distribution<double> coeff(-2.0, 2.0);
    std::uniform_int_distribution<int> window_dist(4, 16);

    for (int trial = 0; trial < 25; ++trial) {
        const int window = window_dist(rng);
        int n = 64;
        while (n < 4 * window)
            n *= 2;
        std::vector<cplx> coeffs(2 * window + 1);
        for (cplx& c : coeffs)
            c = cplx(coeff(rng), coeff(rng));
        const FourierSpectrum sp = planted_spectrum(coeffs, window, n);
        for (int m = -window; m <= window; ++m)
            CHECK(std::abs(sp.at(m) - coeffs[m + window]) <= 1e-13);
        CHECK(sp.tail_energy() <= 1e-10);
    }
}

TEST_CASE("window energy never exceeds the sample mean square")
{
    std::mt19937_64 rng(31337);
    std::uniform_real_distribution<double> coeff(-1.0, 1.0);
    for (int trial = 0; trial < 20; ++trial) {
        // Smooth but not bandlimited inside the window.
        const double a = 0.3 * coeff(rng);
        const double c = coeff(rng);
        auto f = [a, c](cplx z) {
            return std::exp(a * z) + c * std::conj(z) * std::conj(z) + folding_curve(z) * 0.1;
        };
        const SampledCircleMap s = sample_map(f, 256);
        const FourierSpectrum sp = spectrum(s, 6);
        double window_energy = 0.0;
        for (int m = -6; m <= 6; ++m)
            window_energy += std::norm(sp.at(m));
        double mean_sq = 0.0;
        for (const cplx& v : s.values())
            mean_sq += std::norm(v);
        mean_sq /= s.size();
        CHECK(window_energy <= mean_sq + 1e-10);
        CHECK(sp.tail_energy() >= 0.0);
    }
}

TEST_CASE("support profile")
{
    const FourierSpectrum identity = spectrum(sample_map([](cplx z) { return z; }, 64), 8);
    const SupportProfile ip = support_profile(identity);
    REQUIRE(ip.min_active.has_value());
    CHECK(*ip.min_active == 1);
    CHECK(*ip.max_active == 1);

    const FourierSpectrum folding = spectrum(sample_map(folding_curve, 256), 8);
    const SupportProfile fp = support_profile(folding);
    CHECK(*fp.min_active == -2);
    CHECK(*fp.max_active == 2);

    // Degree-3 product over zeta^2: lowest surviving index is -2.
    const std::vector<cplx> zeros{cplx(0.1, 0.0), cplx(0.0, 0.05), cplx(-0.08, 0.02)};
    const RationalCircleMap f =
        make_quotient(BlaschkeProduct(0.0, zeros), QuotientKind::BlaschkeOverMonomial);
    const FourierSpectrum sp =
        spectrum(sample_map([&f](cplx z) { return eval_quotient(f, z); }, 1024), 16);
    const SupportProfile profile = support_profile(sp);
    CHECK(*profile.min_active == -2);

    // Oracle: expanded product series; index n of the quotient is n+2 of B.
    const auto series = oracles::blaschke_taylor(zeros, cplx(1.0, 0.0), 20);
    CHECK(std::abs(series[0]) > 1e-6);
    CHECK(std::abs(sp.at(-2) - series[0]) < 1e-10);

    const FourierSpectrum silent =
        spectrum(sample_map([](cplx) { return cplx(0.0, 0.0); }, 64), 4);
    const SupportProfile none = support_profile(silent);
    CHECK_FALSE(none.min_active.has_value());
    CHECK_FALSE(none.max_active.has_value());
}

TEST_CASE("harmonic extension basics")
{
    const FourierSpectrum folding = spectrum(sample_map(folding_curve, 256), 4);
    CHECK(std::abs(harmonic_extension(folding, cplx(0.0, 0.0)) - folding.at(0)) < 1e-15);
    for (double r : {0.2, 0.5, 0.8}) {
        const cplx expected(r + r * r + r * r / 2.0, 0.0);
        CHECK(std::abs(harmonic_extension(folding, cplx(r, 0.0)) - expected) <= 1e-12);
    }

    const FourierSpectrum identity = spectrum(sample_map([](cplx z) { return z; }, 64), 4);
    const cplx z(0.3, 0.4);
    CHECK(std::abs(harmonic_extension(identity, z) - z) <= 1e-14);

    CHECK_THROWS_AS(harmonic_extension(identity, cplx(1.0, 0.0)), DomainError);
}

TEST_CASE("Wirtinger derivatives at pinned points")
{
    const FourierSpectrum folding = spectrum(sample_map(folding_curve, 256), 4);
    const WirtingerPair at0 = wirtinger(folding, cplx(0.0, 0.0));
    CHECK(std::abs(at0.fz - folding.at(1)) < 1e-15);
    CHECK(std::abs(at0.fzbar - folding.at(-1)) < 1e-15);

    const WirtingerPair at_half = wirtinger(folding, cplx(-0.5, 0.0));
    CHECK(std::abs(at_half.fz) <= 1e-13);
    CHECK(std::abs(at0.fzbar) <= 1e-13);
}

TEST_CASE("Wirtinger derivatives agree with finite differences")
{
    std::mt19937_64 rng(909);
    std::uniform_real_distribution<double> coeff(-1.0, 1.0);
    std::uniform_real_distribution<double> angle(0.0, kTwoPi);
    std::uniform_real_distribution<double> radius(0.0, 0.9);

    std::vector<cplx> coeffs(17);
    for (cplx& c : coeffs)
        c = cplx(coeff(rng), coeff(rng));
    const FourierSpectrum sp = planted_spectrum(coeffs, 8, 1024);

    const double h = 1e-5;
    for (int trial = 0; trial < 100; ++trial) {
        const cplx z = std::polar(radius(rng), angle(rng));
        const WirtingerPair w = wirtinger(sp, z);
        const cplx fx =
            (harmonic_extension(sp, z + h) - harmonic_extension(sp, z - h)) / (2.0 * h);
        const cplx fy = (harmonic_extension(sp, z + cplx(0.0, h)) -
                         harmonic_extension(sp, z - cplx(0.0, h))) /
                        (2.0 * h);
        const cplx fz = 0.5 * (fx - cplx(0.0, 1.0) * fy);
        const cplx fzbar = 0.5 * (fx + cplx(0.0, 1.0) * fy);
        CHECK(std::abs(w.fz - fz) <= 1e-7);
        CHECK(std::abs(w.fzbar - fzbar) <= 1e-7);
    }
}

TEST_CASE("one-sided support of certified quotients")
{
    std::mt19937_64 rng(60601);
    std::uniform_real_distribution<double> angle(0.0, kTwoPi);
    std::uniform_real_distribution<double> unit_draw(0.0, 1.0);
    std::uniform_int_distribution<int> deg(1, 5);

    int lower_done = 0, upper_done = 0;
    while (lower_done < 10 || upper_done < 10) {
        const int n = deg(rng);
        const bool lower = lower_done < 10;
        const double cap = lower ? 0.5 : 0.8 / (2.0 * n + 1.0);
        std::vector<cplx> zeros;
        for (int k = 0; k < n; ++k)
            zeros.push_back(std::polar(cap * std::sqrt(unit_draw(rng)), angle(rng)));
        const BlaschkeProduct b(angle(rng), zeros);
        const QuotientKind kind =
            lower ? QuotientKind::BlaschkeOverMonomial : QuotientKind::MonomialOverBlaschke;
        const RationalCircleMap f = make_quotient(b, kind);
        if (criterion_check(f).verdict != Verdict::Homeo)
            continue;

        const FourierSpectrum sp =
            spectrum(sample_map([&f](cplx z) { return eval_quotient(f, z); }, 1024), 16);
        if (lower) {
            ++lower_done;
            for (int j = -16; j < -(n - 1); ++j)
                CHECK(std::abs(sp.at(j)) <= 1e-10);
        } else {
            ++upper_done;
            for (int j = n + 2; j <= 16; ++j)
                CHECK(std::abs(sp.at(j)) <= 1e-10);
        }
    }
}
