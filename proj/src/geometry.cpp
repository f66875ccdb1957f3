#include "circlemap/geometry.hpp"

#include <cmath>
#include <limits>
#include <random>

namespace circlemap {

namespace {

constexpr double kMonotoneSlack = 1e-12; // rounding allowance on angle steps
constexpr double kWindingTol = 1e-6;

// Principal-branch argument increments around the closed sample loop;
// index k holds arg(v[k+1]/v[k]).
std::vector<double> arg_increments(const std::vector<cplx>& v)
{
    const int n = static_cast<int>(v.size());
    std::vector<double> inc(n);
    for (int k = 0; k < n; ++k)
        inc[k] = std::arg(v[(k + 1) % n] * std::conj(v[k]));
    return inc;
}

double total(const std::vector<double>& inc)
{
    double s = 0.0;
    for (double d : inc)
        s += d;
    return s;
}

bool monotone_increasing_loop(const std::vector<double>& inc)
{
    for (double d : inc)
        if (d < -kMonotoneSlack)
            return false;
    return std::abs(total(inc) - kTwoPi) < kWindingTol;
}

std::vector<double> sample_increments(const std::function<cplx(cplx)>& f, int n)
{
    std::vector<cplx> v(n);
    for (int k = 0; k < n; ++k)
        v[k] = f(std::polar(1.0, kTwoPi * static_cast<double>(k) / n));
    return arg_increments(v);
}

double max_abs(const std::vector<double>& xs)
{
    double m = 0.0;
    for (double x : xs)
        m = std::max(m, std::abs(x));
    return m;
}

} // namespace

bool argument_monotone(const SampledCircleMap& s)
{
    for (const cplx& v : s.values()) {
        if (std::abs(std::abs(v) - 1.0) > 1e-9)
            throw NotUnimodularError("sample is off the unit circle by more than 1e-9");
    }
    return monotone_increasing_loop(arg_increments(s.values()));
}

bool argument_monotone_fn(const std::function<cplx(cplx)>& f, int initial_n, int max_n)
{
    int n = std::max(initial_n, 64);
    std::vector<double> inc = sample_increments(f, n);
    bool verdict = monotone_increasing_loop(inc);
    while (n < max_n) {
        n *= 2;
        std::vector<double> finer = sample_increments(f, n);
        const bool finer_verdict = monotone_increasing_loop(finer);
        if (finer_verdict == verdict && max_abs(finer) < kPi / 2.0)
            return finer_verdict;
        verdict = finer_verdict;
        inc = std::move(finer);
    }
    return verdict;
}

bool starlike_about(const SampledCircleMap& s, cplx w0)
{
    std::vector<cplx> shifted;
    shifted.reserve(s.values().size());
    for (const cplx& v : s.values()) {
        const cplx g = v - w0;
        if (std::abs(g) < 1e-9)
            throw CenterOnCurveError("candidate center lies on the sampled curve");
        shifted.push_back(g);
    }
    const std::vector<double> inc = arg_increments(shifted);

    bool ccw = true, cw = true;
    for (double d : inc) {
        if (d < -kMonotoneSlack)
            ccw = false;
        if (d > kMonotoneSlack)
            cw = false;
    }
    const double t = total(inc);
    if (ccw && std::abs(t - kTwoPi) < kWindingTol)
        return true;
    if (cw && std::abs(t + kTwoPi) < kWindingTol)
        return true;
    return false;
}

NevanlinnaScan nevanlinna_scan(const std::function<cplx(cplx)>& h,
                               const std::function<cplx(cplx)>& dh, cplx w0, int grid)
{
    if (grid < 16)
        throw DomainError("scan grid must have at least 16 points");
    NevanlinnaScan scan;
    bool first = true;
    for (int j = 0; j < grid; ++j) {
        const double theta = kTwoPi * static_cast<double>(j) / grid;
        const cplx zeta = std::polar(1.0, theta);
        const cplx den = h(zeta) - w0;
        if (std::abs(den) < 1e-12)
            throw PoleOnCircleError("h - w0 vanishes at a grid point");
        const double re = (zeta * dh(zeta) / den).real();
        if (first || re < scan.min_real_part) {
            scan.min_real_part = re;
            scan.argmin_angle = theta;
            first = false;
        }
    }
    return scan;
}

double nevanlinna_residual(const std::function<cplx(cplx)>& h,
                           const std::function<cplx(cplx)>& dh, cplx w0, int grid)
{
    return nevanlinna_scan(h, dh, w0, grid).min_real_part;
}

double factorization_identity_residual(int grid)
{
    if (grid < 16)
        throw DomainError("grid must have at least 16 points");
    double worst = 0.0;
    for (int j = 0; j < grid; ++j) {
        const double t = kTwoPi * static_cast<double>(j) / grid;
        const double lhs = 2.5 + 2.0 * std::cos(t) - std::cos(2.0 * t) - 0.5 * std::cos(3.0 * t);
        const double c = std::cos(t / 2.0);
        const double rhs = (5.0 - 2.0 * std::cos(2.0 * t)) * c * c;
        worst = std::max(worst, std::abs(lhs - rhs));
    }
    return worst;
}

double antipodal_balance_point(const StarlikeProfile& p, double tol)
{
    if (tol <= 0.0)
        throw DomainError("balance tolerance must be positive");
    auto psi = [&p](double theta) { return p.angle(theta + kPi) - p.angle(theta) - kPi; };

    constexpr int scan_points = 4096;
    const double upper = kPi * (1.0 - 1e-12); // stay inside [0, pi)
    double prev_theta = 0.0;
    double prev_val = psi(0.0);
    if (std::abs(prev_val) <= tol)
        return 0.0;
    for (int i = 1; i <= scan_points; ++i) {
        const double theta = std::min(kPi * static_cast<double>(i) / scan_points, upper);
        const double val = psi(theta);
        if (std::abs(val) <= tol)
            return theta;
        if ((prev_val < 0.0) != (val < 0.0)) {
            // Bisect [prev_theta, theta].
            double lo = prev_theta, hi = theta, flo = prev_val;
            for (int it = 0; it < 200 && hi - lo > 1e-15; ++it) {
                const double mid = 0.5 * (lo + hi);
                const double fm = psi(mid);
                if (std::abs(fm) <= tol)
                    return mid;
                if ((flo < 0.0) != (fm < 0.0)) {
                    hi = mid;
                } else {
                    lo = mid;
                    flo = fm;
                }
            }
            return 0.5 * (lo + hi);
        }
        prev_theta = theta;
        prev_val = val;
    }
    throw NoSignChangeError("balance function keeps one sign; profile violates its invariants");
}

namespace {

double cross2(cplx a, cplx b)
{
    return a.real() * b.imag() - a.imag() * b.real();
}

bool within_box(cplx p, cplx q, cplx r)
{
    return std::min(p.real(), r.real()) <= q.real() &&
           q.real() <= std::max(p.real(), r.real()) &&
           std::min(p.imag(), r.imag()) <= q.imag() &&
           q.imag() <= std::max(p.imag(), r.imag());
}

bool segments_intersect(cplx p1, cplx p2, cplx p3, cplx p4)
{
    const double d1 = cross2(p4 - p3, p1 - p3);
    const double d2 = cross2(p4 - p3, p2 - p3);
    const double d3 = cross2(p2 - p1, p3 - p1);
    const double d4 = cross2(p2 - p1, p4 - p1);
    if (((d1 > 0 && d2 < 0) || (d1 < 0 && d2 > 0)) &&
        ((d3 > 0 && d4 < 0) || (d3 < 0 && d4 > 0)))
        return true;
    if (d1 == 0 && within_box(p3, p1, p4))
        return true;
    if (d2 == 0 && within_box(p3, p2, p4))
        return true;
    if (d3 == 0 && within_box(p1, p3, p2))
        return true;
    if (d4 == 0 && within_box(p1, p4, p2))
        return true;
    return false;
}

} // namespace

EmbeddingReport embedding_report(const SampledCircleMap& s, cplx interior_point)
{
    const std::vector<cplx>& v = s.values();
    const int n = static_cast<int>(v.size());

    EmbeddingReport report;

    std::vector<cplx> shifted(v);
    for (cplx& g : shifted)
        g -= interior_point;
    const double w = total(arg_increments(shifted)) / kTwoPi;
    report.winding_number = static_cast<int>(std::lround(w));
    report.sense_preserving = report.winding_number == 1;

    double min_x = v[0].real(), max_x = v[0].real();
    double min_y = v[0].imag(), max_y = v[0].imag();
    for (const cplx& p : v) {
        min_x = std::min(min_x, p.real());
        max_x = std::max(max_x, p.real());
        min_y = std::min(min_y, p.imag());
        max_y = std::max(max_y, p.imag());
    }
    const double diag = std::hypot(max_x - min_x, max_y - min_y);

    // Vertex collisions: curves that retrace themselves (like doubled
    // covers) repeat sample points up to rounding.
    double min_gap = std::numeric_limits<double>::infinity();
    for (int i = 0; i < n; ++i) {
        for (int j = i + 2; j < n; ++j) {
            if (i == 0 && j == n - 1)
                continue; // wrap-around neighbours
            min_gap = std::min(min_gap, std::abs(v[i] - v[j]));
        }
    }
    report.min_pairwise_gap = min_gap;

    // Discrete simplicity: the closed polyline must have no crossing between
    // edges that do not share a vertex. This tolerates curves that fold back
    // within a step (vanishing boundary derivative) where any pairwise
    // distance threshold would not.
    bool simple = min_gap > 1e-13 * diag;
    for (int i = 0; simple && i < n; ++i) {
        const cplx a1 = v[i];
        const cplx a2 = v[(i + 1) % n];
        for (int j = i + 2; j < n; ++j) {
            if (i == 0 && j == n - 1)
                continue; // shares the wrap-around vertex
            if (segments_intersect(a1, a2, v[j], v[(j + 1) % n])) {
                simple = false;
                break;
            }
        }
    }
    report.injective = simple;
    return report;
}

namespace {

struct TrigPoly {
    std::vector<double> cos_c;
    std::vector<double> sin_c;

    double operator()(double theta) const
    {
        double s = 0.0;
        for (std::size_t k = 0; k < cos_c.size(); ++k) {
            const double kt = static_cast<double>(k + 1) * theta;
            s += cos_c[k] * std::cos(kt) + sin_c[k] * std::sin(kt);
        }
        return s;
    }

    double coeff_sum() const
    {
        double s = 0.0;
        for (std::size_t k = 0; k < cos_c.size(); ++k)
            s += std::abs(cos_c[k]) + std::abs(sin_c[k]);
        return s;
    }

    double derivative_coeff_sum() const
    {
        double s = 0.0;
        for (std::size_t k = 0; k < cos_c.size(); ++k)
            s += static_cast<double>(k + 1) * (std::abs(cos_c[k]) + std::abs(sin_c[k]));
        return s;
    }

    void scale(double f)
    {
        for (double& c : cos_c)
            c *= f;
        for (double& c : sin_c)
            c *= f;
    }
};

TrigPoly random_trig_poly(std::mt19937_64& rng, int degree)
{
    std::uniform_real_distribution<double> unit(-1.0, 1.0);
    TrigPoly p;
    p.cos_c.resize(std::max(degree, 0));
    p.sin_c.resize(std::max(degree, 0));
    for (int k = 0; k < degree; ++k) {
        p.cos_c[k] = unit(rng);
        p.sin_c[k] = unit(rng);
    }
    return p;
}

} // namespace

StarlikeEmbedding random_starlike_embedding(std::uint64_t seed, int radial_degree,
                                            int arg_degree, int n)
{
    if (radial_degree < 0 || arg_degree < 0)
        throw DomainError("perturbation degrees must be >= 0");
    std::mt19937_64 rng(seed);
    std::uniform_real_distribution<double> radial_amp(0.10, 0.45);
    std::uniform_real_distribution<double> arg_amp(0.10, 0.50);
    std::uniform_real_distribution<double> center_coord(-1.5, 1.5);

    TrigPoly radial_pert = random_trig_poly(rng, radial_degree);
    if (radial_degree > 0) {
        const double s = radial_pert.coeff_sum();
        if (s > 0.0)
            radial_pert.scale(radial_amp(rng) / s);
    }

    TrigPoly arg_pert = random_trig_poly(rng, arg_degree);
    if (arg_degree > 0) {
        const double s = arg_pert.derivative_coeff_sum();
        if (s > 0.0)
            arg_pert.scale(arg_amp(rng) / s);
    }

    const cplx center(center_coord(rng), center_coord(rng));

    StarlikeProfile profile;
    profile.center = center;
    profile.radial = [radial_pert](double theta) { return 1.0 + radial_pert(theta); };
    profile.angle = [arg_pert](double theta) { return theta + arg_pert(theta); };

    std::vector<cplx> values(n);
    for (int k = 0; k < n; ++k) {
        const double theta = kTwoPi * static_cast<double>(k) / n;
        values[k] = center + std::polar(profile.radial(theta), profile.angle(theta));
    }
    return {SampledCircleMap(std::move(values)), std::move(profile)};
}

BandlimitedEmbedding random_bandlimited_embedding(std::uint64_t seed, int degree, int n)
{
    if (degree < 1)
        throw DomainError("bandlimited generator needs degree >= 1");
    std::mt19937_64 rng(seed);
    std::uniform_real_distribution<double> unit(-1.0, 1.0);
    std::uniform_real_distribution<double> amp_dist(0.15, 0.40);

    std::vector<cplx> coeffs(2 * degree + 1, cplx(0.0, 0.0));
    double weighted = 0.0;
    for (int m = -degree; m <= degree; ++m) {
        if (m == 1)
            continue;
        const cplx c(unit(rng), unit(rng));
        coeffs[m + degree] = c;
        weighted += (1.0 + std::abs(m)) * std::abs(c);
    }
    const double amp = amp_dist(rng);
    if (weighted > 0.0) {
        for (cplx& c : coeffs)
            c *= amp / weighted;
    }
    coeffs[1 + degree] = 1.0;

    std::vector<cplx> values(n);
    for (int k = 0; k < n; ++k) {
        const cplx zeta = std::polar(1.0, kTwoPi * static_cast<double>(k) / n);
        cplx v = 0.0;
        cplx pos = 1.0; // zeta^m for m >= 0
        for (int m = 0; m <= degree; ++m) {
            v += coeffs[m + degree] * pos;
            pos *= zeta;
        }
        cplx neg = std::conj(zeta);
        for (int m = 1; m <= degree; ++m) {
            v += coeffs[degree - m] * neg;
            neg *= std::conj(zeta);
        }
        values[k] = v;
    }
    return {SampledCircleMap(std::move(values)), std::move(coeffs), degree};
}

std::optional<cplx> find_star_center(const SampledCircleMap& s)
{
    const std::vector<cplx>& v = s.values();
    cplx centroid = 0.0;
    for (const cplx& p : v)
        centroid += p;
    centroid /= static_cast<double>(v.size());

    auto try_center = [&s](cplx w0) -> bool {
        try {
            return starlike_about(s, w0);
        } catch (const CenterOnCurveError&) {
            return false;
        }
    };

    if (try_center(centroid))
        return centroid;

    double min_x = v[0].real(), max_x = v[0].real();
    double min_y = v[0].imag(), max_y = v[0].imag();
    for (const cplx& p : v) {
        min_x = std::min(min_x, p.real());
        max_x = std::max(max_x, p.real());
        min_y = std::min(min_y, p.imag());
        max_y = std::max(max_y, p.imag());
    }
    constexpr int steps = 24;
    for (int i = 1; i < steps; ++i) {
        for (int j = 1; j < steps; ++j) {
            const cplx w0(min_x + (max_x - min_x) * i / steps,
                          min_y + (max_y - min_y) * j / steps);
            if (try_center(w0))
                return w0;
        }
    }
    return std::nullopt;
}

cplx folding_curve(cplx zeta)
{
    const cplx zb = std::conj(zeta);
    return zeta + zeta * zeta + 0.5 * zb * zb;
}

cplx folding_rational(cplx z)
{
    return z * z + z + 0.5 / (z * z);
}

cplx folding_rational_derivative(cplx z)
{
    return 2.0 * z + 1.0 - 1.0 / (z * z * z);
}

} // namespace circlemap
