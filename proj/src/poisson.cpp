#include "circlemap/poisson.hpp"

#include <cfloat>
#include <cmath>
#include <limits>

#include "detail/unit_grid.hpp"

namespace circlemap {

namespace {

// Equality boundaries of the closed-form conditions tolerate this much
// rounding, so configurations constructed to sit exactly on the boundary
// (moduli 1/(2n-1), 1/(2n+1)) classify on the non-strict side.
constexpr double kBoundaryTol = 1e-12;

struct CompactZero {
    double x;
    double y;
    double num; // 1 - r^2
};

std::vector<CompactZero> compact(const std::vector<cplx>& zeros)
{
    std::vector<CompactZero> out;
    out.reserve(zeros.size());
    for (const cplx& z : zeros)
        out.push_back({z.real(), z.imag(), 1.0 - std::norm(z)});
    return out;
}

void add_kernel_sums(const std::vector<CompactZero>& zs, const detail::UnitGrid& grid,
                     double sign, std::vector<double>& acc)
{
    const int n = grid.n;
    const double* c = grid.cos_v.data();
    const double* s = grid.sin_v.data();
    double* d = acc.data();
    for (const CompactZero& z : zs) {
        const double x = z.x, y = z.y, a = sign * z.num;
        for (int j = 0; j < n; ++j) {
            const double dx = c[j] - x;
            const double dy = s[j] - y;
            d[j] += a / (dx * dx + dy * dy);
        }
    }
}

double lipschitz_term(double r)
{
    const double omr = 1.0 - r;
    return 2.0 * r * (1.0 + r) / (omr * omr * omr);
}

double quotient_lipschitz(const RationalCircleMap& f)
{
    double l = 0.0;
    for (const cplx& z : f.numerator.zeros())
        l += lipschitz_term(std::abs(z));
    for (const cplx& w : f.denominator.zeros())
        l += lipschitz_term(std::abs(w));
    return l;
}

} // namespace

double poisson_kernel(cplx z, cplx zeta)
{
    const double r2 = std::norm(z);
    if (r2 >= 1.0)
        throw DomainError("Poisson kernel needs |z| < 1");
    return (1.0 - r2) / std::norm(zeta - z);
}

std::string_view to_string(Verdict v)
{
    switch (v) {
    case Verdict::Homeo: return "Homeo";
    case Verdict::NotHomeo: return "NotHomeo";
    case Verdict::Inconclusive: return "Inconclusive";
    }
    return "Inconclusive";
}

CriterionReport criterion_check(const RationalCircleMap& f, const CriterionOptions& opt)
{
    if (opt.grid_size < 16)
        throw DomainError("criterion grid must have at least 16 points");

    CriterionReport report;
    report.lipschitz_bound = quotient_lipschitz(f);

    if (f.degree_offset() != 1) {
        report.verdict = Verdict::NotHomeo;
        report.margin_lower_bound = -std::numeric_limits<double>::infinity();
        report.grid_min = -std::numeric_limits<double>::infinity();
        report.grid_size = opt.grid_size; // no grid was evaluated
        return report;
    }

    const std::vector<CompactZero> num_zeros = compact(f.numerator.zeros());
    const std::vector<CompactZero> den_zeros = compact(f.denominator.zeros());
    const double lip = report.lipschitz_bound;
    const double negative_tol = 10.0 * DBL_EPSILON * (1.0 + lip);

    // Scratch survives across refinement rounds and across calls.
    thread_local std::vector<double> diff;

    int n = opt.grid_size;
    for (;;) {
        const auto grid = detail::unit_grid(n);
        diff.assign(n, 0.0);
        add_kernel_sums(num_zeros, *grid, +1.0, diff);
        add_kernel_sums(den_zeros, *grid, -1.0, diff);

        int arg_min = 0;
        double min_val = diff[0];
        for (int j = 1; j < n; ++j) {
            if (diff[j] < min_val) {
                min_val = diff[j];
                arg_min = j;
            }
        }

        report.grid_size = n;
        report.grid_min = min_val;
        report.witness_angle = kTwoPi * static_cast<double>(arg_min) / n;
        report.margin_lower_bound = min_val - lip * kPi / n;

        if (min_val < -negative_tol) {
            report.verdict = Verdict::NotHomeo;
            return report;
        }
        if (report.margin_lower_bound >= 0.0) {
            report.verdict = Verdict::Homeo;
            return report;
        }
        if (!opt.adaptive || n >= opt.max_grid_size) {
            report.verdict = Verdict::Inconclusive;
            return report;
        }
        n *= 2;
    }
}

CriterionReport criterion_check(const RationalCircleMap& f, int grid_size)
{
    CriterionOptions opt;
    opt.grid_size = grid_size;
    if (opt.max_grid_size < grid_size)
        opt.max_grid_size = grid_size;
    return criterion_check(f, opt);
}

ConditionCheck kernel_min_sum_condition(std::span<const cplx> zeros)
{
    double lhs = 0.0;
    for (const cplx& z : zeros) {
        const double r = std::abs(z);
        if (r >= 1.0)
            throw DomainError("zero outside the open unit disk");
        lhs += (1.0 - r) / (1.0 + r);
    }
    const double n = static_cast<double>(zeros.size());
    return {lhs >= n - 1.0 - kBoundaryTol, lhs};
}

ConditionCheck kernel_max_sum_condition(std::span<const cplx> zeros)
{
    double lhs = 0.0;
    for (const cplx& z : zeros) {
        const double r = std::abs(z);
        if (r >= 1.0)
            throw DomainError("zero outside the open unit disk");
        lhs += (1.0 + r) / (1.0 - r);
    }
    const double n = static_cast<double>(zeros.size());
    return {lhs <= n + 1.0 + kBoundaryTol, lhs};
}

bool degree2_real_criterion(double a, double b)
{
    if (std::abs(a) >= 1.0 || std::abs(b) >= 1.0)
        throw DomainError("degree-2 criterion needs real zeros in (-1, 1)");
    const double ab = a * b;
    if (ab >= 0.0 && 1.0 - std::abs(a) - std::abs(b) - 3.0 * ab >= 0.0)
        return true;
    if (ab <= 0.0 && 1.0 + ab - a * a - b * b >= 0.0)
        return true;
    return false;
}

bool aligned_zeros_criterion(std::span<const cplx> zeros, QuotientKind kind)
{
    constexpr double align_tol = 1e-10;
    bool have_ref = false;
    double ref = 0.0;
    for (const cplx& z : zeros) {
        if (std::abs(z) == 0.0)
            continue; // the origin is aligned with everything
        const double a = std::arg(z);
        if (!have_ref) {
            ref = a;
            have_ref = true;
            continue;
        }
        if (std::abs(std::remainder(a - ref, kTwoPi)) > align_tol)
            throw AlignmentError("zeros do not share a common argument");
    }
    if (kind == QuotientKind::BlaschkeOverMonomial)
        return kernel_min_sum_condition(zeros).holds;
    return kernel_max_sum_condition(zeros).holds;
}

double semigroup_residual(cplx z, double t, cplx zeta, int quad_points)
{
    if (quad_points < 64)
        throw DomainError("semigroup quadrature needs at least 64 points");
    if (t < 0.0 || t >= 1.0)
        throw DomainError("semigroup parameter t must lie in [0, 1)");

    const cplx t_point(t, 0.0);
    const auto grid = detail::unit_grid(quad_points);
    double sum = 0.0;
    for (int j = 0; j < quad_points; ++j) {
        const cplx xi(grid->cos_v[j], grid->sin_v[j]);
        sum += poisson_kernel(z, xi) * poisson_kernel(t_point, zeta * std::conj(xi));
    }
    const double convolved = sum / quad_points;
    return std::abs(poisson_kernel(t * z, zeta) - convolved);
}

} // namespace circlemap
