#include "circlemap/blaschke.hpp"

#include <cmath>
#include <utility>

namespace circlemap {

namespace {

double wrap_angle(double a)
{
    double w = std::fmod(a, kTwoPi);
    if (w < 0.0)
        w += kTwoPi;
    return w;
}

} // namespace

BlaschkeProduct::BlaschkeProduct(double sigma_angle, std::vector<cplx> zeros)
    : sigma_angle_(wrap_angle(sigma_angle)), zeros_(std::move(zeros))
{
    for (const cplx& z : zeros_) {
        if (std::abs(z) >= 1.0 - kDiskMargin)
            throw DomainError("Blaschke zero has modulus >= 1 - 1e-9");
    }
}

cplx BlaschkeProduct::sigma() const
{
    return std::polar(1.0, sigma_angle_);
}

cplx BlaschkeProduct::operator()(cplx z) const
{
    return eval_blaschke(*this, z);
}

cplx eval_blaschke(const BlaschkeProduct& b, cplx z)
{
    cplx acc = b.sigma();
    for (const cplx& zk : b.zeros()) {
        const cplx den = 1.0 - std::conj(zk) * z;
        if (std::abs(den) < kPoleEps)
            throw PoleProximityError("evaluation point within 1e-12 of a Blaschke pole");
        acc *= (z - zk) / den;
    }
    return acc;
}

cplx eval_quotient(const RationalCircleMap& f, cplx zeta)
{
    const cplx q = eval_blaschke(f.numerator, zeta) / eval_blaschke(f.denominator, zeta);
    return q / std::abs(q);
}

RationalCircleMap make_quotient(const BlaschkeProduct& b, QuotientKind kind)
{
    const int n = b.degree();
    if (n < 1)
        throw DomainError("canonical quotient needs a Blaschke product of degree >= 1");
    if (kind == QuotientKind::BlaschkeOverMonomial)
        return {b, BlaschkeProduct(0.0, std::vector<cplx>(n - 1, cplx(0.0, 0.0)))};
    return {BlaschkeProduct(0.0, std::vector<cplx>(n + 1, cplx(0.0, 0.0))), b};
}

RationalCircleMap scale_zeros(const RationalCircleMap& f, double t)
{
    if (t < 0.0 || t > 1.0)
        throw DomainError("zero-scaling parameter must lie in [0, 1]");
    auto scale = [t](const BlaschkeProduct& b) {
        std::vector<cplx> zs = b.zeros();
        for (cplx& z : zs)
            z *= t;
        return BlaschkeProduct(b.sigma_angle(), std::move(zs));
    };
    return {scale(f.numerator), scale(f.denominator)};
}

HomotopyPath::HomotopyPath(RationalCircleMap base, std::vector<double> times)
    : base_(std::move(base)), times_(std::move(times))
{
    if (times_.empty())
        throw DomainError("homotopy path needs at least one time point");
    double prev = -1.0;
    for (double t : times_) {
        if (t < 0.0 || t > 1.0 || t <= prev)
            throw DomainError("homotopy times must be strictly increasing inside [0, 1]");
        prev = t;
    }
}

std::vector<RationalCircleMap> homotopy_samples(const HomotopyPath& path)
{
    std::vector<RationalCircleMap> maps;
    maps.reserve(path.times().size());
    for (double t : path.times())
        maps.push_back(scale_zeros(path.base(), t));
    return maps;
}

} // namespace circlemap
