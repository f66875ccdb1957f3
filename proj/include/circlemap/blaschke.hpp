#pragma once

#include <complex>
#include <vector>

#include "circlemap/errors.hpp"

namespace circlemap {

using cplx = std::complex<double>;

inline constexpr double kPi = 3.141592653589793238462643383279502884;
inline constexpr double kTwoPi = 2.0 * kPi;

// Zeros with modulus >= 1 - kDiskMargin are rejected at construction; the
// Lipschitz constant of the criterion certification grows like (1-r)^-3 and
// verdicts for such zeros would be vacuous anyway.
inline constexpr double kDiskMargin = 1e-9;

// Below this distance to a factor's pole the quotient has no significant
// digits left in double precision.
inline constexpr double kPoleEps = 1e-12;

/// Finite product sigma * prod (z - z_k) / (1 - conj(z_k) z) with all z_k in
/// the open unit disk. Immutable after construction; degree = number of
/// zeros, multiplicity by repetition, order preserved as given.
class BlaschkeProduct {
public:
    BlaschkeProduct() = default;

    explicit BlaschkeProduct(double sigma_angle, std::vector<cplx> zeros = {});

    double sigma_angle() const { return sigma_angle_; }
    cplx sigma() const;
    const std::vector<cplx>& zeros() const { return zeros_; }
    int degree() const { return static_cast<int>(zeros_.size()); }

    cplx operator()(cplx z) const;

private:
    double sigma_angle_ = 0.0; // in [0, 2*pi)
    std::vector<cplx> zeros_;
};

/// Quotient numerator/denominator of two Blaschke products; restricted to the
/// unit circle it is the rational circle map the homeomorphism criterion
/// classifies. Plain value type: both parts carry their own invariants.
struct RationalCircleMap {
    BlaschkeProduct numerator;
    BlaschkeProduct denominator;

    int degree_offset() const { return numerator.degree() - denominator.degree(); }
};

/// The two canonical one-sided families: B(z)/z^(n-1) and z^(n+1)/B(z).
enum class QuotientKind {
    BlaschkeOverMonomial, // B / zeta^(n-1)
    MonomialOverBlaschke, // zeta^(n+1) / B
};

/// Builds the canonical quotient of the given kind from a Blaschke product of
/// degree n >= 1 (monomial factors are products with zeros at the origin).
RationalCircleMap make_quotient(const BlaschkeProduct& b, QuotientKind kind);

/// Zero-scaling family evaluated at a list of parameter values in [0, 1].
class HomotopyPath {
public:
    HomotopyPath(RationalCircleMap base, std::vector<double> times);

    const RationalCircleMap& base() const { return base_; }
    const std::vector<double>& times() const { return times_; }

private:
    RationalCircleMap base_;
    std::vector<double> times_; // strictly increasing, inside [0, 1]
};

/// sigma * prod (z - z_k)/(1 - conj(z_k) z). Throws PoleProximityError when
/// some |1 - conj(z_k) z| < kPoleEps.
cplx eval_blaschke(const BlaschkeProduct& b, cplx z);

/// numerator(zeta)/denominator(zeta), divided by its own modulus so callers
/// downstream (argument lifting, spectra of homeomorphisms) see exactly
/// unimodular samples. Only meaningful for |zeta| = 1.
cplx eval_quotient(const RationalCircleMap& f, cplx zeta);

/// Replaces every zero z_k of both parts by t*z_k; sigma angles unchanged.
RationalCircleMap scale_zeros(const RationalCircleMap& f, double t);

/// One scaled map per time point of the path, in order.
std::vector<RationalCircleMap> homotopy_samples(const HomotopyPath& path);

} // namespace circlemap
