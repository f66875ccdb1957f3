#pragma once

#include <cstdint>
#include <functional>
#include <optional>

#include "circlemap/fourier.hpp"

namespace circlemap {

/// True iff the lifted argument of the (unimodular) samples is non-decreasing
/// around the circle with total increase 2*pi. Plateaus are allowed; steps
/// may dip below zero only by rounding noise. The samples must resolve the
/// map (per-step jumps well below pi) for the lift to mean anything; use
/// argument_monotone_fn when you hold a callback instead of a fixed grid.
/// Throws NotUnimodularError when some |value| is off the circle by > 1e-9.
bool argument_monotone(const SampledCircleMap& s);

/// Adaptive variant: samples f on doubling grids until the lift is resolved
/// (per-step jumps < pi/2) and the verdict is stable across one doubling.
bool argument_monotone_fn(const std::function<cplx(cplx)>& f, int initial_n = 1024,
                          int max_n = 1 << 18);

/// True iff the lifted argument of f - w0 is monotone (either direction)
/// with total change +-2*pi. Throws CenterOnCurveError when a sample lies
/// within 1e-9 of w0.
bool starlike_about(const SampledCircleMap& s, cplx w0);

struct NevanlinnaScan {
    double min_real_part = 0.0;
    double argmin_angle = 0.0;
};

/// Grid scan of Re(zeta h'(zeta) / (h(zeta) - w0)); a nonnegative minimum is
/// the rational-map starlikeness certificate at that resolution. Throws
/// PoleOnCircleError when |h(zeta) - w0| < 1e-12 at a grid point.
NevanlinnaScan nevanlinna_scan(const std::function<cplx(cplx)>& h,
                               const std::function<cplx(cplx)>& dh, cplx w0, int grid);
double nevanlinna_residual(const std::function<cplx(cplx)>& h,
                           const std::function<cplx(cplx)>& dh, cplx w0, int grid);

/// Reproduction probe: max over the grid of the defect of
/// 5/2 + 2cos(t) - cos(2t) - cos(3t)/2 == (5 - 2cos(2t)) cos^2(t/2).
double factorization_identity_residual(int grid);

/// Polar description of a starlike curve about `center`: the curve is
/// center + radial(theta) * exp(i * angle(theta)), with radial > 0 and angle
/// non-decreasing, angle(2*pi-) - angle(0) = 2*pi.
struct StarlikeProfile {
    std::function<double(double)> radial;
    std::function<double(double)> angle;
    cplx center;
};

/// A balance angle theta0 in [0, pi) with
/// |angle(theta0 + pi) - angle(theta0) - pi| <= tol, located by a sign-change
/// scan plus bisection of psi(t) = angle(t + pi) - angle(t) - pi (which
/// satisfies psi(0) + psi(pi-) = 0 for any admissible profile). Throws
/// NoSignChangeError if psi keeps one sign beyond tol on the scan grid.
double antipodal_balance_point(const StarlikeProfile& p, double tol);

struct EmbeddingReport {
    bool injective = false;
    bool sense_preserving = false;
    int winding_number = 0;     // about the supplied interior point
    double min_pairwise_gap = 0.0; // over non-adjacent sample pairs
};

/// Numeric embedding check at sample resolution: injectivity is discrete
/// polyline simplicity (no two non-adjacent edges of the closed sample
/// polygon intersect, no repeated vertices), winding is the summed argument
/// increment about interior_point. A heuristic at sample resolution, not a
/// proof. Pairwise, so quadratic in the sample count; meant for n <= 4096.
EmbeddingReport embedding_report(const SampledCircleMap& s, cplx interior_point);

struct StarlikeEmbedding {
    SampledCircleMap samples;
    StarlikeProfile profile;
};

/// Deterministic per seed: R = 1 + trig polynomial (kept >= 0.55), angle =
/// theta + trig polynomial with derivative kept >= 0.5, random center.
/// Degree 0 means no perturbation on that part.
StarlikeEmbedding random_starlike_embedding(std::uint64_t seed, int radial_degree,
                                            int arg_degree, int n = 1024);

/// Trigonometric-polynomial embedding z + sum c_m z^m (|m| <= degree) with
/// sum (1+|m|)|c_m| <= 0.4 over m != 1, which forces starlikeness about 0
/// and keeps |F_z| >= 0.6 on the disk. Exact coefficients are returned so
/// spectral tests are truncation-free.
struct BandlimitedEmbedding {
    SampledCircleMap samples;
    std::vector<cplx> coefficients; // index m + degree
    int degree = 0;

    cplx coefficient(int m) const { return coefficients[m + degree]; }
};

BandlimitedEmbedding random_bandlimited_embedding(std::uint64_t seed, int degree,
                                                  int n = 1024);

/// Tries the sample centroid, then a coarse interior grid, for a point the
/// curve is starlike about. Empty when nothing on the grid works.
std::optional<cplx> find_star_center(const SampledCircleMap& s);

/// The degree-2 starlike demo curve zeta + zeta^2 + conj(zeta)^2 / 2, whose
/// harmonic extension has a folding Jacobian. On the circle it agrees with
/// the rational map z^2 + z + z^-2 / 2.
cplx folding_curve(cplx zeta);
cplx folding_rational(cplx z);
cplx folding_rational_derivative(cplx z);

} // namespace circlemap
