#pragma once

#include <span>
#include <string_view>

#include "circlemap/blaschke.hpp"

namespace circlemap {

/// (1 - |z|^2) / |zeta - z|^2 for z in the open disk, zeta on the circle.
/// Throws DomainError when |z| >= 1.
double poisson_kernel(cplx z, cplx zeta);

enum class Verdict { Homeo, NotHomeo, Inconclusive };

std::string_view to_string(Verdict v);

/// Outcome of the certified homeomorphism criterion for a Blaschke quotient.
///
/// D(zeta) = sum_k P(z_k, zeta) - sum_k P(w_k, zeta) is sampled on a uniform
/// grid; margin_lower_bound = grid_min - L*pi/grid_size is a rigorous lower
/// bound for min D on the whole circle, with L the Lipschitz bound below.
/// The true minimum always lies in [margin_lower_bound, grid_min].
struct CriterionReport {
    Verdict verdict = Verdict::Inconclusive;
    double margin_lower_bound = 0.0; // -inf when the degree condition fails
    double witness_angle = 0.0;      // grid angle attaining the minimum
    int grid_size = 0;               // final (possibly refined) grid
    double lipschitz_bound = 0.0;    // L = sum 2r(1+r)/(1-r)^3 over all zeros
    double grid_min = 0.0;           // raw sampled minimum (not serialized)
};

struct CriterionOptions {
    int grid_size = 4096;          // initial grid, >= 16
    int max_grid_size = 1 << 20;   // doubling cap while Inconclusive
    bool adaptive = true;
};

/// Decides whether the quotient restricts to a sense-preserving circle
/// homeomorphism: degree offset must be exactly 1 and D >= 0 on the circle.
///
/// Homeo requires a certified nonnegative minimum (margin_lower_bound >= 0);
/// NotHomeo requires a sampled value below -10*eps*(1+L), so exact-equality
/// configurations cannot flip to NotHomeo through rounding; anything between
/// is Inconclusive and (by default) retried on doubled grids up to the cap.
CriterionReport criterion_check(const RationalCircleMap& f, const CriterionOptions& opt = {});
CriterionReport criterion_check(const RationalCircleMap& f, int grid_size);

struct ConditionCheck {
    bool holds = false;
    double lhs = 0.0;
};

/// lhs = sum (1-|z_k|)/(1+|z_k|), holds iff lhs >= n-1. Each term is the
/// minimum of P(z_k, .) on the circle, so this certifies B/zeta^(n-1).
ConditionCheck kernel_min_sum_condition(std::span<const cplx> zeros);

/// lhs = sum (1+|z_k|)/(1-|z_k|), holds iff lhs <= n+1. Each term is the
/// maximum of P(z_k, .) on the circle, so this certifies zeta^(n+1)/B.
ConditionCheck kernel_max_sum_condition(std::span<const cplx> zeros);

/// Exact homeomorphism test for B/zeta with B of degree 2 and real zeros
/// a, b in (-1, 1): true iff (ab >= 0 and 1-|a|-|b|-3ab >= 0) or
/// (ab <= 0 and 1+ab-a^2-b^2 >= 0).
bool degree2_real_criterion(double a, double b);

/// For zeros sharing one argument (within 1e-10; the origin matches any),
/// the corresponding kernel-sum condition decides homeomorphy exactly.
/// Throws AlignmentError when the arguments differ beyond tolerance.
bool aligned_zeros_criterion(std::span<const cplx> zeros, QuotientKind kind);

/// |P(tz, zeta) - trapezoidal quadrature of the kernel self-convolution|;
/// probes P(tz, .) = P(z, .) * P(t, .) at the given resolution.
double semigroup_residual(cplx z, double t, cplx zeta, int quad_points);

} // namespace circlemap
