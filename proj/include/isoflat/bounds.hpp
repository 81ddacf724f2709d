#pragma once

#include <optional>

namespace isoflat::bounds {

// Everything in this header is a closed-form scalar evaluator over a
// curvature budget (delta, kappa). They are pure functions, safe to call
// concurrently, and are pinned against 30-digit golden fixtures in the
// test suite.

/// Largest admissible value of delta^2 * kappa.
double budget_limit();                  // pi^2/4
/// Stricter product limit under which the simplified bounds apply.
double small_budget_limit();            // pi^2/8

/// The pair (delta, kappa) with the standing hypothesis
/// delta^2 * kappa < pi^2/4 enforced at construction.
class CurvatureBudget {
public:
    CurvatureBudget(double delta, double kappa);

    double delta() const { return delta_; }
    double kappa() const { return kappa_; }
    double sqrt_kappa() const { return sqrt_kappa_; }
    /// The product t = delta^2 * kappa that controls every estimate.
    double product() const { return product_; }
    /// delta * sqrt(kappa), always below pi/2.
    double angle() const { return angle_; }
    /// True when the product exceeds 95% of its admissible range; bounds
    /// are still finite but enormous, and reports flag the run.
    bool near_degenerate() const;

private:
    double delta_;
    double kappa_;
    double sqrt_kappa_;
    double product_;
    double angle_;
};

/// Constants added to the barriers to pin boundary chord estimates.
struct BarrierConstants {
    double c_h; ///< hyperbolic-side offset, always negative
    double c_s; ///< spherical-side offset, always > c_h
};

/// A two-sided estimate with lower <= upper.
struct RatioBounds {
    double lower;
    double upper;
};

/// The simplified small-budget estimate: log bound 8t and the induced
/// two-sided distance-ratio bound exp(-4t) .. exp(4t).
struct SmallBudgetBound {
    double log_bound;
    RatioBounds ratio;
};

/// Growth factor multiplying t/2 in the sup|log phi| estimate:
/// (pi^2/4) * (sinh(sqrt t) * tan(sqrt t) / t)^2. Strictly increasing on
/// (0, pi^2/4); tends to pi^2/4 at 0+ and diverges at the right endpoint.
double factor_log_bracket(double t);

/// Upper bound for sup |log phi| over the disc:
/// (t/2) * [1 + factor_log_bracket(t)] with t = delta^2 * kappa.
double factor_log_bound(const CurvatureBudget& budget);

/// Simplified bound 8t, valid when t < pi^2/8; throws otherwise.
SmallBudgetBound small_budget_bound(const CurvatureBudget& budget);

/// -log tan(d*sqrt(kappa)/2): the constant-positive-curvature barrier.
double barrier_spherical(double dist, double kappa);
/// -log tanh(d*sqrt(kappa)/2): the constant-negative-curvature barrier.
/// Always >= barrier_spherical at the same point (tanh x < tan x).
double barrier_hyperbolic(double dist, double kappa);

/// Offsets that make the two barriers sandwich -log|w(q)-w(q0)| for
/// boundary points.
BarrierConstants barrier_constants(const CurvatureBudget& budget);

/// Two-sided bounds for the unit-chart conformal factor at the center:
/// (4/kappa)*tanh^2(angle/2) .. (4/kappa)*tan^2(angle/2).
RatioBounds center_factor_bounds(const CurvatureBudget& budget);
/// ... and on the boundary: sin^2(angle)/kappa .. sinh^2(angle)/kappa.
/// Note the model attaining each endpoint swaps between center and rim.
RatioBounds boundary_factor_bounds(const CurvatureBudget& budget);

/// Bounds for d_M(p,q) / |w(p)-w(q)| over interior pairs.
RatioBounds distance_ratio_bounds(const CurvatureBudget& budget);
/// Same ratio restricted to boundary pairs; always nested in the interior
/// interval.
RatioBounds boundary_distance_ratio_bounds(const CurvatureBudget& budget);

/// Upper bound pi/(2*delta) for angle(q1,q2) / d_M(q1,q2) on the boundary.
double angle_distance_bound(double delta);

/// arccos(cos^2 a + sin^2 a cos x) / x for 0 < a < pi/2, 0 < x <= pi.
/// Strictly decreasing in x with infimum 2a/pi at x = pi.
double spherical_angle_profile(double a, double x);

/// Point checks of the sharp exponential ratio inequalities:
///   sinh(x)/x < exp(x^2/4)    for x > 0
///   sin(x)/x  > exp(-x^2/4)   for 0 < x < pi/2 (absent otherwise)
struct ExpRatioChecks {
    bool sinh_ratio_below_exp;
    std::optional<bool> sin_ratio_above_exp;
};
ExpRatioChecks exp_ratio_checks(double x);

/// x / tanh(a*x), increasing in x on (0, inf).
double stretch_ratio_tanh(double a, double x);
/// x / tan(a*x), decreasing in x on (0, pi/(2a)).
double stretch_ratio_tan(double a, double x);

/// Maximum-principle estimate: boundary_sup + (delta^2/4) * laplacian_sup
/// bounds sup |u| over the disc of radius delta.
double max_principle_estimate(double boundary_sup, double laplacian_sup, double delta);

} // namespace isoflat::bounds
