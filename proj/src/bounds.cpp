#include "isoflat/bounds.hpp"

#include "isoflat/errors.hpp"

#include <cmath>
#include <numbers>
#include <sstream>

namespace isoflat::bounds {

namespace {
constexpr double kPi = std::numbers::pi;

[[noreturn]] void fail(const char* what, double value, double limit, const char* cmp) {
    std::ostringstream os;
    os << "hypothesis violated: " << what << " = " << value << ' ' << cmp << ' ' << limit;
    throw HypothesisError(os.str());
}
} // namespace

double budget_limit() { return kPi * kPi / 4.0; }
double small_budget_limit() { return kPi * kPi / 8.0; }

CurvatureBudget::CurvatureBudget(double delta, double kappa)
    : delta_(delta), kappa_(kappa) {
    if (!(delta > 0.0) || !std::isfinite(delta))
        throw HypothesisError("hypothesis violated: delta must be positive and finite");
    if (!(kappa > 0.0) || !std::isfinite(kappa))
        throw HypothesisError("hypothesis violated: kappa must be positive and finite");
    product_ = delta * delta * kappa;
    if (!(product_ < budget_limit()))
        fail("delta^2*kappa", product_, budget_limit(), ">=");
    sqrt_kappa_ = std::sqrt(kappa);
    angle_ = delta * sqrt_kappa_;
}

bool CurvatureBudget::near_degenerate() const {
    return product_ > 0.95 * budget_limit();
}

double factor_log_bracket(double t) {
    if (!(t > 0.0) || !(t < budget_limit()))
        fail("delta^2*kappa", t, budget_limit(), "outside (0,");
    const double x = std::sqrt(t);
    const double r = std::sinh(x) * std::tan(x) / t;
    return (kPi * kPi / 4.0) * r * r;
}

double factor_log_bound(const CurvatureBudget& budget) {
    const double t = budget.product();
    return 0.5 * t * (1.0 + factor_log_bracket(t));
}

SmallBudgetBound small_budget_bound(const CurvatureBudget& budget) {
    const double t = budget.product();
    if (!(t < small_budget_limit()))
        fail("delta^2*kappa", t, small_budget_limit(), ">=");
    return {8.0 * t, {std::exp(-4.0 * t), std::exp(4.0 * t)}};
}

double barrier_spherical(double dist, double kappa) {
    if (!(dist > 0.0)) fail("distance", dist, 0.0, "<=");
    if (!(kappa > 0.0)) fail("kappa", kappa, 0.0, "<=");
    const double x = dist * std::sqrt(kappa);
    if (!(x < kPi)) fail("distance*sqrt(kappa)", x, kPi, ">=");
    return -std::log(std::tan(0.5 * x));
}

double barrier_hyperbolic(double dist, double kappa) {
    if (!(dist > 0.0)) fail("distance", dist, 0.0, "<=");
    if (!(kappa > 0.0)) fail("kappa", kappa, 0.0, "<=");
    const double x = dist * std::sqrt(kappa);
    if (!(x < kPi)) fail("distance*sqrt(kappa)", x, kPi, ">=");
    return -std::log(std::tanh(0.5 * x));
}

BarrierConstants barrier_constants(const CurvatureBudget& budget) {
    const double x = budget.angle();
    const double c_h = std::log(std::sin(x) / (kPi * std::cosh(x)));
    const double c_s = std::log(kPi * std::sinh(x) * std::tan(x) / (4.0 * x));
    return {c_h, c_s};
}

RatioBounds center_factor_bounds(const CurvatureBudget& budget) {
    const double half = 0.5 * budget.angle();
    const double th = std::tanh(half);
    const double tn = std::tan(half);
    const double scale = 4.0 / budget.kappa();
    return {scale * th * th, scale * tn * tn};
}

RatioBounds boundary_factor_bounds(const CurvatureBudget& budget) {
    const double x = budget.angle();
    const double s = std::sin(x);
    const double sh = std::sinh(x);
    return {s * s / budget.kappa(), sh * sh / budget.kappa()};
}

RatioBounds distance_ratio_bounds(const CurvatureBudget& budget) {
    const double x = budget.angle();
    const double lower =
        (2.0 / kPi) * std::sin(x) / (budget.sqrt_kappa() * std::cosh(x));
    const double upper =
        (kPi / 2.0) * std::sinh(x) * std::tan(x) / (budget.delta() * budget.kappa());
    return {lower, upper};
}

RatioBounds boundary_distance_ratio_bounds(const CurvatureBudget& budget) {
    const double x = budget.angle();
    const double lower = 2.0 * budget.delta() * std::sin(x) / (kPi * std::sinh(x));
    const double upper = kPi * std::sinh(x) / (2.0 * budget.sqrt_kappa());
    return {lower, upper};
}

double angle_distance_bound(double delta) {
    if (!(delta > 0.0)) fail("delta", delta, 0.0, "<=");
    return kPi / (2.0 * delta);
}

double spherical_angle_profile(double a, double x) {
    if (!(a > 0.0 && a < kPi / 2.0)) fail("opening angle", a, kPi / 2.0, "outside (0,");
    if (!(x > 0.0 && x <= kPi)) fail("angle argument", x, kPi, "outside (0,");
    const double ca = std::cos(a);
    const double sa = std::sin(a);
    double c = ca * ca + sa * sa * std::cos(x);
    c = std::fmin(1.0, std::fmax(-1.0, c));
    return std::acos(c) / x;
}

ExpRatioChecks exp_ratio_checks(double x) {
    if (!(x > 0.0)) fail("x", x, 0.0, "<=");
    ExpRatioChecks out{};
    out.sinh_ratio_below_exp = std::sinh(x) / x < std::exp(0.25 * x * x);
    if (x < kPi / 2.0)
        out.sin_ratio_above_exp = std::sin(x) / x > std::exp(-0.25 * x * x);
    return out;
}

double stretch_ratio_tanh(double a, double x) {
    if (!(a > 0.0) || !(x > 0.0)) fail("a*x", a * x, 0.0, "<=");
    return x / std::tanh(a * x);
}

double stretch_ratio_tan(double a, double x) {
    if (!(a > 0.0) || !(x > 0.0)) fail("a*x", a * x, 0.0, "<=");
    if (!(a * x < kPi / 2.0)) fail("a*x", a * x, kPi / 2.0, ">=");
    return x / std::tan(a * x);
}

double max_principle_estimate(double boundary_sup, double laplacian_sup, double delta) {
    if (!(boundary_sup >= 0.0) || !(laplacian_sup >= 0.0))
        fail("sup", std::fmin(boundary_sup, laplacian_sup), 0.0, "<");
    if (!(delta > 0.0)) fail("delta", delta, 0.0, "<=");
    return boundary_sup + 0.25 * delta * delta * laplacian_sup;
}

} // namespace isoflat::bounds
