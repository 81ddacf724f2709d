#include "isoflat/metrics.hpp"

#include "isoflat/bounds.hpp"
#include "isoflat/errors.hpp"

#include <cmath>
#include <complex>
#include <numbers>
#include <sstream>

namespace isoflat::metrics {

namespace {
constexpr double kPi = std::numbers::pi;

double bump_value(BumpProfile b, Vec2 p) {
    switch (b) {
    case BumpProfile::Gaussian: return std::exp(-p.norm2());
    case BumpProfile::Cosine: return std::cos(p.x) * std::cos(p.y);
    }
    return 0.0;
}

Vec2 bump_grad(BumpProfile b, Vec2 p) {
    switch (b) {
    case BumpProfile::Gaussian: {
        const double e = std::exp(-p.norm2());
        return {-2.0 * p.x * e, -2.0 * p.y * e};
    }
    case BumpProfile::Cosine:
        return {-std::sin(p.x) * std::cos(p.y), -std::cos(p.x) * std::sin(p.y)};
    }
    return {};
}

double bump_laplace(BumpProfile b, Vec2 p) {
    switch (b) {
    case BumpProfile::Gaussian:
        return 4.0 * (p.norm2() - 1.0) * std::exp(-p.norm2());
    case BumpProfile::Cosine:
        return -2.0 * std::cos(p.x) * std::cos(p.y);
    }
    return 0.0;
}
} // namespace

std::string to_string(MetricKind kind) {
    switch (kind) {
    case MetricKind::Flat: return "flat";
    case MetricKind::Sphere: return "sphere";
    case MetricKind::Hyperbolic: return "hyperbolic";
    case MetricKind::Custom: return "custom";
    }
    return "?";
}

std::string to_string(BumpProfile bump) {
    return bump == BumpProfile::Gaussian ? "gaussian" : "cosine";
}

void ConformalMetric::check_domain(Vec2 p, double margin) const {
    if (!contains(p, margin)) {
        std::ostringstream os;
        os << "point (" << p.x << ", " << p.y << ") outside metric domain of radius "
           << domain_radius_;
        throw NumericalError(os.str());
    }
}

double ConformalMetric::factor(Vec2 p) const {
    switch (kind_) {
    case MetricKind::Flat:
        return delta_ * delta_;
    case MetricKind::Sphere: {
        const double d = 1.0 + model_q_ * p.norm2();
        return (4.0 * model_q_ / kappa_) / (d * d);
    }
    case MetricKind::Hyperbolic: {
        const double d = 1.0 - model_q_ * p.norm2();
        return (4.0 * model_q_ / kappa_) / (d * d);
    }
    case MetricKind::Custom:
        if (ext_factor_) return ext_factor_(p);
        return delta_ * delta_ * std::exp(epsilon_ * bump_value(bump_, p));
    }
    return 0.0;
}

double ConformalMetric::log_factor(Vec2 p) const {
    if (kind_ == MetricKind::Custom && !ext_factor_)
        return 2.0 * std::log(delta_) + epsilon_ * bump_value(bump_, p);
    return std::log(factor(p));
}

Vec2 ConformalMetric::grad_log_factor(Vec2 p) const {
    switch (kind_) {
    case MetricKind::Flat:
        return {0.0, 0.0};
    case MetricKind::Sphere: {
        const double s = -4.0 * model_q_ / (1.0 + model_q_ * p.norm2());
        return {s * p.x, s * p.y};
    }
    case MetricKind::Hyperbolic: {
        const double s = 4.0 * model_q_ / (1.0 - model_q_ * p.norm2());
        return {s * p.x, s * p.y};
    }
    case MetricKind::Custom:
        if (ext_grad_) return ext_grad_(p);
        if (!ext_factor_) return epsilon_ * bump_grad(bump_, p);
        break;
    }
    // Central-difference fallback for callback metrics without derivatives.
    const double h = stencil_step();
    return {(log_factor({p.x + h, p.y}) - log_factor({p.x - h, p.y})) / (2.0 * h),
            (log_factor({p.x, p.y + h}) - log_factor({p.x, p.y - h})) / (2.0 * h)};
}

double ConformalMetric::laplace_log_factor(Vec2 p) const {
    switch (kind_) {
    case MetricKind::Flat:
        return 0.0;
    case MetricKind::Sphere: {
        const double d = 1.0 + model_q_ * p.norm2();
        return -8.0 * model_q_ / (d * d);
    }
    case MetricKind::Hyperbolic: {
        const double d = 1.0 - model_q_ * p.norm2();
        return 8.0 * model_q_ / (d * d);
    }
    case MetricKind::Custom:
        if (ext_lap_) return ext_lap_(p);
        if (!ext_factor_) return epsilon_ * bump_laplace(bump_, p);
        break;
    }
    const double h = stencil_step();
    return (log_factor({p.x + h, p.y}) + log_factor({p.x - h, p.y}) +
            log_factor({p.x, p.y + h}) + log_factor({p.x, p.y - h}) -
            4.0 * log_factor(p)) /
           (h * h);
}

double ConformalMetric::curvature(Vec2 p) const {
    check_domain(p, 2.0 * stencil_step());
    return -laplace_log_factor(p) / (2.0 * factor(p));
}

double ConformalMetric::curvature_numeric(Vec2 p) const {
    const double h = stencil_step();
    check_domain(p, 2.0 * h);
    const double lap = (log_factor({p.x + h, p.y}) + log_factor({p.x - h, p.y}) +
                        log_factor({p.x, p.y + h}) + log_factor({p.x, p.y - h}) -
                        4.0 * log_factor(p)) /
                       (h * h);
    return -lap / (2.0 * factor(p));
}

ConformalMetric model_metric(MetricKind kind, double kappa, double delta) {
    if (!(delta > 0.0) || !std::isfinite(delta))
        throw HypothesisError("hypothesis violated: delta must be positive and finite");
    ConformalMetric m;
    m.kind_ = kind;
    m.delta_ = delta;
    switch (kind) {
    case MetricKind::Flat:
        m.kappa_ = 0.0;
        m.domain_radius_ = 2.4;
        return m;
    case MetricKind::Sphere: {
        // Also guards delta*sqrt(kappa) < pi/2, so tan below is positive.
        const bounds::CurvatureBudget budget(delta, kappa);
        m.kappa_ = kappa;
        const double t = std::tan(0.5 * budget.angle());
        m.model_q_ = t * t;
        const double reach = std::min(1.1 * budget.angle(), 0.995 * kPi / 2.0);
        m.domain_radius_ = 1.05 * std::tan(reach) / t;
        return m;
    }
    case MetricKind::Hyperbolic: {
        const bounds::CurvatureBudget budget(delta, kappa);
        m.kappa_ = kappa;
        const double t = std::tanh(0.5 * budget.angle());
        m.model_q_ = t * t;
        // The factor blows up at |w| = 1/t; stay safely inside.
        m.domain_radius_ = std::min(1.02 * std::tanh(1.1 * budget.angle()) / t,
                                    0.999 / t);
        return m;
    }
    case MetricKind::Custom:
        break;
    }
    throw HypothesisError("model_metric: kind must be flat, sphere or hyperbolic");
}

ConformalMetric make_perturbed(double delta, double epsilon, BumpProfile bump) {
    if (!(delta > 0.0) || !std::isfinite(delta))
        throw HypothesisError("hypothesis violated: delta must be positive and finite");
    if (!(epsilon >= 0.0) || !std::isfinite(epsilon))
        throw HypothesisError("hypothesis violated: epsilon must be nonnegative");
    if (epsilon == 0.0) return model_metric(MetricKind::Flat, 0.0, delta);

    ConformalMetric m;
    m.kind_ = MetricKind::Custom;
    m.delta_ = delta;
    m.epsilon_ = epsilon;
    m.bump_ = bump;
    m.domain_radius_ = 2.75;

    // Measured curvature bound: dense grid over the working region.
    double sup_k = 0.0;
    const int n = 201;
    const double r = 2.6;
    for (int i = 0; i < n; ++i) {
        for (int j = 0; j < n; ++j) {
            const Vec2 p{-r + 2.0 * r * i / (n - 1), -r + 2.0 * r * j / (n - 1)};
            const double lam = delta * delta * std::exp(epsilon * bump_value(bump, p));
            const double k = -epsilon * bump_laplace(bump, p) / (2.0 * lam);
            sup_k = std::max(sup_k, std::fabs(k));
        }
    }
    if (!(sup_k * 4.0 * delta * delta < bounds::budget_limit())) {
        std::ostringstream os;
        os << "hypothesis violated: sup|K|*(2*delta)^2 = " << sup_k * 4.0 * delta * delta
           << " >= pi^2/4; epsilon = " << epsilon << " is too large";
        throw HypothesisError(os.str());
    }
    // 5% headroom over the measured supremum absorbs discretization error.
    m.kappa_ = 1.05 * sup_k;
    return m;
}

ConformalMetric custom_metric(std::function<double(Vec2)> factor,
                              std::function<Vec2(Vec2)> grad_log,
                              std::function<double(Vec2)> laplace_log,
                              double domain_radius, double kappa_declared,
                              double delta) {
    if (!factor) throw HypothesisError("custom_metric: factor callback required");
    if (!(domain_radius > 0.0))
        throw HypothesisError("custom_metric: domain_radius must be positive");
    ConformalMetric m;
    m.kind_ = MetricKind::Custom;
    m.delta_ = delta;
    m.kappa_ = kappa_declared;
    m.domain_radius_ = domain_radius;
    m.ext_factor_ = std::move(factor);
    m.ext_grad_ = std::move(grad_log);
    m.ext_lap_ = std::move(laplace_log);
    m.analytic_ = static_cast<bool>(m.ext_grad_) && static_cast<bool>(m.ext_lap_);
    return m;
}

double laplace_beltrami(const ConformalMetric& metric,
                        const std::function<double(Vec2)>& u, Vec2 p, double h) {
    const double lap = (u({p.x + h, p.y}) + u({p.x - h, p.y}) + u({p.x, p.y + h}) +
                        u({p.x, p.y - h}) - 4.0 * u(p)) /
                       (h * h);
    return lap / metric.factor(p);
}

double model_distance(const ConformalMetric& metric, Vec2 a, Vec2 b) {
    using cplx = std::complex<double>;
    const cplx wa(a.x, a.y), wb(b.x, b.y);
    switch (metric.kind()) {
    case MetricKind::Flat:
        return metric.delta() * std::abs(wa - wb);
    case MetricKind::Sphere: {
        const double u = std::tan(0.5 * metric.delta() * std::sqrt(metric.kappa()));
        const double sk = std::sqrt(metric.kappa());
        const double num = u * std::abs(wa - wb);
        const double den = std::sqrt((1.0 + u * u * std::norm(wa)) *
                                     (1.0 + u * u * std::norm(wb)));
        return 2.0 / sk * std::asin(std::fmin(1.0, num / den));
    }
    case MetricKind::Hyperbolic: {
        const double v = std::tanh(0.5 * metric.delta() * std::sqrt(metric.kappa()));
        const double sk = std::sqrt(metric.kappa());
        const cplx xa = v * wa, xb = v * wb;
        const double arg = std::abs(xa - xb) / std::abs(1.0 - std::conj(xa) * xb);
        return 2.0 / sk * std::atanh(arg);
    }
    case MetricKind::Custom:
        break;
    }
    throw NumericalError("model_distance: no closed form for custom metrics");
}

double model_chart_radius(const ConformalMetric& metric, double r) {
    if (!(r >= 0.0)) throw HypothesisError("model_chart_radius: r must be nonnegative");
    switch (metric.kind()) {
    case MetricKind::Flat:
        return r / metric.delta();
    case MetricKind::Sphere: {
        const double sk = std::sqrt(metric.kappa());
        return std::tan(0.5 * r * sk) / std::tan(0.5 * metric.delta() * sk);
    }
    case MetricKind::Hyperbolic: {
        const double sk = std::sqrt(metric.kappa());
        return std::tanh(0.5 * r * sk) / std::tanh(0.5 * metric.delta() * sk);
    }
    case MetricKind::Custom:
        break;
    }
    throw NumericalError("model_chart_radius: no closed form for custom metrics");
}

} // namespace isoflat::metrics
