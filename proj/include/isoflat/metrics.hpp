#pragma once

#include "isoflat/vec2.hpp"

#include <functional>
#include <string>

namespace isoflat::metrics {

enum class MetricKind { Flat, Sphere, Hyperbolic, Custom };

enum class BumpProfile { Gaussian, Cosine };

std::string to_string(MetricKind kind);
std::string to_string(BumpProfile bump);

/// A Riemannian metric presented conformally on a planar background chart:
/// g = factor(zeta) * |d zeta|^2 with factor > 0. Model metrics present the
/// geodesic disc of radius delta on the unit background disc, center at the
/// origin, with the closed-form factor of the constant-curvature surface.
/// Immutable after construction; evaluation is re-entrant.
class ConformalMetric {
public:
    MetricKind kind() const { return kind_; }
    double delta() const { return delta_; }
    /// Declared bound on |K| over the working region (0 for flat).
    double kappa() const { return kappa_; }
    /// Radius of the background-chart disc on which the factor is valid.
    double domain_radius() const { return domain_radius_; }
    bool has_analytic_derivatives() const { return analytic_; }
    double epsilon() const { return epsilon_; }
    BumpProfile bump() const { return bump_; }

    bool contains(Vec2 p, double margin = 0.0) const {
        return p.norm() + margin <= domain_radius_;
    }

    double factor(Vec2 p) const;
    double log_factor(Vec2 p) const;
    /// Gradient of log(factor); analytic for all built-in kinds, otherwise a
    /// central difference at the stencil step.
    Vec2 grad_log_factor(Vec2 p) const;
    double laplace_log_factor(Vec2 p) const;

    /// Gauss curvature K = -laplace(log factor) / (2*factor). The point must
    /// be interior with a margin of two stencil steps.
    double curvature(Vec2 p) const;
    /// Same, but forcing the 5-point stencil route (cross-checks).
    double curvature_numeric(Vec2 p) const;

    /// Step used by the stencil fallbacks: 1e-3 * domain_radius.
    double stencil_step() const { return 1e-3 * domain_radius_; }

private:
    friend ConformalMetric model_metric(MetricKind, double, double);
    friend ConformalMetric make_perturbed(double, double, BumpProfile);
    friend ConformalMetric custom_metric(std::function<double(Vec2)>,
                                         std::function<Vec2(Vec2)>,
                                         std::function<double(Vec2)>,
                                         double, double, double);
    ConformalMetric() = default;

    void check_domain(Vec2 p, double margin) const;

    MetricKind kind_ = MetricKind::Flat;
    double delta_ = 1.0;
    double kappa_ = 0.0;
    double domain_radius_ = 1.0;
    bool analytic_ = true;
    // Model parameter: tan^2(angle/2) for the sphere, tanh^2(angle/2) for
    // the hyperbolic plane; unused otherwise.
    double model_q_ = 0.0;
    // Bump parameters for perturbed metrics.
    double epsilon_ = 0.0;
    BumpProfile bump_ = BumpProfile::Gaussian;
    // External callbacks (test metrics).
    std::function<double(Vec2)> ext_factor_;
    std::function<Vec2(Vec2)> ext_grad_;
    std::function<double(Vec2)> ext_lap_;
};

/// Exact constant-curvature model of the geodesic delta-disc on the unit
/// background disc. Flat ignores kappa. Budget hypotheses are enforced.
ConformalMetric model_metric(MetricKind kind, double kappa, double delta);

/// factor = delta^2 * exp(epsilon * bump). The declared kappa is the grid
/// supremum of |K| inflated by 5%; construction fails when
/// sup|K| * (2*delta)^2 reaches pi^2/4. epsilon = 0 returns the flat model.
ConformalMetric make_perturbed(double delta, double epsilon, BumpProfile bump);

/// Metric from explicit callbacks; grad/laplacian may be null (stencil
/// fallback). kappa_declared is trusted as the |K| bound.
ConformalMetric custom_metric(std::function<double(Vec2)> factor,
                              std::function<Vec2(Vec2)> grad_log,
                              std::function<double(Vec2)> laplace_log,
                              double domain_radius, double kappa_declared,
                              double delta);

/// Laplace-Beltrami of a scalar callback at a point, via the conformal
/// relation (chart Laplacian) / factor, with a 5-point stencil of step h.
double laplace_beltrami(const ConformalMetric& metric,
                        const std::function<double(Vec2)>& u, Vec2 p, double h);

/// Closed-form geodesic distance between two background points of a model
/// metric (throws for Custom). Independent of the shooting solver; used as
/// the oracle on its output.
double model_distance(const ConformalMetric& metric, Vec2 a, Vec2 b);

/// Background-chart radius at which a model metric's geodesic circle of
/// radius r around the center sits.
double model_chart_radius(const ConformalMetric& metric, double r);

} // namespace isoflat::metrics
