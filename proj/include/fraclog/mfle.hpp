#pragma once

#include <Eigen/Core>

namespace fraclog {

/// Which reading of the fractional derivative supplies the left-hand side
/// of the modified fractional logistic identity.
///   caputo_series           : termwise Caputo derivative of the West series
///   riemann_liouville_series: the same plus the u0 t^(-beta)/Gamma(1-beta)
///                             correction (the two operators differ by
///                             exactly that term on w with w(0) = u0)
///   numerical_l1            : L1 differintegral of dense West samples
enum class Convention { caputo_series, riemann_liouville_series, numerical_l1 };

enum class OrderMethod { limit_formula, loglog_regression };

struct ResidualReport {
    Eigen::ArrayXd t_grid;
    Eigen::ArrayXd lhs;
    Eigen::ArrayXd rhs;
    Eigen::ArrayXd residual; // lhs - rhs
    double max_abs_residual = 0.0;
    Convention convention = Convention::riemann_liouville_series;
};

struct OrderEstimate {
    double beta_hat = 0.0;     // clipped to (0, 1.5]; 1.5 means saturated (>= 1)
    OrderMethod method = OrderMethod::loglog_regression;
    double window_start = 0.0;
    double window_end = 0.0;
    // limit_formula: the pointwise estimates t_i w'_i / (1 - w_i);
    // loglog_regression: the fit residuals of ln|1-w| vs ln t.
    Eigen::ArrayXd diagnostics;
};

/// The double-integral correction of the modified equation, reduced through
/// the subordinator normalization to w(t)^2 - S2(t).
double double_integral_term(double u0, double beta, double t, double tol);

/// Right side of the modified equation:
/// w(1-w) + u0 t^(-beta)/Gamma(1-beta) + (w^2 - S2). Requires t > 0.
double mfle_rhs(double u0, double beta, double t, double tol);

/// Left/right/residual triples on a strictly increasing positive grid.
/// For numerical_l1 the derivative is taken from West samples on a uniform
/// grid of spacing l1_step; every requested t must sit on that grid.
ResidualReport residual(double u0, double beta, const Eigen::ArrayXd& t_grid,
                        Convention convention, double tol,
                        double l1_step = 1.0 / 1024.0);

/// Fractional-order estimation from late-window samples (t_i, w_i).
/// limit_formula: central-difference w', pointwise beta_i = t w'/(1-w),
/// median of the last quartile. loglog_regression: least-squares slope of
/// ln|1-w| vs ln t, beta_hat = -slope. Values above 1.5 are reported as
/// 1.5 (saturated: the estimator is only informative for beta < 1).
OrderEstimate estimate_order(const Eigen::ArrayXd& t, const Eigen::ArrayXd& w, double u0,
                             OrderMethod method);

}  // namespace fraclog
