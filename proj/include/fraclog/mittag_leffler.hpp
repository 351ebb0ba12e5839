#pragma once

namespace fraclog {

/// Evaluation request for the one-parameter Mittag-Leffler function
/// E_beta(z) = sum_k z^k / Gamma(beta k + 1).
struct MLQuery {
    double beta;        // order, in (0, 2)
    double z;           // real argument
    double tol = 1e-12; // requested absolute tolerance
};

enum class MLRegime { series, asymptotic_negative, asymptotic_positive };

struct MLResult {
    double value;
    MLRegime regime;
    int terms_used;
    double error_bound; // certified absolute bound on |value - E_beta(z)|
};

/// Direct power-series summation in plain double precision with compensated
/// accumulation. Stops once the term increment and the certified tail drop
/// below tol; throws NonConvergenceError past the 10,000-term cap. The
/// reported error_bound includes rounding, which for large |z| can exceed
/// tol -- that is the signal that the argument belongs to another regime.
MLResult ml_series(double beta, double z, double tol);

/// n-term asymptotic expansion of E_beta(lambda z^beta) for z -> +inf:
/// the algebraic sum -sum_{k=1..n} z^(-k beta) / (lambda^k Gamma(1 - k beta)),
/// plus (1/beta) exp(z / lambda^beta) when lambda > 0. Terms whose
/// Gamma(1 - k beta) sits at a pole vanish under the reciprocal convention.
double ml_asymptotic(double beta, double lambda, double z, int n);

/// Certified evaluation: dispatches between the series (plain or
/// double-double accumulation) and the asymptotic expansion, returning the
/// first route that certifies q.tol. Throws ToleranceError when no route
/// can certify -- never returns a silently uncertified value.
MLResult mittag_leffler(const MLQuery& q);

/// Convenience wrapper returning just the value.
double mittag_leffler_value(double beta, double z, double tol = 1e-12);

/// Riemann-Liouville fractional derivative of E_beta(mu t^beta):
///   D^beta E_beta(mu t^beta) = t^(-beta)/Gamma(1-beta) + mu E_beta(mu t^beta)
/// for t > 0, 0 < beta <= 1 (at beta = 1 the singular term vanishes under
/// the reciprocal convention).
double rl_derivative_ml(double beta, double mu, double t);

namespace detail {

// One evaluation route with its certificate. Exposed so tests can compare
// routes directly on their overlap band.
struct RouteEval {
    double value = 0.0;
    double bound = 0.0; // certified absolute error bound
    int terms = 0;
    bool feasible = false;
};

RouteEval ml_series_plain(double beta, double z, double tol);
RouteEval ml_series_dd(double beta, double z, double tol);
RouteEval ml_asymptotic_negative(double beta, double z, double tol); // z < 0
RouteEval ml_asymptotic_positive(double beta, double z, double tol); // z > 0

}  // namespace detail

}  // namespace fraclog
