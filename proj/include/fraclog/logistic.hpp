#pragma once

#include <Eigen/Core>

namespace fraclog {

/// Validated parameters of the normalized logistic problem (growth rate 1).
/// The geometric representation u(t) = sum_k a^k e^{-kt} with
/// a = (u0 - 1)/u0 requires |a| < 1, i.e. u0 > 1/2; u0 = 1 is the fixed
/// point and is short-circuited by the series operations, not represented
/// here.
struct LogisticParams {
    double u0;
    double a; // series ratio (u0 - 1)/u0

    explicit LogisticParams(double u0_);
};

/// Truncation certificate of a West-function evaluation: the first n_terms+1
/// terms (indices 0..n_terms) were summed and the dropped tail is at most
/// tail_bound = |a|^(n_terms+1) / (1-|a|), uniformly in t (E_beta(-x) <= 1).
struct WestSeriesSpec {
    double u0 = 1.0;
    double a = 0.0;
    double beta = 1.0;
    int n_terms = 1;
    double tail_bound = 0.0;
};

struct WestEval {
    double value;
    WestSeriesSpec spec;
};

/// Closed-form logistic solution u(t) = u0 / (u0 + (1-u0) e^{-t}).
double logistic_exact(double u0, double t);

/// Series ratio a = (u0-1)/u0; requires u0 > 1/2 so that |a| < 1.
double series_ratio(double u0);

/// West function w(t) = sum_n a^n E_beta(-n t^beta), truncated so the
/// geometric tail is below tol/2 and each Mittag-Leffler factor is certified
/// tightly enough that the total error stays within ~tol.
WestEval west_function(double u0, double beta, double t, double tol);

/// Cauchy-square coefficients c_m = (m+1) a^m, m = 0..m_max, satisfying
/// sum_m c_m e^{-ms} = u(s)^2.
Eigen::ArrayXd square_series_coeffs(double u0, int m_max);

/// S2(t) = sum_m (m+1) a^m E_beta(-m t^beta)  (the u^2 moment under the
/// inverse-subordinator density).
double s2_series(double u0, double beta, double t, double tol);

/// Term-by-term Caputo derivative of the West function:
/// -sum_{k>=1} k a^k E_beta(-k t^beta).
double caputo_west_series(double u0, double beta, double t, double tol);

/// Polylogarithm Li_s(x) = sum_{k>=1} x^k / k^s by direct summation,
/// |x| < 1, s >= 1; absolute accuracy ~1e-14.
double polylog_series(int s, double x);

/// Large-time expansion of the West function:
///   order 1:  1 + ln(u0) t^(-beta) / Gamma(1-beta)
///   order 2:  adds -Li_2(a) t^(-2 beta) / Gamma(1-2 beta), which vanishes
///             at beta = 1/2 under the reciprocal-gamma convention.
double west_asymptotic(double u0, double beta, double t, int order);

}  // namespace fraclog
