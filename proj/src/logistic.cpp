#include "fraclog/logistic.hpp"

#include <cmath>
#include <stdexcept>
#include <string>

#include "fraclog/errors.hpp"
#include "fraclog/gamma.hpp"
#include "fraclog/mittag_leffler.hpp"

namespace fraclog {

namespace {

constexpr int kWestTermCap = 100000;

void validate_series_domain(double u0, const char* who) {
    if (!(u0 > 0.5)) {
        throw std::domain_error(std::string(who) +
                                ": u0 must exceed 1/2 (geometric series diverges), got " +
                                std::to_string(u0));
    }
}

void validate_beta01(double beta, const char* who) {
    if (!(beta > 0.0) || !(beta <= 1.0)) {
        throw std::domain_error(std::string(who) + ": beta must lie in (0, 1]");
    }
}

}  // namespace

LogisticParams::LogisticParams(double u0_) : u0(u0_), a((u0_ - 1.0) / u0_) {
    validate_series_domain(u0_, "LogisticParams");
    if (u0_ == 1.0) {
        throw std::domain_error(
            "LogisticParams: u0 = 1 is the fixed point; handle it separately");
    }
}

double logistic_exact(double u0, double t) {
    if (!(u0 > 0.0)) throw std::domain_error("logistic_exact: u0 must be positive");
    if (!(t >= 0.0)) throw std::domain_error("logistic_exact: t must be nonnegative");
    return u0 / (u0 + (1.0 - u0) * std::exp(-t));
}

double series_ratio(double u0) {
    validate_series_domain(u0, "series_ratio");
    return (u0 - 1.0) / u0;
}

WestEval west_function(double u0, double beta, double t, double tol) {
    validate_series_domain(u0, "west_function");
    validate_beta01(beta, "west_function");
    if (!(t >= 0.0)) throw std::domain_error("west_function: t must be nonnegative");
    if (!(tol > 0.0)) throw std::invalid_argument("west_function: tol must be positive");
    if (u0 == 1.0) return {1.0, {1.0, 0.0, beta, 1, 0.0}};

    const double a = (u0 - 1.0) / u0;
    const double r = std::fabs(a);
    // smallest N >= 1 with r^(N+1)/(1-r) <= tol/2
    int n = 1;
    double tail = r * r / (1.0 - r);
    while (tail > 0.5 * tol) {
        tail *= r;
        if (++n > kWestTermCap) {
            throw ToleranceError("west_function: tol too small for the term cap", tol,
                                 tail);
        }
    }

    const double ml_tol = 0.5 * tol * (1.0 - r); // total ML contribution <= tol/2
    const double tb = std::pow(t, beta);
    double sum = 1.0, comp = 0.0; // n = 0 term
    double apow = 1.0;
    for (int k = 1; k <= n; ++k) {
        apow *= a;
        const double term = apow * mittag_leffler_value(beta, -k * tb, ml_tol);
        const double y = term - comp;
        const double s = sum + y;
        comp = (s - sum) - y;
        sum = s;
    }
    return {sum, {u0, a, beta, n, tail}};
}

Eigen::ArrayXd square_series_coeffs(double u0, int m_max) {
    validate_series_domain(u0, "square_series_coeffs");
    if (m_max < 0) throw std::invalid_argument("square_series_coeffs: m_max < 0");
    const double a = (u0 - 1.0) / u0;
    Eigen::ArrayXd c(m_max + 1);
    double apow = 1.0;
    for (int m = 0; m <= m_max; ++m) {
        c[m] = (m + 1) * apow;
        apow *= a;
    }
    return c;
}

double s2_series(double u0, double beta, double t, double tol) {
    validate_series_domain(u0, "s2_series");
    validate_beta01(beta, "s2_series");
    if (!(t >= 0.0)) throw std::domain_error("s2_series: t must be nonnegative");
    if (!(tol > 0.0)) throw std::invalid_argument("s2_series: tol must be positive");
    if (u0 == 1.0) return 1.0; // only the m = 0 coefficient survives

    const double a = (u0 - 1.0) / u0;
    const double r = std::fabs(a);
    const double om = 1.0 - r;
    // tail sum_{m>N} (m+1) r^m = r^(N+1) ((N+2) - (N+1) r) / (1-r)^2
    int n = 1;
    auto tail_at = [&](int nn) {
        return std::pow(r, nn + 1) * ((nn + 2) - (nn + 1) * r) / (om * om);
    };
    while (tail_at(n) > 0.5 * tol) {
        if (++n > kWestTermCap) {
            throw ToleranceError("s2_series: tol too small for the term cap", tol,
                                 tail_at(n - 1));
        }
    }

    const double ml_tol = 0.5 * tol * om * om; // sum (m+1) r^m = 1/(1-r)^2
    const double tb = std::pow(t, beta);
    double sum = 1.0, comp = 0.0; // m = 0 term: 1 * E(0) = 1
    double apow = 1.0;
    for (int m = 1; m <= n; ++m) {
        apow *= a;
        const double term = (m + 1) * apow * mittag_leffler_value(beta, -m * tb, ml_tol);
        const double y = term - comp;
        const double s = sum + y;
        comp = (s - sum) - y;
        sum = s;
    }
    return sum;
}

double caputo_west_series(double u0, double beta, double t, double tol) {
    validate_series_domain(u0, "caputo_west_series");
    validate_beta01(beta, "caputo_west_series");
    if (!(t >= 0.0)) throw std::domain_error("caputo_west_series: t must be nonnegative");
    if (!(tol > 0.0))
        throw std::invalid_argument("caputo_west_series: tol must be positive");
    if (u0 == 1.0) return 0.0;

    const double a = (u0 - 1.0) / u0;
    const double r = std::fabs(a);
    const double om = 1.0 - r;
    // tail sum_{k>N} k r^k = r^(N+1) ((N+1) - N r) / (1-r)^2
    int n = 1;
    auto tail_at = [&](int nn) {
        return std::pow(r, nn + 1) * ((nn + 1) - nn * r) / (om * om);
    };
    while (tail_at(n) > 0.5 * tol) {
        if (++n > kWestTermCap) {
            throw ToleranceError("caputo_west_series: tol too small for the term cap",
                                 tol, tail_at(n - 1));
        }
    }

    const double ml_tol = 0.5 * tol * om * om; // sum k r^k <= 1/(1-r)^2
    const double tb = std::pow(t, beta);
    double sum = 0.0, comp = 0.0;
    double apow = 1.0;
    for (int k = 1; k <= n; ++k) {
        apow *= a;
        const double term = -k * apow * mittag_leffler_value(beta, -k * tb, ml_tol);
        const double y = term - comp;
        const double s = sum + y;
        comp = (s - sum) - y;
        sum = s;
    }
    return sum;
}

double polylog_series(int s, double x) {
    if (s < 1) throw std::invalid_argument("polylog_series: s must be >= 1");
    if (!(std::fabs(x) < 1.0)) {
        throw std::domain_error("polylog_series: need |x| < 1, got " + std::to_string(x));
    }
    if (x == 0.0) return 0.0;
    const double r = std::fabs(x);
    double sum = 0.0, comp = 0.0;
    double xpow = 1.0;
    for (int k = 1; k <= 10000000; ++k) {
        xpow *= x;
        const double term = xpow / std::pow(static_cast<double>(k), s);
        const double y = term - comp;
        const double t = sum + y;
        comp = (t - sum) - y;
        sum = t;
        if (std::fabs(term) * r / (1.0 - r) < 1e-17) return sum;
    }
    throw NonConvergenceError("polylog_series: term cap exceeded (|x| too close to 1)");
}

double west_asymptotic(double u0, double beta, double t, int order) {
    if (!(u0 >= 0.5)) {
        throw std::domain_error("west_asymptotic: requires u0 >= 1/2");
    }
    validate_beta01(beta, "west_asymptotic");
    if (!(t > 0.0)) throw std::domain_error("west_asymptotic: t must be positive");
    if (order != 1 && order != 2) {
        throw std::invalid_argument("west_asymptotic: order must be 1 or 2");
    }
    double w = 1.0 + std::log(u0) * std::pow(t, -beta) * reciprocal_gamma(1.0 - beta);
    if (order == 2 && u0 != 1.0) {
        const double a = (u0 - 1.0) / u0;
        const double rg2 = reciprocal_gamma(1.0 - 2.0 * beta); // 0 at beta = 1/2
        if (rg2 != 0.0) {
            w -= polylog_series(2, a) * std::pow(t, -2.0 * beta) * rg2;
        }
    }
    return w;
}

}  // namespace fraclog
