#include "fraclog/mittag_leffler.hpp"

#include <bit>
#include <cmath>
#include <cstdint>
#include <limits>
#include <stdexcept>
#include <string>
#include <unordered_map>
#include <vector>

#include "fraclog/detail/double_double.hpp"
#include "fraclog/errors.hpp"
#include "fraclog/gamma.hpp"

namespace fraclog {

namespace {

constexpr double kPi = 3.14159265358979323846;
constexpr int kTermCap = 10000;
constexpr double kInf = std::numeric_limits<double>::infinity();

void validate_order(double beta) {
    if (!(beta > 0.0) || !(beta < 2.0)) {
        throw std::domain_error("mittag_leffler: order beta must lie in (0, 2), got " +
                                std::to_string(beta));
    }
}

// Ratio bound |T_{k+1}| <= |T_k| * |z| / (beta k + 1)^beta, from
// Gamma(y + beta) >= Gamma(y) y^beta (log-convexity). Once q < 1 the tail
// after T_k is at most |T_k| q / (1 - q).
double term_ratio_bound(double beta, double absz, int k) {
    return absz / std::pow(beta * k + 1.0, beta);
}

// Rough location/height of the largest series term, used to pre-select a
// summation route before doing any work.
double ln_max_term(double beta, double absz) {
    if (absz <= 1.0) return std::max(0.0, std::log(std::max(absz, 1e-300)) -
                                              std::lgamma(beta + 1.0));
    const double L = std::log(absz);
    const double y = std::exp(L / beta); // stationary point of k L - lgamma(beta k + 1)
    const double k = (y - 1.0) / beta;
    if (k < 1.0) return std::max(0.0, L - std::lgamma(beta + 1.0));
    return k * L - std::lgamma(beta * k + 1.0);
}

// Cached double-double values of lgamma(beta k + 1), k = 0..n, per order.
const std::vector<detail::DD>& dd_lgamma_cache(double beta, int n) {
    thread_local std::unordered_map<std::uint64_t, std::vector<detail::DD>> cache;
    auto& vec = cache[std::bit_cast<std::uint64_t>(beta)];
    const detail::DD b{beta};
    while (static_cast<int>(vec.size()) <= n) {
        const auto k = static_cast<double>(vec.size());
        vec.push_back(detail::dd_lgamma(detail::add(detail::mul(b, k), 1.0)));
    }
    return vec;
}

// sign of Gamma(x): +1 for x > 0, sign of sin(pi x) for x < 0.
double gamma_sign(double x) {
    if (x > 0.0) return 1.0;
    const double s = sin_pi(x);
    return s > 0.0 ? 1.0 : (s < 0.0 ? -1.0 : 0.0);
}

}  // namespace

namespace detail {

RouteEval ml_series_plain(double beta, double z, double tol) {
    RouteEval r;
    const double absz = std::fabs(z);
    const double L = std::log(absz);
    double sum = 1.0, comp = 0.0; // Kahan; T_0 = 1
    double round_err = 2e-16;
    int k = 1;
    for (; k <= kTermCap; ++k) {
        const double lg = std::lgamma(beta * k + 1.0);
        const double arg = k * L - lg;
        if (arg > 700.0) return r; // term overflow: route unusable
        double term = std::exp(arg);
        if (z < 0.0 && (k & 1)) term = -term;
        const double y = term - comp;
        const double t = sum + y;
        comp = (t - sum) - y;
        sum = t;
        round_err += std::fabs(term) * (std::fabs(arg) + 8.0) * 1.2e-16;
        const double q = term_ratio_bound(beta, absz, k);
        if (q < 1.0) {
            const double tail = std::fabs(term) * q / (1.0 - q);
            if (tail <= 0.25 * tol && std::fabs(term) <= tol) {
                r.value = sum;
                r.bound = round_err + tail;
                r.terms = k + 1;
                r.feasible = true;
                return r;
            }
        }
    }
    return r; // term cap exceeded
}

RouteEval ml_series_dd(double beta, double z, double tol) {
    RouteEval r;
    const double absz = std::fabs(z);
    const DD lnz = dd_log(DD{absz});
    const std::vector<DD>* lg = &dd_lgamma_cache(beta, 256);
    DD sum{1.0};
    double round_err = 1e-30;
    int k = 1;
    for (; k <= kTermCap; ++k) {
        if (k >= static_cast<int>(lg->size())) lg = &dd_lgamma_cache(beta, k + 256);
        const DD arg = sub(mul(lnz, static_cast<double>(k)), (*lg)[k]);
        if (arg.hi > 695.0) return r;
        DD term = dd_exp(arg);
        if (z < 0.0 && (k & 1)) term = neg(term);
        sum = add(sum, term);
        round_err += std::fabs(term.hi) * (std::fabs(arg.hi) + 10.0) * 1e-30;
        const double q = term_ratio_bound(beta, absz, k);
        if (q < 1.0) {
            const double tail = std::fabs(term.hi) * q / (1.0 - q);
            if (tail <= 0.25 * tol) {
                r.value = sum.value();
                r.bound = round_err + tail;
                r.terms = k + 1;
                r.feasible = true;
                return r;
            }
        }
    }
    return r;
}

// Shared core of the two asymptotic routes. Sums the algebraic expansion
// sum_{k>=1} sgn_flip^k * (-1) x^(-k) / Gamma(1 - k beta) up to the optimal
// truncation point. Writing 1/Gamma(1-y) = Gamma(y) sin(pi y)/pi exposes a
// smooth envelope env_k = x^(-k) Gamma(k beta)/pi that dominates |A_k| and
// is unimodal in k, so truncation control uses env_k rather than the
// sin-modulated magnitudes (those dip near the Gamma poles and would fake
// a divergence one step later).
struct AsymCore {
    double sum = 0.0;
    double sum_abs = 0.0;
    double omitted = kInf;
    int terms = 0;
};

AsymCore asym_algebraic_sum(double beta, double x, double tol) {
    const double lnx = std::log(x);
    constexpr int kAsymCap = 400;
    auto envelope = [&](int k) {
        return std::exp(-k * lnx + std::lgamma(k * beta)) / kPi;
    };
    AsymCore c;
    double comp = 0.0;
    double prev_env = kInf;
    int k = 1;
    for (; k <= kAsymCap; ++k) {
        const double env = envelope(k);
        if (k >= 2 && env > prev_env) {
            c.omitted = env; // past the optimal truncation point
            break;
        }
        prev_env = env;
        const double sp = sin_pi(k * beta);
        // A_k = (-1)^(k+1) x^(-k) Gamma(k beta) sin(pi k beta) / pi
        double term = env * sp;
        if ((k & 1) == 0) term = -term;
        const double y = term - comp;
        const double t = c.sum + y;
        comp = (t - c.sum) - y;
        c.sum = t;
        c.sum_abs += std::fabs(term);
        if (env <= 0.125 * tol) {
            c.omitted = envelope(k + 1) + envelope(k + 2);
            break;
        }
    }
    if (c.omitted == kInf) c.omitted = envelope(std::min(k, kAsymCap)); // cap reached
    c.terms = k;
    return c;
}

RouteEval ml_asymptotic_negative(double beta, double z, double tol) {
    RouteEval r;
    const double x = -z;
    if (!(x > 1.0)) return r;
    const AsymCore c = asym_algebraic_sum(beta, x, tol);

    double bound = 2.0 * c.omitted + c.sum_abs * 1e-15 + 1e-17;
    if (beta >= 1.0) {
        // For 1 <= beta < 2 the expansion misses the decaying oscillatory
        // mode ~ (2/beta) exp(x^(1/beta) cos(pi/beta)); at beta = 1 this is
        // exactly the exponential remainder.
        const double expo = std::exp(std::min(0.0, std::pow(x, 1.0 / beta) *
                                                       std::cos(kPi / beta)));
        bound += (4.0 / beta) * expo;
    }
    r.value = c.sum;
    r.bound = bound;
    r.terms = c.terms;
    r.feasible = true;
    return r;
}

RouteEval ml_asymptotic_positive(double beta, double z, double tol) {
    RouteEval r;
    const double x = z;
    const double lead_arg = std::pow(x, 1.0 / beta);
    if (!(lead_arg >= 40.0) || lead_arg > 709.0) return r;
    const double lead = std::exp(lead_arg) / beta;

    // Here lambda = +1, so every algebraic term keeps the same -1 prefactor:
    // E_beta(x) = exp(x^(1/beta))/beta - sum_k x^(-k)/Gamma(1 - k beta) + R.
    // Reuse the alternating core and flip the (-1)^(k+1) factor back out.
    const double lnx = std::log(x);
    auto envelope = [&](int k) {
        return std::exp(-k * lnx + std::lgamma(k * beta)) / kPi;
    };
    double sum = 0.0, sum_abs = 0.0, omitted = kInf, prev_env = kInf;
    int k = 1;
    for (; k <= 400; ++k) {
        const double env = envelope(k);
        if (k >= 2 && env > prev_env) {
            omitted = env;
            break;
        }
        prev_env = env;
        const double term = env * sin_pi(k * beta); // x^(-k)/Gamma(1-k beta)
        sum -= term;
        sum_abs += std::fabs(term);
        if (env <= 0.125 * tol) {
            omitted = envelope(k + 1) + envelope(k + 2);
            break;
        }
    }
    if (omitted == kInf) omitted = envelope(std::min(k, 400));

    r.value = lead + sum;
    // Sub-leading exponential scales are at least a factor exp(-c x^(1/beta))
    // below the dominant one; fold them into a relative term.
    r.bound = 2.0 * omitted + std::fabs(r.value) * 5e-14 + sum_abs * 1e-15;
    r.terms = k;
    r.feasible = true;
    return r;
}

}  // namespace detail

MLResult ml_series(double beta, double z, double tol) {
    validate_order(beta);
    if (!(tol > 0.0)) throw std::invalid_argument("ml_series: tol must be positive");
    if (z == 0.0) return {1.0, MLRegime::series, 1, 0.0};
    const auto r = detail::ml_series_plain(beta, z, tol);
    if (!r.feasible) {
        throw NonConvergenceError(
            "ml_series: no convergence within " + std::to_string(kTermCap) +
            " terms at beta=" + std::to_string(beta) + ", z=" + std::to_string(z) +
            " (argument outside the series regime)");
    }
    return {r.value, MLRegime::series, r.terms, r.bound};
}

double ml_asymptotic(double beta, double lambda, double z, int n) {
    validate_order(beta);
    if (n < 1) throw std::invalid_argument("ml_asymptotic: need n >= 1");
    if (lambda == 0.0) throw std::domain_error("ml_asymptotic: lambda must be nonzero");
    if (!(z > 0.0)) throw std::domain_error("ml_asymptotic: z must be positive");
    const double lnz = std::log(z);
    const double lnlam = std::log(std::fabs(lambda));
    double sum = 0.0;
    for (int k = 1; k <= n; ++k) {
        // z^(-k beta) / (lambda^k Gamma(1 - k beta)), with 1/Gamma(pole) = 0
        const double mag =
            std::exp(-k * beta * lnz - k * lnlam - std::lgamma(1.0 - k * beta));
        double sgn = gamma_sign(1.0 - k * beta);
        if (lambda < 0.0 && (k & 1)) sgn = -sgn;
        sum += sgn * mag;
    }
    double value = -sum;
    if (lambda > 0.0) value += std::exp(z / std::pow(lambda, beta)) / beta;
    return value;
}

MLResult mittag_leffler(const MLQuery& q) {
    validate_order(q.beta);
    if (!(q.tol > 0.0)) throw std::invalid_argument("mittag_leffler: tol must be positive");
    if (!std::isfinite(q.z)) throw std::domain_error("mittag_leffler: z must be finite");
    if (q.z == 0.0) return {1.0, MLRegime::series, 1, 0.0};

    const double absz = std::fabs(q.z);
    const double lnT = ln_max_term(q.beta, absz);
    const double ln_tol = std::log(q.tol);
    double best_bound = kInf;

    if (lnT < ln_tol + 37.0) {
        const auto r = detail::ml_series_plain(q.beta, q.z, q.tol);
        if (r.feasible && r.bound <= q.tol)
            return {r.value, MLRegime::series, r.terms, r.bound};
        if (r.feasible) best_bound = std::min(best_bound, r.bound);
    }
    if (lnT < std::min(690.0, ln_tol + 66.0)) {
        const auto r = detail::ml_series_dd(q.beta, q.z, q.tol);
        if (r.feasible && r.bound <= q.tol)
            return {r.value, MLRegime::series, r.terms, r.bound};
        if (r.feasible) best_bound = std::min(best_bound, r.bound);
    }
    if (q.z < 0.0) {
        const auto r = detail::ml_asymptotic_negative(q.beta, q.z, q.tol);
        if (r.feasible && r.bound <= q.tol)
            return {r.value, MLRegime::asymptotic_negative, r.terms, r.bound};
        if (r.feasible) best_bound = std::min(best_bound, r.bound);
    } else {
        const auto r = detail::ml_asymptotic_positive(q.beta, q.z, q.tol);
        if (r.feasible && r.bound <= q.tol)
            return {r.value, MLRegime::asymptotic_positive, r.terms, r.bound};
        if (r.feasible) best_bound = std::min(best_bound, r.bound);
    }
    throw ToleranceError("mittag_leffler: cannot certify tol=" + std::to_string(q.tol) +
                             " at beta=" + std::to_string(q.beta) +
                             ", z=" + std::to_string(q.z) +
                             " (best achievable bound " + std::to_string(best_bound) + ")",
                         q.tol, best_bound);
}

double mittag_leffler_value(double beta, double z, double tol) {
    return mittag_leffler({beta, z, tol}).value;
}

double rl_derivative_ml(double beta, double mu, double t) {
    if (!(beta > 0.0) || !(beta <= 1.0)) {
        throw std::domain_error("rl_derivative_ml: beta must lie in (0, 1]");
    }
    if (!(t > 0.0)) throw std::domain_error("rl_derivative_ml: t must be positive");
    const double singular = std::pow(t, -beta) * reciprocal_gamma(1.0 - beta);
    if (mu == 0.0) return singular;
    return singular + mu * mittag_leffler_value(beta, mu * std::pow(t, beta));
}

}  // namespace fraclog
