#include "fraclog/gamma.hpp"

#include <cmath>
#include <limits>
#include <stdexcept>
#include <string>

namespace fraclog {

namespace {

constexpr double kPi = 3.14159265358979323846;
constexpr double kSqrt2Pi = 2.50662827463100050242;

// Lanczos coefficients for g = 7, n = 9 (Godfrey's table).
constexpr double kLanczos[9] = {
    0.99999999999980993,    676.5203681218851,
    -1259.1392167224028,    771.32342877765313,
    -176.61502916214059,    12.507343278686905,
    -0.13857109526572012,   9.9843695780195716e-6,
    1.5056327351493116e-7};

// Gamma(x) for x >= 0.5 only.
double gamma_positive(double x) {
    const double z = x - 1.0;
    double acc = kLanczos[0];
    for (int i = 1; i < 9; ++i) acc += kLanczos[i] / (z + i);
    const double t = z + 7.5;
    return kSqrt2Pi * std::pow(t, z + 0.5) * std::exp(-t) * acc;
}

bool is_nonpositive_integer(double x) {
    return x <= 0.0 && x == std::floor(x);
}

}  // namespace

double sin_pi(double x) {
    // Reduce to |r| <= 0.5 around the nearest integer; the reduction is
    // exact for |x| below 2^52, which covers every caller here.
    const double n = std::nearbyint(x);
    const double r = x - n;
    const double s = std::sin(kPi * r);
    return (static_cast<long long>(n) % 2 == 0) ? s : -s;
}

double gamma_fn(double x) {
    if (std::isnan(x)) return x;
    if (is_nonpositive_integer(x)) {
        throw std::domain_error("gamma_fn: pole at nonpositive integer x = " +
                                std::to_string(x));
    }
    if (x >= 0.5) return gamma_positive(x);
    // Reflection: Gamma(x) = pi / (sin(pi x) Gamma(1 - x)).
    return kPi / (sin_pi(x) * gamma_positive(1.0 - x));
}

double reciprocal_gamma(double x) {
    if (std::isnan(x)) return x;
    if (is_nonpositive_integer(x)) return 0.0;
    if (x >= 0.5) return 1.0 / gamma_positive(x);
    return sin_pi(x) * gamma_positive(1.0 - x) / kPi;
}

double log_abs_gamma(double x) {
    if (is_nonpositive_integer(x)) {
        throw std::domain_error("log_abs_gamma: pole at x = " + std::to_string(x));
    }
    return std::lgamma(x);
}

}  // namespace fraclog
