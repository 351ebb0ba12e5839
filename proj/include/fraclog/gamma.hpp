#pragma once

namespace fraclog {

/// Gamma function on the real line.
///
/// Lanczos approximation (g = 7, 9 terms) with the reflection formula for
/// x < 0.5. Relative error is below 1e-13 on [-10, 20] away from the poles.
/// Throws std::domain_error at nonpositive integers; callers that want the
/// convention 1/Gamma(-n) = 0 use reciprocal_gamma instead.
double gamma_fn(double x);

/// 1/Gamma(x). Entire in x; returns exactly 0 at nonpositive integers.
double reciprocal_gamma(double x);

/// log|Gamma(x)| for x not a nonpositive integer.
double log_abs_gamma(double x);

/// sin(pi*x) with argument reduction done in exact arithmetic, so it is
/// accurate (and exactly zero) near integers where sin(M_PI*x) is not.
double sin_pi(double x);

}  // namespace fraclog
