#pragma once

#include <Eigen/Core>
#include <functional>
#include <string>

namespace fraclog {

/// Scalar Caputo initial-value problem D^beta w = rhs(t, w), w(0) = w0,
/// integrated on the uniform grid 0, h, 2h, ..., t_end.
struct FdeProblem {
    double beta;                                // order in (0, 1]
    std::function<double(double, double)> rhs;  // f(t, w)
    double w0;
    double t_end;
    double h;
};

struct FdeSolution {
    Eigen::ArrayXd grid;
    Eigen::ArrayXd values;
    double beta = 1.0;
    double h = 0.0;
    std::string scheme; // "abm-pece"
};

/// Adams-Bashforth-Moulton predictor-corrector (PECE, one corrector pass)
/// for Caputo fractional initial-value problems, after Diethelm-Ford-Freed.
/// Predictor uses the rectangle weights (h^beta/beta)((n+1-j)^beta-(n-j)^beta),
/// corrector the quadratic-hat weights over Gamma(beta+2). O(M^2) work on a
/// grid of M steps; deterministic. Throws on NaN/inf from the rhs, naming
/// the offending step.
FdeSolution solve_fracpece(const FdeProblem& p);

/// Fractional logistic equation D^beta w = w(1 - w), w(0) = u0 in (0, 1].
FdeSolution solve_fle(double u0, double beta, double t_end, double h);

/// L1 discretization of the Caputo derivative of uniformly sampled values
/// (spacing h): D_i = h^(-beta)/Gamma(2-beta) *
/// sum_j (w_{j+1}-w_j) ((i-j)^(1-beta) - (i-j-1)^(1-beta)), i >= 1.
/// Exact on piecewise-linear input. Element 0 of the result is the empty
/// sum, 0. beta = 1 is rejected (use plain differences).
Eigen::ArrayXd caputo_l1(const Eigen::Ref<const Eigen::ArrayXd>& values, double beta,
                         double h);

}  // namespace fraclog
