#include "fraclog/mfle.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>
#include <string>
#include <vector>

#include "fraclog/fde.hpp"
#include "fraclog/gamma.hpp"
#include "fraclog/logistic.hpp"

namespace fraclog {

namespace {

double median_of(std::vector<double> v) {
    std::sort(v.begin(), v.end());
    const size_t n = v.size();
    return (n % 2 == 1) ? v[n / 2] : 0.5 * (v[n / 2 - 1] + v[n / 2]);
}

}  // namespace

double double_integral_term(double u0, double beta, double t, double tol) {
    if (u0 == 1.0) return 0.0;
    const double w = west_function(u0, beta, t, 0.25 * tol).value;
    const double s2 = s2_series(u0, beta, t, 0.25 * tol);
    return w * w - s2;
}

double mfle_rhs(double u0, double beta, double t, double tol) {
    if (!(t > 0.0)) {
        throw std::domain_error("mfle_rhs: t must be positive (singular term at t = 0)");
    }
    const double w = west_function(u0, beta, t, 0.25 * tol).value;
    const double s2 = (u0 == 1.0) ? 1.0 : s2_series(u0, beta, t, 0.25 * tol);
    const double singular = u0 * std::pow(t, -beta) * reciprocal_gamma(1.0 - beta);
    return w * (1.0 - w) + singular + (w * w - s2);
}

ResidualReport residual(double u0, double beta, const Eigen::ArrayXd& t_grid,
                        Convention convention, double tol, double l1_step) {
    const auto n = t_grid.size();
    if (n < 1) throw std::invalid_argument("residual: empty grid");
    for (Eigen::Index i = 0; i < n; ++i) {
        if (!(t_grid[i] > 0.0)) throw std::domain_error("residual: grid must be positive");
        if (i > 0 && !(t_grid[i] > t_grid[i - 1])) {
            throw std::invalid_argument("residual: grid must be strictly increasing");
        }
    }

    ResidualReport rep;
    rep.t_grid = t_grid;
    rep.convention = convention;
    rep.lhs.resize(n);
    rep.rhs.resize(n);

    if (convention == Convention::numerical_l1) {
        if (beta >= 1.0) {
            throw std::domain_error("residual: numerical_l1 requires beta < 1");
        }
        const double t_max = t_grid[n - 1];
        const auto m = static_cast<Eigen::Index>(std::llround(t_max / l1_step));
        if (std::fabs(m * l1_step - t_max) > 1e-6 * l1_step) {
            throw std::invalid_argument("residual: grid end must be a multiple of l1_step");
        }
        Eigen::ArrayXd w(m + 1);
        for (Eigen::Index i = 0; i <= m; ++i) {
            w[i] = west_function(u0, beta, i * l1_step, 0.25 * tol).value;
        }
        const Eigen::ArrayXd d = caputo_l1(w, beta, l1_step);
        for (Eigen::Index i = 0; i < n; ++i) {
            const auto idx = static_cast<Eigen::Index>(std::llround(t_grid[i] / l1_step));
            if (std::fabs(idx * l1_step - t_grid[i]) > 1e-6 * l1_step) {
                throw std::invalid_argument(
                    "residual: every grid point must sit on the l1_step grid");
            }
            rep.lhs[i] = d[idx];
        }
    } else {
        const double rg = reciprocal_gamma(1.0 - beta);
        for (Eigen::Index i = 0; i < n; ++i) {
            double v = caputo_west_series(u0, beta, t_grid[i], 0.25 * tol);
            if (convention == Convention::riemann_liouville_series) {
                v += u0 * std::pow(t_grid[i], -beta) * rg;
            }
            rep.lhs[i] = v;
        }
    }

    for (Eigen::Index i = 0; i < n; ++i) rep.rhs[i] = mfle_rhs(u0, beta, t_grid[i], tol);
    rep.residual = rep.lhs - rep.rhs;
    rep.max_abs_residual = rep.residual.abs().maxCoeff();
    return rep;
}

OrderEstimate estimate_order(const Eigen::ArrayXd& t, const Eigen::ArrayXd& w, double u0,
                             OrderMethod method) {
    const auto n = t.size();
    if (n < 8) throw std::invalid_argument("estimate_order: need at least 8 samples");
    if (w.size() != n) throw std::invalid_argument("estimate_order: size mismatch");
    if (!(t[0] >= 5.0)) {
        throw std::domain_error("estimate_order: window must start at t >= 5");
    }
    if (u0 == 1.0) {
        throw std::domain_error("estimate_order: u0 = 1 carries no decay signal");
    }
    for (Eigen::Index i = 0; i < n; ++i) {
        if (i > 0 && !(t[i] > t[i - 1])) {
            throw std::invalid_argument("estimate_order: t must be strictly increasing");
        }
        if (w[i] == 1.0) {
            throw std::domain_error("estimate_order: window contains w = 1");
        }
    }

    OrderEstimate est;
    est.method = method;
    est.window_start = t[0];
    est.window_end = t[n - 1];

    double raw = 0.0;
    if (method == OrderMethod::limit_formula) {
        std::vector<double> pointwise;
        pointwise.reserve(n - 2);
        for (Eigen::Index i = 1; i + 1 < n; ++i) {
            const double wp = (w[i + 1] - w[i - 1]) / (t[i + 1] - t[i - 1]);
            pointwise.push_back(t[i] * wp / (1.0 - w[i]));
        }
        est.diagnostics =
            Eigen::Map<const Eigen::ArrayXd>(pointwise.data(), pointwise.size());
        const size_t q = pointwise.size() - pointwise.size() * 3 / 4; // last quartile
        std::vector<double> last(pointwise.end() - q, pointwise.end());
        raw = median_of(std::move(last));
    } else {
        const Eigen::ArrayXd x = t.log();
        const Eigen::ArrayXd y = (1.0 - w).abs().log();
        const double xb = x.mean();
        const double yb = y.mean();
        const double sxx = ((x - xb) * (x - xb)).sum();
        const double sxy = ((x - xb) * (y - yb)).sum();
        const double slope = sxy / sxx;
        raw = -slope;
        est.diagnostics = y - (yb + slope * (x - xb));
    }
    est.beta_hat = std::min(raw, 1.5);
    return est;
}

}  // namespace fraclog
