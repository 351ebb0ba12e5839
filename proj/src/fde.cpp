#include "fraclog/fde.hpp"

#include <cmath>
#include <stdexcept>
#include <string>
#include <vector>

#include "fraclog/gamma.hpp"

namespace fraclog {

namespace {

long long step_count(double t_end, double h, const char* who) {
    if (!(h > 0.0)) throw std::domain_error(std::string(who) + ": h must be positive");
    if (!(t_end > 0.0)) throw std::domain_error(std::string(who) + ": t_end must be positive");
    if (!(h < t_end)) throw std::domain_error(std::string(who) + ": need h < t_end");
    const double m = t_end / h;
    const long long M = std::llround(m);
    if (M < 1 || std::fabs(M * h - t_end) > 1e-9 * std::max(1.0, t_end)) {
        throw std::invalid_argument(std::string(who) +
                                    ": t_end must be an integer multiple of h");
    }
    return M;
}

}  // namespace

FdeSolution solve_fracpece(const FdeProblem& p) {
    if (!(p.beta > 0.0) || !(p.beta <= 1.0)) {
        throw std::domain_error("solve_fracpece: beta must lie in (0, 1]");
    }
    if (!p.rhs) throw std::invalid_argument("solve_fracpece: rhs is empty");
    const long long M = step_count(p.t_end, p.h, "solve_fracpece");
    const double beta = p.beta;
    const double h = p.h;
    const double hb = std::pow(h, beta);
    const double pred_c = hb / gamma_fn(beta + 1.0); // (1/Gamma(b)) * (h^b/b)
    const double corr_c = hb / gamma_fn(beta + 2.0);

    // i^beta and i^(beta+1) tables
    std::vector<double> pb(M + 2), pb1(M + 2);
    for (long long i = 0; i <= M + 1; ++i) {
        pb[i] = std::pow(static_cast<double>(i), beta);
        pb1[i] = std::pow(static_cast<double>(i), beta + 1.0);
    }

    FdeSolution sol;
    sol.beta = beta;
    sol.h = h;
    sol.scheme = "abm-pece";
    sol.grid = Eigen::ArrayXd::LinSpaced(M + 1, 0.0, p.t_end);
    sol.values.resize(M + 1);
    sol.values[0] = p.w0;

    std::vector<double> f(M + 1);
    auto eval_rhs = [&](long long i, double t, double w) {
        const double v = p.rhs(t, w);
        if (!std::isfinite(v)) {
            throw std::runtime_error("solve_fracpece: rhs returned non-finite value at step " +
                                     std::to_string(i));
        }
        return v;
    };
    f[0] = eval_rhs(0, 0.0, p.w0);

    for (long long n = 0; n < M; ++n) {
        // predictor: w0 + h^b/Gamma(b+1) * sum_j ((n+1-j)^b - (n-j)^b) f_j
        double ps = 0.0, pc = 0.0;
        for (long long j = 0; j <= n; ++j) {
            const double term = (pb[n + 1 - j] - pb[n - j]) * f[j];
            const double y = term - pc;
            const double t = ps + y;
            pc = (t - ps) - y;
            ps = t;
        }
        const double t_next = (n + 1) * h;
        const double pred = p.w0 + pred_c * ps;
        const double f_pred = eval_rhs(n + 1, t_next, pred);

        // corrector weights: a_0 = n^(b+1) - (n-b)(n+1)^b,
        // a_j = (n-j+2)^(b+1) + (n-j)^(b+1) - 2(n-j+1)^(b+1)
        double cs = (pb1[n] - (n - beta) * pb[n + 1]) * f[0];
        double cc = 0.0;
        for (long long j = 1; j <= n; ++j) {
            const double a = pb1[n - j + 2] + pb1[n - j] - 2.0 * pb1[n - j + 1];
            const double term = a * f[j];
            const double y = term - cc;
            const double t = cs + y;
            cc = (t - cs) - y;
            cs = t;
        }
        const double w_next = p.w0 + corr_c * (f_pred + cs);
        if (!std::isfinite(w_next)) {
            throw std::runtime_error("solve_fracpece: solution overflow at step " +
                                     std::to_string(n + 1));
        }
        sol.values[n + 1] = w_next;
        f[n + 1] = eval_rhs(n + 1, t_next, w_next);
    }
    return sol;
}

FdeSolution solve_fle(double u0, double beta, double t_end, double h) {
    if (!(u0 > 0.0) || !(u0 <= 1.0)) {
        throw std::domain_error("solve_fle: u0 must lie in (0, 1]");
    }
    FdeProblem p;
    p.beta = beta;
    p.rhs = [](double, double w) { return w * (1.0 - w); };
    p.w0 = u0;
    p.t_end = t_end;
    p.h = h;
    return solve_fracpece(p);
}

Eigen::ArrayXd caputo_l1(const Eigen::Ref<const Eigen::ArrayXd>& values, double beta,
                         double h) {
    if (!(beta > 0.0) || !(beta < 1.0)) {
        throw std::domain_error("caputo_l1: beta must lie in (0, 1); beta = 1 is rejected");
    }
    if (values.size() < 2) throw std::invalid_argument("caputo_l1: need at least 2 samples");
    if (!(h > 0.0)) throw std::domain_error("caputo_l1: h must be positive");

    const auto n = values.size();
    const double c = std::pow(h, -beta) / gamma_fn(2.0 - beta);
    std::vector<double> q(n);
    for (Eigen::Index i = 0; i < n; ++i) q[i] = std::pow(static_cast<double>(i), 1.0 - beta);

    Eigen::ArrayXd d(n);
    d[0] = 0.0;
    for (Eigen::Index i = 1; i < n; ++i) {
        double s = 0.0, comp = 0.0;
        for (Eigen::Index j = 0; j < i; ++j) {
            const double term = (values[j + 1] - values[j]) * (q[i - j] - q[i - j - 1]);
            const double y = term - comp;
            const double t = s + y;
            comp = (t - s) - y;
            s = t;
        }
        d[i] = c * s;
    }
    return d;
}

}  // namespace fraclog
