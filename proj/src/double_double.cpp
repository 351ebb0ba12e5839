#include "fraclog/detail/double_double.hpp"

#include <array>
#include <cmath>
#include <limits>

namespace fraclog::detail {

namespace {

const DD kLn2{0.6931471805599453, 2.3190468138462996e-17};
const DD kHalfLn2Pi{0.9189385332046728, -3.8782941580672414e-17};

// Stirling coefficients B_2n / (2n (2n-1)), n = 1..13, as exact ratios.
const std::array<DD, 13> stirling_coeffs = [] {
    constexpr double num[13] = {1.0, -1.0, 1.0, -1.0, 1.0, -691.0, 1.0,
                                -3617.0, 43867.0, -174611.0, 77683.0,
                                -236364091.0, 657931.0};
    constexpr double den[13] = {12.0, 360.0, 1260.0, 1680.0, 1188.0, 360360.0,
                                156.0, 122400.0, 244188.0, 125400.0, 5796.0,
                                1506960.0, 300.0};
    std::array<DD, 13> c;
    for (int i = 0; i < 13; ++i) c[i] = div(DD{num[i]}, DD{den[i]});
    return c;
}();

}  // namespace

DD dd_exp(const DD& a) {
    if (a.hi > 709.0) return {std::numeric_limits<double>::infinity(), 0.0};
    if (a.hi < -745.0) return {0.0, 0.0};
    // a = m ln2 + r, |r| <= ln2/2, then Taylor for exp(r).
    const int m = static_cast<int>(std::nearbyint(a.hi / kLn2.hi));
    const DD r = sub(a, mul(kLn2, static_cast<double>(m)));
    DD sum{1.0};
    DD term{1.0};
    for (int k = 1; k <= 26; ++k) {
        term = mul(term, r);
        term = div(term, DD{static_cast<double>(k)});
        sum = add(sum, term);
        if (std::fabs(term.hi) < 1.0e-35) break;
    }
    return ldexp(sum, m);
}

DD dd_log(const DD& a) {
    // One Newton step from the double log: y = y0 + (a e^{-y0} - 1) - e^2/2.
    const double y0 = std::log(a.hi);
    const DD e = add(mul(a, dd_exp(DD{-y0})), -1.0);
    DD y = add(DD{y0}, e);
    y = sub(y, mul(mul(e, e), DD{0.5}));
    return y;
}

DD dd_lgamma(const DD& x) {
    // Shift up to y >= 26: lgamma(x) = lgamma(x + m) - sum log(x + j).
    DD shift{0.0};
    DD y = x;
    while (y.hi < 26.0) {
        shift = add(shift, dd_log(y));
        y = add(y, 1.0);
    }
    const DD ly = dd_log(y);
    DD result = mul(sub(y, DD{0.5}), ly);
    result = sub(result, y);
    result = add(result, kHalfLn2Pi);
    // Asymptotic tail sum c_n / y^(2n-1), Horner in 1/y^2.
    const DD v = div(DD{1.0}, mul(y, y));
    DD s = stirling_coeffs[12];
    for (int n = 11; n >= 0; --n) s = add(mul(s, v), stirling_coeffs[n]);
    result = add(result, div(s, y));
    return sub(result, shift);
}

}  // namespace fraclog::detail
