#pragma once

#include <cmath>

namespace fraclog::detail {

// Double-double value: hi + lo, non-overlapping (|lo| <= ulp(hi)/2).
// Roughly 31 significant decimal digits. Only the operations the
// extended-precision series accumulation needs are provided.
struct DD {
    double hi = 0.0;
    double lo = 0.0;

    constexpr DD() = default;
    constexpr DD(double h) : hi(h) {}
    constexpr DD(double h, double l) : hi(h), lo(l) {}

    double value() const { return hi + lo; }
};

inline DD two_sum(double a, double b) {
    const double s = a + b;
    const double bb = s - a;
    return {s, (a - (s - bb)) + (b - bb)};
}

// Requires |a| >= |b| or a == 0.
inline DD quick_two_sum(double a, double b) {
    const double s = a + b;
    return {s, b - (s - a)};
}

inline DD two_prod(double a, double b) {
    const double p = a * b;
    return {p, std::fma(a, b, -p)};
}

inline DD add(const DD& a, const DD& b) {
    DD s = two_sum(a.hi, b.hi);
    return quick_two_sum(s.hi, s.lo + a.lo + b.lo);
}

inline DD add(const DD& a, double b) {
    DD s = two_sum(a.hi, b);
    return quick_two_sum(s.hi, s.lo + a.lo);
}

inline DD neg(const DD& a) { return {-a.hi, -a.lo}; }

inline DD sub(const DD& a, const DD& b) { return add(a, neg(b)); }

inline DD mul(const DD& a, const DD& b) {
    DD p = two_prod(a.hi, b.hi);
    return quick_two_sum(p.hi, p.lo + a.hi * b.lo + a.lo * b.hi);
}

inline DD mul(const DD& a, double b) {
    DD p = two_prod(a.hi, b);
    return quick_two_sum(p.hi, p.lo + a.lo * b);
}

inline DD div(const DD& a, const DD& b) {
    const double q1 = a.hi / b.hi;
    DD r = sub(a, mul(b, q1));
    const double q2 = r.hi / b.hi;
    r = sub(r, mul(b, q2));
    const double q3 = r.hi / b.hi;
    return add(add(DD{q1}, q2), q3);
}

inline DD ldexp(const DD& a, int n) {
    return {std::ldexp(a.hi, n), std::ldexp(a.lo, n)};
}

/// exp(a) in double-double. Saturates to 0 / inf outside the double range.
DD dd_exp(const DD& a);

/// log(a) for a.hi > 0.
DD dd_log(const DD& a);

/// log Gamma(x) for x >= 1 (shift to x >= 26, then a Stirling series with
/// Bernoulli terms through B_26; truncation is far below the dd epsilon).
DD dd_lgamma(const DD& x);

}  // namespace fraclog::detail
