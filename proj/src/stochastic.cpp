#include "fraclog/stochastic.hpp"

#include <cmath>
#include <stdexcept>
#include <vector>

#include "fraclog/logistic.hpp"

namespace fraclog {

namespace {

constexpr double kPi = 3.14159265358979323846;
constexpr std::int64_t kChunk = 1 << 16;

void validate_stable_order(double beta) {
    if (!(beta > 0.0) || !(beta < 1.0)) {
        throw std::domain_error("sample_stable: beta must lie strictly in (0, 1)");
    }
}

struct Partial {
    std::int64_t n = 0;
    double sum = 0.0;
    double sumsq = 0.0;
};

Partial combine(const Partial& a, const Partial& b) {
    return {a.n + b.n, a.sum + b.sum, a.sumsq + b.sumsq};
}

// Accumulate one substream with compensated sums.
template <typename Draw>
Partial run_substream(const RngStream& base, std::uint64_t i, std::int64_t count,
                      Draw&& draw) {
    RngStream rng(base.seed(), (base.stream_id() << 20) + i);
    Partial p;
    p.n = count;
    double cs = 0.0, csq = 0.0;
    for (std::int64_t k = 0; k < count; ++k) {
        const double v = draw(rng);
        double y = v - cs;
        double t = p.sum + y;
        cs = (t - p.sum) - y;
        p.sum = t;
        y = v * v - csq;
        t = p.sumsq + y;
        csq = (t - p.sumsq) - y;
        p.sumsq = t;
    }
    return p;
}

template <typename Draw>
McEstimate monte_carlo(const RngStream& base, std::int64_t n, Draw&& draw) {
    if (n < 2) throw std::invalid_argument("monte carlo: need n >= 2");
    std::vector<Partial> parts;
    parts.reserve(static_cast<size_t>((n + kChunk - 1) / kChunk));
    std::int64_t done = 0;
    std::uint64_t i = 0;
    while (done < n) {
        const std::int64_t count = std::min(kChunk, n - done);
        parts.push_back(run_substream(base, i, count, draw));
        done += count;
        ++i;
    }
    // pairwise tree reduction in stream_id order
    while (parts.size() > 1) {
        std::vector<Partial> next;
        next.reserve((parts.size() + 1) / 2);
        for (size_t j = 0; j + 1 < parts.size(); j += 2) {
            next.push_back(combine(parts[j], parts[j + 1]));
        }
        if (parts.size() % 2 == 1) next.push_back(parts.back());
        parts = std::move(next);
    }
    const Partial& p = parts.front();
    McEstimate e;
    e.n = p.n;
    e.mean = p.sum / static_cast<double>(p.n);
    const double var =
        std::max(0.0, (p.sumsq - p.sum * e.mean) / static_cast<double>(p.n - 1));
    e.std_error = std::sqrt(var / static_cast<double>(p.n));
    return e;
}

}  // namespace

RngStream::RngStream(std::uint64_t seed, std::uint64_t stream_id)
    : seed_(seed), stream_id_(stream_id) {
    std::seed_seq seq{static_cast<std::uint32_t>(seed),
                      static_cast<std::uint32_t>(seed >> 32),
                      static_cast<std::uint32_t>(stream_id),
                      static_cast<std::uint32_t>(stream_id >> 32)};
    engine_.seed(seq);
}

double RngStream::uniform01() {
    // 53-bit mantissa, offset by half an ulp: never 0, never 1.
    const std::uint64_t bits = engine_() >> 11;
    return (static_cast<double>(bits) + 0.5) * 0x1p-53;
}

double RngStream::exponential() { return -std::log(uniform01()); }

double sample_stable(double beta, RngStream& rng) {
    validate_stable_order(beta);
    const double u = rng.uniform01();
    const double e = rng.exponential();
    const double pu = kPi * u;
    const double s = std::sin(beta * pu) / std::pow(std::sin(pu), 1.0 / beta);
    return s * std::pow(std::sin((1.0 - beta) * pu) / e, (1.0 - beta) / beta);
}

double sample_inverse_subordinator(double beta, double t, RngStream& rng) {
    if (!(t > 0.0)) {
        throw std::domain_error("sample_inverse_subordinator: t must be positive");
    }
    const double s = sample_stable(beta, rng);
    return std::pow(t / s, beta);
}

McEstimate mc_laplace_check(double beta, double lambda, double t, std::int64_t n,
                            const RngStream& base) {
    validate_stable_order(beta);
    if (!(lambda >= 0.0)) throw std::domain_error("mc_laplace_check: lambda must be >= 0");
    if (!(t > 0.0)) throw std::domain_error("mc_laplace_check: t must be positive");
    if (n < 1000) throw std::invalid_argument("mc_laplace_check: need n >= 1000");
    return monte_carlo(base, n, [=](RngStream& rng) {
        return std::exp(-lambda * sample_inverse_subordinator(beta, t, rng));
    });
}

McEstimate mc_west(double u0, double beta, double t, std::int64_t n,
                   const RngStream& base) {
    validate_stable_order(beta);
    if (!(u0 > 0.0)) throw std::domain_error("mc_west: u0 must be positive");
    if (!(t > 0.0)) throw std::domain_error("mc_west: t must be positive");
    return monte_carlo(base, n, [=](RngStream& rng) {
        return logistic_exact(u0, sample_inverse_subordinator(beta, t, rng));
    });
}

}  // namespace fraclog
