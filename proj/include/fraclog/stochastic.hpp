#pragma once

#include <cstdint>
#include <random>

namespace fraclog {

/// Deterministic random stream: the same (seed, stream_id) pair always
/// yields the same sample sequence. Monte Carlo drivers derive disjoint
/// substreams as (seed, (stream_id << 20) + i), so distinct caller streams
/// below 2^43 never collide.
class RngStream {
  public:
    explicit RngStream(std::uint64_t seed, std::uint64_t stream_id = 0);

    /// Uniform draw strictly inside (0, 1), built from 53 bits.
    double uniform01();

    /// Unit-rate exponential draw.
    double exponential();

    std::uint64_t seed() const noexcept { return seed_; }
    std::uint64_t stream_id() const noexcept { return stream_id_; }

  private:
    std::uint64_t seed_;
    std::uint64_t stream_id_;
    std::mt19937_64 engine_;
};

struct McEstimate {
    double mean = 0.0;
    double std_error = 0.0; // sample stddev / sqrt(n)
    std::int64_t n = 0;
};

/// One draw of the standard one-sided beta-stable law, E[e^(-lambda S)] =
/// exp(-lambda^beta), by Kanter's representation
///   S = (sin(beta pi U) / sin(pi U)^(1/beta)) *
///       ((sin((1-beta) pi U) / E)^((1-beta)/beta)).
double sample_stable(double beta, RngStream& rng);

/// One draw of the inverse beta-stable subordinator at time t:
/// L = (t/S)^beta, so E[e^(-lambda L)] = E_beta(-lambda t^beta).
double sample_inverse_subordinator(double beta, double t, RngStream& rng);

/// Monte Carlo estimate of E[e^(-lambda L_t)] over n samples. Substreams of
/// 2^16 samples are reduced pairwise in a fixed tree order, so the result is
/// reproducible bit for bit.
McEstimate mc_laplace_check(double beta, double lambda, double t, std::int64_t n,
                            const RngStream& base);

/// Monte Carlo estimate of E[u(L_t)] with u the closed-form logistic
/// solution (the subordination representation of the West function).
McEstimate mc_west(double u0, double beta, double t, std::int64_t n,
                   const RngStream& base);

}  // namespace fraclog
