#pragma once

#include <cmath>
#include <cstdint>
#include <random>

namespace abcr {

namespace detail {

// SplitMix64 step; used to decorrelate (seed, stream) pairs before they
// reach the engine, and to derive child stream ids.
inline std::uint64_t splitmix64(std::uint64_t x) {
    x += 0x9E3779B97F4A7C15ULL;
    x = (x ^ (x >> 30)) * 0xBF58476D1CE4E5B9ULL;
    x = (x ^ (x >> 27)) * 0x94D049BB133111EBULL;
    return x ^ (x >> 31);
}

}  // namespace detail

// Seeded random stream: a pure function of (seed, stream id). Distinct
// stream ids on the same seed give practically independent sequences, so
// replications and pipeline stages can draw concurrently without sharing
// state. All transforms are implemented on top of the raw 64-bit engine
// output; no std::*_distribution is used, which keeps sequences identical
// across standard library implementations.
class RngStream {
public:
    explicit RngStream(std::uint64_t seed, std::uint64_t stream = 0)
        : seed_(seed), stream_(stream) {
        const std::uint64_t a = detail::splitmix64(seed ^ 0x8000000000000000ULL);
        const std::uint64_t b = detail::splitmix64(a ^ stream);
        const std::uint64_t c = detail::splitmix64(b + 0x1D8AF066ULL);
        std::seed_seq sseq{static_cast<std::uint32_t>(a), static_cast<std::uint32_t>(a >> 32),
                           static_cast<std::uint32_t>(b), static_cast<std::uint32_t>(b >> 32),
                           static_cast<std::uint32_t>(c), static_cast<std::uint32_t>(c >> 32)};
        engine_.seed(sseq);
    }

    std::uint64_t seed() const { return seed_; }
    std::uint64_t stream() const { return stream_; }

    // Child stream k; same seed, mixed stream id.
    RngStream substream(std::uint64_t k) const {
        return RngStream(seed_, detail::splitmix64(stream_ + 0x9E3779B97F4A7C15ULL * (k + 1)));
    }

    std::uint64_t next_u64() { return engine_(); }

    // Uniform on the open interval (0, 1); 53-bit resolution.
    double uniform() {
        return (static_cast<double>(engine_() >> 11) + 0.5) * 0x1.0p-53;
    }

    double uniform(double lo, double hi) { return lo + (hi - lo) * uniform(); }

    // Standard normal via Box-Muller; the antithetic partner is cached.
    double normal() {
        if (has_cached_) {
            has_cached_ = false;
            return cached_;
        }
        const double u1 = uniform();
        const double u2 = uniform();
        const double r = std::sqrt(-2.0 * std::log(u1));
        const double a = 2.0 * M_PI * u2;
        cached_ = r * std::sin(a);
        has_cached_ = true;
        return r * std::cos(a);
    }

    // Marsaglia-Tsang; rejection counts depend on the draw sequence only.
    double gamma(double shape) {
        if (shape < 1.0) {
            const double u = uniform();
            return gamma(shape + 1.0) * std::pow(u, 1.0 / shape);
        }
        const double d = shape - 1.0 / 3.0;
        const double c = 1.0 / std::sqrt(9.0 * d);
        for (;;) {
            double x;
            double v;
            do {
                x = normal();
                v = 1.0 + c * x;
            } while (v <= 0.0);
            v = v * v * v;
            const double u = uniform();
            if (std::log(u) < 0.5 * x * x + d - d * v + d * std::log(v)) {
                return d * v;
            }
        }
    }

    double chi_square(double df) { return 2.0 * gamma(0.5 * df); }

    double exponential() { return -std::log(uniform()); }

    // Uniform over {0, ..., n-1} by rejection (unbiased).
    std::uint64_t uniform_index(std::uint64_t n) {
        const std::uint64_t limit = UINT64_MAX - UINT64_MAX % n;
        std::uint64_t x;
        do {
            x = engine_();
        } while (x >= limit);
        return x % n;
    }

private:
    std::uint64_t seed_;
    std::uint64_t stream_;
    std::mt19937_64 engine_;
    bool has_cached_ = false;
    double cached_ = 0.0;
};

}  // namespace abcr
