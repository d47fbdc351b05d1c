#pragma once

#include <algorithm>
#include <cmath>
#include <vector>

#include "abcr/errors.hpp"
#include "abcr/quadrature.hpp"

namespace abcr {

// Type-7 (linear interpolation) empirical quantile of unsorted data.
inline double empirical_quantile(std::vector<double> x, double p) {
    if (x.empty()) throw std::invalid_argument("empirical_quantile: empty sample");
    std::sort(x.begin(), x.end());
    if (p <= 0.0) return x.front();
    if (p >= 1.0) return x.back();
    const double idx = p * (static_cast<double>(x.size()) - 1.0);
    const auto lo = static_cast<std::size_t>(std::floor(idx));
    const double frac = idx - static_cast<double>(lo);
    if (lo + 1 >= x.size()) return x.back();
    return x[lo] * (1.0 - frac) + x[lo + 1] * frac;
}

// Silverman's rule: 0.9 * min(sd, IQR/1.34) * n^{-1/5}. When the IQR
// collapses to zero on a non-degenerate sample the sd branch is used.
inline double silverman_bandwidth(const std::vector<double>& samples) {
    const auto n = samples.size();
    if (n < 2) throw DegenerateSample("silverman_bandwidth: need at least 2 samples");
    double mean = 0.0;
    for (double v : samples) mean += v;
    mean /= static_cast<double>(n);
    double ss = 0.0;
    for (double v : samples) ss += (v - mean) * (v - mean);
    const double sd = std::sqrt(ss / (static_cast<double>(n) - 1.0));
    const double iqr =
        empirical_quantile(samples, 0.75) - empirical_quantile(samples, 0.25);
    double spread = std::min(sd, iqr / 1.34);
    if (spread <= 0.0) spread = sd;
    if (spread <= 0.0) throw DegenerateSample("silverman_bandwidth: all samples identical");
    return 0.9 * spread * std::pow(static_cast<double>(n), -0.2);
}

// Gaussian-kernel density estimate at x with Silverman bandwidth.
inline double kde_density(const std::vector<double>& samples, double x) {
    const double bw = silverman_bandwidth(samples);
    double acc = 0.0;
    for (double s : samples) acc += norm_pdf((x - s) / bw);
    return acc / (static_cast<double>(samples.size()) * bw);
}

// Same estimate evaluated with a caller-supplied bandwidth.
inline double kde_density_bw(const std::vector<double>& samples, double x, double bw) {
    double acc = 0.0;
    for (double s : samples) acc += norm_pdf((x - s) / bw);
    return acc / (static_cast<double>(samples.size()) * bw);
}

}  // namespace abcr
