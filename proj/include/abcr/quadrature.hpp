#pragma once

#include <cmath>
#include <queue>
#include <vector>

#include "abcr/errors.hpp"

namespace abcr {

inline double norm_pdf(double z) { return std::exp(-0.5 * z * z) / std::sqrt(2.0 * M_PI); }

inline double norm_cdf(double z) { return 0.5 * std::erfc(-z / std::sqrt(2.0)); }

// Inverse standard normal CDF (Acklam's rational approximation with one
// Halley refinement; good to ~1e-15).
inline double norm_quantile(double p) {
    if (!(p > 0.0 && p < 1.0)) {
        throw std::invalid_argument("norm_quantile: p must be in (0,1)");
    }
    static const double a[] = {-3.969683028665376e+01, 2.209460984245205e+02,
                               -2.759285104469687e+02, 1.383577518672690e+02,
                               -3.066479806614716e+01, 2.506628277459239e+00};
    static const double b[] = {-5.447609879822406e+01, 1.615858368580409e+02,
                               -1.556989798598866e+02, 6.680131188771972e+01,
                               -1.328068155288572e+01};
    static const double c[] = {-7.784894002430293e-03, -3.223964580411365e-01,
                               -2.400758277161838e+00, -2.549732539343734e+00,
                               4.374664141464968e+00,  2.938163982698783e+00};
    static const double d[] = {7.784695709041462e-03, 3.224671290700398e-01,
                               2.445134137142996e+00, 3.754408661907416e+00};
    const double plow = 0.02425;
    double x;
    if (p < plow) {
        const double q = std::sqrt(-2.0 * std::log(p));
        x = (((((c[0] * q + c[1]) * q + c[2]) * q + c[3]) * q + c[4]) * q + c[5]) /
            ((((d[0] * q + d[1]) * q + d[2]) * q + d[3]) * q + 1.0);
    } else if (p <= 1.0 - plow) {
        const double q = p - 0.5;
        const double r = q * q;
        x = (((((a[0] * r + a[1]) * r + a[2]) * r + a[3]) * r + a[4]) * r + a[5]) * q /
            (((((b[0] * r + b[1]) * r + b[2]) * r + b[3]) * r + b[4]) * r + 1.0);
    } else {
        const double q = std::sqrt(-2.0 * std::log(1.0 - p));
        x = -(((((c[0] * q + c[1]) * q + c[2]) * q + c[3]) * q + c[4]) * q + c[5]) /
            ((((d[0] * q + d[1]) * q + d[2]) * q + d[3]) * q + 1.0);
    }
    const double e = norm_cdf(x) - p;
    const double u = e * std::sqrt(2.0 * M_PI) * std::exp(0.5 * x * x);
    return x - u / (1.0 + 0.5 * x * u);
}

namespace detail {

struct Gk15Result {
    double integral;
    double error;
};

// 15-point Kronrod rule with embedded 7-point Gauss rule on [a, b]. The
// odd-indexed Kronrod abscissae (and the center) are the Gauss nodes.
template <class F>
Gk15Result gk15(F&& f, double a, double b) {
    static const double xk[8] = {0.991455371120813, 0.949107912342759, 0.864864423359769,
                                 0.741531185599394, 0.586087235467691, 0.405845151377397,
                                 0.207784955007898, 0.0};
    static const double wk[8] = {0.022935322010529, 0.063092092629979, 0.104790010322250,
                                 0.140653259715525, 0.169004726639267, 0.190350578064785,
                                 0.204432940075298, 0.209482141084728};
    static const double wg[4] = {0.129484966168870, 0.279705391489277, 0.381830050505119,
                                 0.417959183673469};
    const double c = 0.5 * (a + b);
    const double h = 0.5 * (b - a);
    double resk = 0.0;
    double resg = 0.0;
    for (int i = 0; i < 8; ++i) {
        const double fsum =
            (i == 7) ? f(c) : f(c - h * xk[i]) + f(c + h * xk[i]);
        resk += wk[i] * fsum;
        if (i % 2 == 1) resg += wg[i / 2] * fsum;
    }
    return {resk * h, std::abs(resk - resg) * h};
}

}  // namespace detail

// Expectation of f under the standard normal weight via adaptive
// Gauss-Kronrod on the effective support [-10, 10]; absolute error target
// abs_tol. Throws NoConvergence when the refinement budget is exhausted.
template <class F>
double gauss_quadrature(F&& f, double abs_tol = 1e-10, int max_intervals = 4096) {
    auto integrand = [&f](double z) { return f(z) * norm_pdf(z); };
    struct Piece {
        double a, b, integral, error;
        bool operator<(const Piece& o) const { return error < o.error; }
    };
    std::priority_queue<Piece> queue;
    double total_err = 0.0;
    auto push = [&](double a, double b) {
        const auto r = detail::gk15(integrand, a, b);
        queue.push({a, b, r.integral, r.error});
        total_err += r.error;
    };
    const double edges[] = {-10.0, -5.0, -2.5, 0.0, 2.5, 5.0, 10.0};
    for (int i = 0; i + 1 < 7; ++i) push(edges[i], edges[i + 1]);
    int n_intervals = 6;
    while (total_err > abs_tol) {
        if (n_intervals >= max_intervals) {
            throw NoConvergence("gauss_quadrature: refinement budget exceeded");
        }
        const Piece worst = queue.top();
        queue.pop();
        total_err -= worst.error;
        const double mid = 0.5 * (worst.a + worst.b);
        push(worst.a, mid);
        push(mid, worst.b);
        ++n_intervals;
    }
    // sum smallest pieces first
    std::vector<Piece> pieces;
    pieces.reserve(queue.size());
    while (!queue.empty()) {
        pieces.push_back(queue.top());
        queue.pop();
    }
    double sum = 0.0;
    for (auto it = pieces.rbegin(); it != pieces.rend(); ++it) sum += it->integral;
    return sum;
}

}  // namespace abcr
