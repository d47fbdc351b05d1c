#include "abcr/toy_model.hpp"

#include <algorithm>
#include <cmath>

#include "abcr/errors.hpp"

namespace abcr {

namespace {

double median_of(std::vector<double> v) {
    const std::size_t n = v.size();
    const std::size_t mid = n / 2;
    std::nth_element(v.begin(), v.begin() + mid, v.end());
    if (n % 2 == 1) return v[mid];
    const double hi = v[mid];
    std::nth_element(v.begin(), v.begin() + mid - 1, v.end());
    return 0.5 * (v[mid - 1] + hi);
}

Eigen::Vector2d toy_psi_sum(const Eigen::VectorXd& y, double mu, double sigma,
                            const TuningConstants& tc, double k2) {
    double s1 = 0.0;
    double s2 = 0.0;
    for (Eigen::Index i = 0; i < y.size(); ++i) {
        const double z = (y[i] - mu) / sigma;
        const double p1 = huber_psi(z, tc.c1);
        const double p2 = huber_psi(z, tc.c2);
        s1 += p1;
        s2 += p2 * p2;
    }
    return {s1, s2 - static_cast<double>(y.size()) * k2};
}

}  // namespace

Eigen::MatrixXd toy_psi_units(const Eigen::VectorXd& y, const ToyTheta& theta,
                              const TuningConstants& tc) {
    const double k2 = consistency_k(tc.c2);
    Eigen::MatrixXd units(y.size(), 2);
    for (Eigen::Index i = 0; i < y.size(); ++i) {
        const double z = (y[i] - theta.mu) / theta.sigma;
        const double p2 = huber_psi(z, tc.c2);
        units(i, 0) = huber_psi(z, tc.c1);
        units(i, 1) = p2 * p2 - k2;
    }
    return units;
}

Eigen::VectorXd ToyLocationScaleModel::data_part(const Eigen::VectorXd& y,
                                                 const Eigen::VectorXd& theta) const {
    const ToyTheta t = ToyTheta::from_vector(theta);
    double s1 = 0.0;
    double s2 = 0.0;
    for (Eigen::Index i = 0; i < y.size(); ++i) {
        const double z = (y[i] - t.mu) / t.sigma;
        const double p2 = huber_psi(z, tc_.c2);
        s1 += huber_psi(z, tc_.c1);
        s2 += p2 * p2;
    }
    Eigen::VectorXd out(2);
    out << s1, s2;
    return out;
}

Eigen::VectorXd ToyLocationScaleModel::correction_part(const Eigen::VectorXd& theta) const {
    (void)theta;
    Eigen::VectorXd out(2);
    out << 0.0, static_cast<double>(n_) * consistency_k(tc_.c2);
    return out;
}

ToySolveReport toy_solve_report(const Eigen::VectorXd& y, const TuningConstants& tc,
                                int max_iter, double tol) {
    const auto n = y.size();
    if (n < 2) throw std::invalid_argument("toy_solve: need n >= 2");
    std::vector<double> yv(y.data(), y.data() + n);
    const double med = median_of(yv);
    std::vector<double> dev(yv.size());
    for (std::size_t i = 0; i < yv.size(); ++i) dev[i] = std::abs(yv[i] - med);
    const double mad = median_of(dev);
    if (mad <= 0.0) throw DegenerateSample("toy_solve: MAD is zero");

    const double k2 = consistency_k(tc.c2);
    double mu = med;
    double sigma2 = 1.4826 * mad;
    sigma2 *= sigma2;

    ToySolveReport rep;
    int it = 0;
    for (; it < max_iter; ++it) {
        const double sigma = std::sqrt(sigma2);
        // location step: weighted mean with Huber weights
        double wsum = 0.0;
        double wy = 0.0;
        for (Eigen::Index i = 0; i < n; ++i) {
            const double w = huber_weight((y[i] - mu) / sigma, tc.c1);
            wsum += w;
            wy += w * y[i];
        }
        mu = wy / wsum;
        // scale step: Proposal-2 rescaling
        double s2 = 0.0;
        for (Eigen::Index i = 0; i < n; ++i) {
            const double p = huber_psi((y[i] - mu) / sigma, tc.c2);
            s2 += p * p;
        }
        sigma2 *= s2 / (static_cast<double>(n) * k2);

        const Eigen::Vector2d psi = toy_psi_sum(y, mu, std::sqrt(sigma2), tc, k2);
        rep.psi_sup_norm = psi.cwiseAbs().maxCoeff();
        if (rep.psi_sup_norm <= std::max(tol * 1e-2, 1e-13 * static_cast<double>(n))) break;
    }

    // Newton polish on (mu, sigma) for the sup-norm certificate.
    double sigma = std::sqrt(sigma2);
    for (int k = 0; k < 40 && rep.psi_sup_norm > tol * 1e-4; ++k) {
        const Eigen::Vector2d f = toy_psi_sum(y, mu, sigma, tc, k2);
        const double h_mu = 1e-7 * std::max(1.0, std::abs(mu));
        const double h_sg = 1e-7 * std::max(1.0, sigma);
        Eigen::Matrix2d jac;
        jac.col(0) = (toy_psi_sum(y, mu + h_mu, sigma, tc, k2) -
                      toy_psi_sum(y, mu - h_mu, sigma, tc, k2)) /
                     (2.0 * h_mu);
        jac.col(1) = (toy_psi_sum(y, mu, sigma + h_sg, tc, k2) -
                      toy_psi_sum(y, mu, sigma - h_sg, tc, k2)) /
                     (2.0 * h_sg);
        Eigen::Vector2d step = jac.fullPivLu().solve(-f);
        if (!step.allFinite()) break;
        double lambda = 1.0;
        double best = f.cwiseAbs().maxCoeff();
        double new_mu = mu;
        double new_sigma = sigma;
        for (int ls = 0; ls < 30; ++ls) {
            const double cand_mu = mu + lambda * step[0];
            const double cand_sigma = sigma + lambda * step[1];
            if (cand_sigma > 0.0) {
                const double cand =
                    toy_psi_sum(y, cand_mu, cand_sigma, tc, k2).cwiseAbs().maxCoeff();
                if (cand < best) {
                    best = cand;
                    new_mu = cand_mu;
                    new_sigma = cand_sigma;
                    break;
                }
            }
            lambda *= 0.5;
        }
        if (new_mu == mu && new_sigma == sigma) break;
        mu = new_mu;
        sigma = new_sigma;
        rep.psi_sup_norm = best;
    }

    if (rep.psi_sup_norm > tol) {
        throw NoConvergence("toy_solve: ||Psi||_inf = " + std::to_string(rep.psi_sup_norm) +
                            " above tolerance after " + std::to_string(max_iter) + " iterations");
    }
    rep.theta = ToyTheta(mu, sigma);
    rep.iterations = it;
    return rep;
}

Eigen::VectorXd toy_simulate(const ToyTheta& theta, int n, const ContaminationSpec& cont,
                             RngStream& rng) {
    if (n < 1) throw std::invalid_argument("toy_simulate: n must be >= 1");
    Eigen::VectorXd y(n);
    const double infl_sd = std::sqrt(cont.inflation);
    for (int i = 0; i < n; ++i) {
        double sd = theta.sigma;
        if (cont.epsilon > 0.0 && rng.uniform() < cont.epsilon) sd *= infl_sd;
        y[i] = theta.mu + sd * rng.normal();
    }
    return y;
}

std::pair<SpdMatrix, SpdMatrix> toy_analytic_HJ(const ToyTheta& theta,
                                                const TuningConstants& tc, int n) {
    const double c1 = tc.c1;
    const double c2 = tc.c2;
    const double nn = static_cast<double>(n);
    // H = -E dPsi/dtheta; cross terms vanish by odd/even symmetry.
    const double h_mu =
        nn / theta.sigma * gauss_quadrature([&](double z) { return huber_psi_prime(z, c1); });
    const double h_sg = nn / theta.sigma * gauss_quadrature([&](double z) {
        return 2.0 * huber_psi(z, c2) * huber_psi_prime(z, c2) * z;
    });
    const double k2 = consistency_k(c2);
    const double j_mu = nn * gauss_quadrature([&](double z) {
        const double p = huber_psi(z, c1);
        return p * p;
    });
    const double j_sg = nn * gauss_quadrature([&](double z) {
        const double p = huber_psi(z, c2);
        const double u = p * p - k2;
        return u * u;
    });
    Eigen::Matrix2d H = Eigen::Vector2d(h_mu, h_sg).asDiagonal();
    Eigen::Matrix2d J = Eigen::Vector2d(j_mu, j_sg).asDiagonal();
    return {SpdMatrix(H), SpdMatrix(J)};
}

}  // namespace abcr
