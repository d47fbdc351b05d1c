#pragma once

#include <Eigen/Dense>

#include "abcr/estimating_function.hpp"
#include "abcr/huber.hpp"
#include "abcr/spd.hpp"

namespace abcr {

struct ToyTheta {
    double mu = 0.0;
    double sigma = 1.0;

    ToyTheta() = default;
    ToyTheta(double mu_, double sigma_) : mu(mu_), sigma(sigma_) {
        if (!(sigma > 0.0)) throw std::invalid_argument("ToyTheta: sigma must be positive");
    }

    Eigen::Vector2d to_vector() const { return {mu, sigma}; }
    static ToyTheta from_vector(const Eigen::VectorXd& v) { return {v[0], v[1]}; }
};

// Scale-mixture contamination: with probability epsilon a unit is drawn
// with its variance inflated by the given factor.
struct ContaminationSpec {
    double epsilon = 0.0;
    double inflation = 1.0;

    ContaminationSpec() = default;
    ContaminationSpec(double eps, double infl) : epsilon(eps), inflation(infl) {
        if (!(eps >= 0.0 && eps < 1.0)) {
            throw std::invalid_argument("ContaminationSpec: epsilon must be in [0,1)");
        }
        if (!(infl > 0.0)) {
            throw std::invalid_argument("ContaminationSpec: inflation must be positive");
        }
    }

    static ContaminationSpec none() { return {}; }
};

struct ToySolveReport {
    ToyTheta theta;
    int iterations = 0;
    double psi_sup_norm = 0.0;
};

// Per-unit contributions (psi_{c1}(z_i), psi_{c2}(z_i)^2 - k(c2)) with
// z_i = (y_i - mu)/sigma. Rows sum to Psi = (Psi_mu, Psi_sigma).
Eigen::MatrixXd toy_psi_units(const Eigen::VectorXd& y, const ToyTheta& theta,
                              const TuningConstants& tc);

// Huber Proposal-2 root via alternating reweighting from the median/MAD
// start, polished by a damped Newton step to the sup-norm certificate.
ToySolveReport toy_solve_report(const Eigen::VectorXd& y, const TuningConstants& tc,
                                int max_iter = 200, double tol = 1e-8);

inline ToyTheta toy_solve(const Eigen::VectorXd& y, const TuningConstants& tc,
                          int max_iter = 200, double tol = 1e-8) {
    return toy_solve_report(y, tc, max_iter, tol).theta;
}

// Sample of size n: N(mu, sigma^2) w.p. 1-eps, N(mu, inflation*sigma^2)
// w.p. eps.
Eigen::VectorXd toy_simulate(const ToyTheta& theta, int n, const ContaminationSpec& cont,
                             RngStream& rng);

// Closed-path sensitivity and variability matrices under the central
// normal model, entries via quadrature of the psi integrands. Both are
// diagonal 2x2, n-scaled.
std::pair<SpdMatrix, SpdMatrix> toy_analytic_HJ(const ToyTheta& theta,
                                                const TuningConstants& tc, int n);

// EstimatingFunctionModel over (mu, sigma) for fixed sample size n.
// Simulation is always from the central model; contamination belongs to
// the data-generation side of experiments, not to F_theta.
class ToyLocationScaleModel final : public EstimatingFunctionModel {
public:
    ToyLocationScaleModel(int n, TuningConstants tc) : n_(n), tc_(tc) {
        if (n < 2) throw std::invalid_argument("ToyLocationScaleModel: n must be >= 2");
    }

    int dim_theta() const override { return 2; }
    int n_units() const override { return n_; }

    Eigen::VectorXd simulate(const Eigen::VectorXd& theta, RngStream& rng) const override {
        return toy_simulate(ToyTheta::from_vector(theta), n_, ContaminationSpec::none(), rng);
    }

    Eigen::MatrixXd psi_units(const Eigen::VectorXd& y,
                              const Eigen::VectorXd& theta) const override {
        return toy_psi_units(y, ToyTheta::from_vector(theta), tc_);
    }

    Eigen::VectorXd data_part(const Eigen::VectorXd& y,
                              const Eigen::VectorXd& theta) const override;

    Eigen::VectorXd correction_part(const Eigen::VectorXd& theta) const override;

    Eigen::VectorXd solve(const Eigen::VectorXd& y) const override {
        return toy_solve(y, tc_).to_vector();
    }

    std::vector<bool> positive_mask() const override { return {false, true}; }

    std::vector<std::string> parameter_names() const override { return {"mu", "sigma"}; }

    const TuningConstants& tuning() const { return tc_; }

private:
    int n_;
    TuningConstants tc_;
};

}  // namespace abcr
