#pragma once

#include <Eigen/Dense>
#include <string>
#include <vector>

#include "abcr/estimating_function.hpp"
#include "abcr/huber.hpp"
#include "abcr/spd.hpp"
#include "abcr/toy_model.hpp"

namespace abcr {

// Two-component nested design: g independent groups, group j carrying an
// n_j x q fixed-effect block X_j, one group-level random intercept and an
// i.i.d. residual. var(y_j) = sigma1^2 * 11^T + sigma2^2 * I.
struct LmmDesign {
    std::vector<Eigen::MatrixXd> X;  // per-group design
    int q = 0;
    int n_total = 0;

    int n_groups() const { return static_cast<int>(X.size()); }

    void validate() const;

    // One observation per treatment level: X_j is q x q, intercept plus
    // q-1 dummies. Identical across groups.
    static LmmDesign balanced_oneway(int q, int g);
};

struct LmmTheta {
    Eigen::VectorXd alpha;
    double sigma1_sq = 1.0;
    double sigma2_sq = 1.0;

    LmmTheta() = default;
    LmmTheta(Eigen::VectorXd a, double s1, double s2)
        : alpha(std::move(a)), sigma1_sq(s1), sigma2_sq(s2) {
        if (!(s1 > 0.0) || !(s2 > 0.0)) {
            throw std::invalid_argument("LmmTheta: variance components must be positive");
        }
    }

    Eigen::VectorXd to_vector() const {
        Eigen::VectorXd v(alpha.size() + 2);
        v.head(alpha.size()) = alpha;
        v[alpha.size()] = sigma1_sq;
        v[alpha.size() + 1] = sigma2_sq;
        return v;
    }

    static LmmTheta from_vector(const Eigen::VectorXd& v) {
        return LmmTheta(v.head(v.size() - 2), v[v.size() - 2], v[v.size() - 1]);
    }
};

// Closed-form pieces of V = s1*11^T + s2*I for one group size: V^{-1} and
// the symmetric V^{-1/2} are a*I + b*11^T, so they are applied in O(n)
// without forming matrices.
struct NestedCov {
    int n = 0;
    double s1 = 0.0, s2 = 0.0;
    double inv_a = 0.0, inv_b = 0.0;            // V^{-1}
    double isqrt_a = 0.0, isqrt_b = 0.0;        // V^{-1/2}, symmetric root
    double logdet = 0.0;

    static NestedCov make(int n, double sigma1_sq, double sigma2_sq);

    Eigen::VectorXd apply_inv(const Eigen::VectorXd& x) const {
        return inv_a * x + Eigen::VectorXd::Constant(x.size(), inv_b * x.sum());
    }
    Eigen::VectorXd apply_inv_sqrt(const Eigen::VectorXd& x) const {
        return isqrt_a * x + Eigen::VectorXd::Constant(x.size(), isqrt_b * x.sum());
    }
    Eigen::MatrixXd inv_matrix() const;
    Eigen::MatrixXd inv_sqrt_matrix() const;
    Eigen::MatrixXd v_matrix() const;
};

// Per-theta cache: one NestedCov per distinct group size plus the global
// GLS cross-product A = X^T V^{-1} X and the two REML projection traces
// tr(P Z_i Z_i^T), P = V^{-1} - V^{-1} X A^{-1} X^T V^{-1}.
class GroupMatrices {
public:
    GroupMatrices(const LmmDesign& design, const LmmTheta& theta);

    const NestedCov& cov_for_group(int j) const { return covs_[cov_index_[j]]; }
    const Eigen::MatrixXd& xtvx() const { return xtvx_; }
    const Eigen::LDLT<Eigen::MatrixXd>& xtvx_solver() const { return xtvx_ldlt_; }
    double trace_p_z1() const { return trace_p_z1_; }
    double trace_p_z2() const { return trace_p_z2_; }
    // per-group terms of the traces above (they sum to the totals)
    double trace_p_z1_group(int j) const { return tr1_group_[j]; }
    double trace_p_z2_group(int j) const { return tr2_group_[j]; }

private:
    std::vector<NestedCov> covs_;
    std::vector<int> cov_index_;
    Eigen::MatrixXd xtvx_;
    Eigen::LDLT<Eigen::MatrixXd> xtvx_ldlt_;
    std::vector<double> tr1_group_, tr2_group_;
    double trace_p_z1_ = 0.0, trace_p_z2_ = 0.0;
};

// Blockwise Gaussian log-likelihood, additive -(n/2) log 2pi included.
double lmm_loglik(const Eigen::VectorXd& y, const LmmDesign& design, const LmmTheta& theta);

// Groupwise draw; with probability cont.epsilon a group's covariance is
// inflated by cont.inflation.
Eigen::VectorXd lmm_simulate(const LmmTheta& theta, const LmmDesign& design,
                             const ContaminationSpec& cont, RngStream& rng);

// Bounded-influence REML-type estimating function, stacked as
// (alpha block, sigma1^2 block, sigma2^2 block).
Eigen::VectorXd robust_reml2_psi(const Eigen::VectorXd& y, const LmmDesign& design,
                                 const LmmTheta& theta, const TuningConstants& tc);

struct LmmSolveReport {
    LmmTheta theta;
    int iterations = 0;
    double psi_sup_norm = 0.0;
    bool variance_floored = false;  // a component hit the 1e-6 floor
};

LmmSolveReport lmm_solve_report(const Eigen::VectorXd& y, const LmmDesign& design,
                                const TuningConstants& tc, int max_iter = 100,
                                double tol = 1e-7);

inline LmmTheta lmm_solve(const Eigen::VectorXd& y, const LmmDesign& design,
                          const TuningConstants& tc, int max_iter = 100, double tol = 1e-7) {
    return lmm_solve_report(y, design, tc, max_iter, tol).theta;
}

// EstimatingFunctionModel facade; theta = (alpha, sigma1^2, sigma2^2),
// units = groups.
class LmmModel final : public EstimatingFunctionModel {
public:
    LmmModel(LmmDesign design, TuningConstants tc);

    int dim_theta() const override { return design_.q + 2; }
    int n_units() const override { return design_.n_groups(); }

    Eigen::VectorXd simulate(const Eigen::VectorXd& theta, RngStream& rng) const override {
        return lmm_simulate(LmmTheta::from_vector(theta), design_, ContaminationSpec::none(),
                            rng);
    }

    Eigen::MatrixXd psi_units(const Eigen::VectorXd& y,
                              const Eigen::VectorXd& theta) const override;

    Eigen::VectorXd data_part(const Eigen::VectorXd& y,
                              const Eigen::VectorXd& theta) const override;

    Eigen::VectorXd correction_part(const Eigen::VectorXd& theta) const override;

    Eigen::VectorXd solve(const Eigen::VectorXd& y) const override {
        return lmm_solve(y, design_, tc_).to_vector();
    }

    std::vector<bool> positive_mask() const override {
        std::vector<bool> mask(static_cast<std::size_t>(dim_theta()), false);
        mask[mask.size() - 2] = true;
        mask[mask.size() - 1] = true;
        return mask;
    }

    std::vector<std::string> parameter_names() const override;

    const LmmDesign& design() const { return design_; }
    const TuningConstants& tuning() const { return tc_; }

private:
    LmmDesign design_;
    TuningConstants tc_;
};

}  // namespace abcr
