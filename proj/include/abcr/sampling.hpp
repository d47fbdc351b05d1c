#pragma once

#include <Eigen/Dense>

#include "abcr/rng.hpp"
#include "abcr/spd.hpp"

namespace abcr {

inline Eigen::VectorXd draw_std_normal(Eigen::Index d, RngStream& rng) {
    Eigen::VectorXd z(d);
    for (Eigen::Index i = 0; i < d; ++i) z[i] = rng.normal();
    return z;
}

// Multivariate normal draw given a precomputed lower Cholesky factor.
inline Eigen::VectorXd draw_mvn_chol(const Eigen::VectorXd& mean, const Eigen::MatrixXd& chol_lower,
                                     RngStream& rng) {
    return mean + chol_lower * draw_std_normal(mean.size(), rng);
}

inline Eigen::VectorXd draw_mvn(const Eigen::VectorXd& mean, const SpdMatrix& cov, RngStream& rng) {
    if (mean.size() != cov.dim()) {
        throw std::invalid_argument("draw_mvn: mean/cov dimension mismatch");
    }
    return draw_mvn_chol(mean, matrix_sqrt(cov, SqrtMode::lower_cholesky), rng);
}

// Multivariate t draw: center + B z sqrt(df/w), w ~ chi-square(df).
inline Eigen::VectorXd draw_mvt_chol(const Eigen::VectorXd& center,
                                     const Eigen::MatrixXd& chol_lower, int df, RngStream& rng) {
    if (df < 1) throw std::invalid_argument("draw_mvt: df must be >= 1");
    const Eigen::VectorXd z = draw_std_normal(center.size(), rng);
    const double w = rng.chi_square(static_cast<double>(df));
    return center + chol_lower * z * std::sqrt(static_cast<double>(df) / w);
}

inline Eigen::VectorXd draw_mvt(const Eigen::VectorXd& center, const SpdMatrix& scale, int df,
                                RngStream& rng) {
    if (center.size() != scale.dim()) {
        throw std::invalid_argument("draw_mvt: center/scale dimension mismatch");
    }
    return draw_mvt_chol(center, matrix_sqrt(scale, SqrtMode::lower_cholesky), df, rng);
}

}  // namespace abcr
