#pragma once

#include <Eigen/Dense>
#include <string>

#include "abcr/errors.hpp"

namespace abcr {

// Symmetric positive definite matrix. Construction validates symmetry
// (1e-12 relative) and strict positivity of all eigenvalues; the stored
// matrix is the symmetrized input. Immutable after construction.
class SpdMatrix {
public:
    explicit SpdMatrix(const Eigen::MatrixXd& m) {
        if (m.rows() == 0 || m.rows() != m.cols()) {
            throw std::invalid_argument("SpdMatrix: matrix must be square and non-empty");
        }
        const double scale = std::max(1.0, m.cwiseAbs().maxCoeff());
        const double asym = (m - m.transpose()).cwiseAbs().maxCoeff();
        if (!(asym <= 1e-12 * scale)) {
            throw std::invalid_argument("SpdMatrix: asymmetry " + std::to_string(asym / scale) +
                                        " exceeds 1e-12 relative");
        }
        m_ = 0.5 * (m + m.transpose());
        Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> es(m_, Eigen::EigenvaluesOnly);
        min_eig_ = es.eigenvalues().minCoeff();
        max_eig_ = es.eigenvalues().maxCoeff();
        if (!(min_eig_ > 0.0)) {
            throw NotPositiveDefinite("SpdMatrix: minimum eigenvalue " +
                                      std::to_string(min_eig_) + " is not positive");
        }
    }

    const Eigen::MatrixXd& mat() const { return m_; }
    Eigen::Index dim() const { return m_.rows(); }
    double min_eigenvalue() const { return min_eig_; }
    double condition_number() const { return max_eig_ / min_eig_; }

    static SpdMatrix identity(Eigen::Index d) {
        return SpdMatrix(Eigen::MatrixXd::Identity(d, d));
    }

private:
    Eigen::MatrixXd m_;
    double min_eig_ = 0.0;
    double max_eig_ = 0.0;
};

enum class SqrtMode { lower_cholesky, symmetric_eigen };

// Square root factor B of an SPD matrix: B*B^T = m for lower_cholesky,
// B symmetric with B*B = m for symmetric_eigen.
inline Eigen::MatrixXd matrix_sqrt(const SpdMatrix& m, SqrtMode mode) {
    if (mode == SqrtMode::lower_cholesky) {
        Eigen::LLT<Eigen::MatrixXd> llt(m.mat());
        if (llt.info() != Eigen::Success) {
            throw NotPositiveDefinite("matrix_sqrt: Cholesky factorization failed");
        }
        return llt.matrixL();
    }
    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> es(m.mat());
    if (es.info() != Eigen::Success) {
        throw NotPositiveDefinite("matrix_sqrt: eigendecomposition failed");
    }
    if (es.eigenvalues().minCoeff() <= 0.0) {
        throw NotPositiveDefinite("matrix_sqrt: nonpositive eigenvalue");
    }
    return es.eigenvectors() * es.eigenvalues().cwiseSqrt().asDiagonal() *
           es.eigenvectors().transpose();
}

}  // namespace abcr
