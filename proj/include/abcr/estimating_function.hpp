#pragma once

#include <Eigen/Dense>
#include <string>
#include <vector>

#include "abcr/rng.hpp"

namespace abcr {

// Unbiased M-estimating function bundle. An implementor provides
// simulation from the assumed model F_theta, per-unit psi contributions,
// the split of Psi into a data-dependent part and a theta-only
// consistency correction, and a root solver. The split must satisfy
//
//   Psi(y; theta) = psi_units(y, theta).colwise sum
//                 = data_part(y, theta) - correction_part(theta)
//
// to 1e-10 for every implementor; the ABC machinery relies on the
// correction cancelling in data-part differences.
class EstimatingFunctionModel {
public:
    virtual ~EstimatingFunctionModel() = default;

    virtual int dim_theta() const = 0;

    // Number of independent units (rows of psi_units).
    virtual int n_units() const = 0;

    // One dataset from F_theta, stacked as a flat vector.
    virtual Eigen::VectorXd simulate(const Eigen::VectorXd& theta, RngStream& rng) const = 0;

    // n_units x dim_theta matrix of per-unit contributions.
    virtual Eigen::MatrixXd psi_units(const Eigen::VectorXd& y,
                                      const Eigen::VectorXd& theta) const = 0;

    virtual Eigen::VectorXd data_part(const Eigen::VectorXd& y,
                                      const Eigen::VectorXd& theta) const = 0;

    virtual Eigen::VectorXd correction_part(const Eigen::VectorXd& theta) const = 0;

    // Root of Psi(y; .) = 0 with certificate ||Psi||_inf <= tolerance.
    virtual Eigen::VectorXd solve(const Eigen::VectorXd& y) const = 0;

    // Coordinates constrained to (0, inf); samplers propose these on the
    // log scale.
    virtual std::vector<bool> positive_mask() const {
        return std::vector<bool>(static_cast<std::size_t>(dim_theta()), false);
    }

    virtual std::vector<std::string> parameter_names() const {
        std::vector<std::string> names;
        for (int k = 0; k < dim_theta(); ++k) names.push_back("theta_" + std::to_string(k + 1));
        return names;
    }

    Eigen::VectorXd psi(const Eigen::VectorXd& y, const Eigen::VectorXd& theta) const {
        return data_part(y, theta) - correction_part(theta);
    }
};

}  // namespace abcr
