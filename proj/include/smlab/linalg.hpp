#ifndef SMLAB_LINALG_HPP
#define SMLAB_LINALG_HPP

#include <Eigen/Dense>

namespace smlab {

/// Least-squares affine map h -> A*h + b together with its fit quality.
struct AffineFit {
    Eigen::MatrixXd A;      // N_p x N_h
    Eigen::VectorXd b;      // N_p
    double residual = 0.0;  // mean squared residual over the fitted rows

    /// Apply the fit to a row-per-sample matrix of h vectors.
    Eigen::MatrixXd apply(const Eigen::MatrixXd& h) const {
        return (h * A.transpose()).rowwise() + b.transpose();
    }
};

/// Ordinary least squares of P on [H | 1] via normal equations.
/// A ridge of 1e-10 on the Gram diagonal keeps rank-deficient H solvable;
/// iterative refinement then removes the ridge bias from the solution, so
/// exact affine relations are recovered to machine precision.
/// Throws DegenerateInputError when fewer than two rows or all H rows equal.
AffineFit ols_fit(const Eigen::MatrixXd& H, const Eigen::MatrixXd& P);

/// Symmetric N x N matrix of Euclidean distances between the rows of X.
Eigen::MatrixXd pairwise_distances(const Eigen::MatrixXd& X);

/// Largest Euclidean distance between any two rows of X (0 for N < 2).
double max_pairwise_distance(const Eigen::MatrixXd& X);

/// Population mean and standard deviation of a sequence.
struct MeanStd {
    double mean = 0.0;
    double std = 0.0;
};
MeanStd mean_std(const Eigen::VectorXd& values);

} // namespace smlab

#endif // SMLAB_LINALG_HPP
