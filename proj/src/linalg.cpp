#include "smlab/linalg.hpp"

#include "smlab/error.hpp"

namespace smlab {

namespace {
constexpr double kRidge = 1e-10;
constexpr int kRefineSteps = 2;
} // namespace

AffineFit ols_fit(const Eigen::MatrixXd& H, const Eigen::MatrixXd& P) {
    const Eigen::Index n = H.rows();
    const Eigen::Index dh = H.cols();
    const Eigen::Index dp = P.cols();
    if (n != P.rows()) throw ArgumentError("ols_fit: H and P row counts differ");
    if (n < 2) throw DegenerateInputError("ols_fit: need at least two samples");

    bool all_equal = true;
    for (Eigen::Index i = 1; i < n && all_equal; ++i)
        all_equal = (H.row(i) == H.row(0));
    if (all_equal) throw DegenerateInputError("ols_fit: all H rows identical");

    // design matrix [H | 1]
    Eigen::MatrixXd X(n, dh + 1);
    X.leftCols(dh) = H;
    X.col(dh).setOnes();

    const Eigen::MatrixXd gram = X.transpose() * X;                // (dh+1)^2
    const Eigen::MatrixXd rhs = X.transpose() * P;                 // (dh+1) x dp
    Eigen::MatrixXd gram_ridged = gram;
    gram_ridged.diagonal().array() += kRidge;

    Eigen::LDLT<Eigen::MatrixXd> solver(gram_ridged);
    Eigen::MatrixXd W = solver.solve(rhs);
    // refinement against the unridged normal equations; they are always
    // consistent, so this converges even for singular Gram matrices
    for (int it = 0; it < kRefineSteps; ++it) {
        const Eigen::MatrixXd res = rhs - gram * W;
        W += solver.solve(res);
    }

    AffineFit fit;
    fit.A = W.topRows(dh).transpose();
    fit.b = W.row(dh).transpose();
    fit.residual = (X * W - P).squaredNorm() / static_cast<double>(n);
    return fit;
}

Eigen::MatrixXd pairwise_distances(const Eigen::MatrixXd& X) {
    const Eigen::Index n = X.rows();
    Eigen::MatrixXd D = Eigen::MatrixXd::Zero(n, n);
    for (Eigen::Index i = 0; i < n; ++i) {
        for (Eigen::Index j = i + 1; j < n; ++j) {
            const double d = (X.row(i) - X.row(j)).norm();
            D(i, j) = d;
            D(j, i) = d;
        }
    }
    return D;
}

double max_pairwise_distance(const Eigen::MatrixXd& X) {
    const Eigen::Index n = X.rows();
    double best = 0.0;
    for (Eigen::Index i = 0; i < n; ++i)
        for (Eigen::Index j = i + 1; j < n; ++j)
            best = std::max(best, (X.row(i) - X.row(j)).squaredNorm());
    return std::sqrt(best);
}

MeanStd mean_std(const Eigen::VectorXd& values) {
    MeanStd out;
    const Eigen::Index n = values.size();
    if (n == 0) return out;
    out.mean = values.mean();
    out.std = std::sqrt((values.array() - out.mean).square().sum() / static_cast<double>(n));
    return out;
}

} // namespace smlab
