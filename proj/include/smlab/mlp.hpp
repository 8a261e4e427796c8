#ifndef SMLAB_MLP_HPP
#define SMLAB_MLP_HPP

#include <string>
#include <vector>

#include <Eigen/Dense>

#include "smlab/rng.hpp"

namespace smlab {

enum class Activation { Selu, Relu };

std::string activation_name(Activation a);
Activation activation_from_name(const std::string& name);

// published self-normalizing constants
constexpr double kSeluAlpha = 1.6732632423543772;
constexpr double kSeluLambda = 1.0507009873554805;

/// SeLU: lambda*x for x > 0, lambda*alpha*(e^x - 1) otherwise.
inline double selu(double x) noexcept {
    return x > 0.0 ? kSeluLambda * x : kSeluLambda * kSeluAlpha * (std::exp(x) - 1.0);
}

inline double selu_derivative(double x) noexcept {
    return x > 0.0 ? kSeluLambda : kSeluLambda * kSeluAlpha * std::exp(x);
}

/// Fully connected network: affine layers with the hidden activation between
/// them and a linear output layer. Weights are stored out x in.
struct MlpParams {
    std::vector<int> sizes; // input, hidden..., output
    std::vector<Eigen::MatrixXd> weights;
    std::vector<Eigen::VectorXd> biases;
    Activation hidden_activation = Activation::Selu;

    int input_dim() const { return sizes.front(); }
    int output_dim() const { return sizes.back(); }
    std::size_t layer_count() const { return weights.size(); }
};

/// Total number of scalar parameters (weights + biases).
long mlp_parameter_count(const MlpParams& p);

/// LeCun-normal weights (stddev 1/sqrt(fan_in)), zero biases. Weight entries
/// are drawn row-major layer by layer so the stream layout is pinned.
MlpParams mlp_init(const std::vector<int>& layer_sizes, RandomStream& stream,
                   Activation hidden_activation = Activation::Selu);

/// Per-layer pre-activations and activations kept for the backward pass.
struct MlpCache {
    std::vector<Eigen::MatrixXd> pre;  // K x width, one per layer
    std::vector<Eigen::MatrixXd> act;  // act[0] is the input batch
};

/// Batched forward pass, one sample per row of `input` (K x input_dim).
Eigen::MatrixXd mlp_forward(const MlpParams& p, const Eigen::MatrixXd& input,
                            MlpCache* cache = nullptr);

/// Convenience single-sample forward.
Eigen::VectorXd mlp_forward(const MlpParams& p, const Eigen::VectorXd& input);

/// Gradients of every layer's weights and biases, same shapes as MlpParams.
struct MlpGradients {
    std::vector<Eigen::MatrixXd> weights;
    std::vector<Eigen::VectorXd> biases;
};

MlpGradients mlp_zero_gradients(const MlpParams& p);

/// Reverse pass. `output_grad` is dLoss/d(output), K x output_dim. Gradients
/// are ACCUMULATED into `grads` (siamese reuse sums both passes); the return
/// value is dLoss/d(input), K x input_dim.
Eigen::MatrixXd mlp_backward(const MlpParams& p, const MlpCache& cache,
                             const Eigen::MatrixXd& output_grad, MlpGradients& grads);

} // namespace smlab

#endif // SMLAB_MLP_HPP
