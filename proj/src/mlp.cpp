#include "smlab/mlp.hpp"

#include "smlab/error.hpp"

namespace smlab {

std::string activation_name(Activation a) {
    return a == Activation::Selu ? "selu" : "relu";
}

Activation activation_from_name(const std::string& name) {
    if (name == "selu") return Activation::Selu;
    if (name == "relu") return Activation::Relu;
    throw ArgumentError("unknown activation: " + name);
}

long mlp_parameter_count(const MlpParams& p) {
    long total = 0;
    for (std::size_t l = 0; l < p.weights.size(); ++l)
        total += p.weights[l].size() + p.biases[l].size();
    return total;
}

MlpParams mlp_init(const std::vector<int>& layer_sizes, RandomStream& stream,
                   Activation hidden_activation) {
    if (layer_sizes.size() < 2) throw ArgumentError("mlp_init: need at least 2 layer sizes");
    for (int s : layer_sizes)
        if (s <= 0) throw ArgumentError("mlp_init: layer sizes must be positive");

    MlpParams p;
    p.sizes = layer_sizes;
    p.hidden_activation = hidden_activation;
    for (std::size_t l = 0; l + 1 < layer_sizes.size(); ++l) {
        const int fan_in = layer_sizes[l];
        const int fan_out = layer_sizes[l + 1];
        const double stddev = 1.0 / std::sqrt(static_cast<double>(fan_in));
        Eigen::MatrixXd w(fan_out, fan_in);
        for (int r = 0; r < fan_out; ++r)
            for (int c = 0; c < fan_in; ++c)
                w(r, c) = stddev * stream.gaussian();
        p.weights.push_back(std::move(w));
        p.biases.push_back(Eigen::VectorXd::Zero(fan_out));
    }
    return p;
}

namespace {

void apply_activation(Activation act, const Eigen::MatrixXd& pre, Eigen::MatrixXd& out) {
    if (act == Activation::Selu) {
        // exp only on the non-positive side to avoid spurious overflow
        Eigen::ArrayXXd e = pre.array().min(0.0).exp();
        out = (pre.array() > 0.0)
                  .select(kSeluLambda * pre.array(),
                          kSeluLambda * kSeluAlpha * (e - 1.0));
    } else {
        out = pre.array().max(0.0);
    }
}

// derivative from the cached pre-activation and activation values
Eigen::ArrayXXd activation_derivative(Activation act, const Eigen::MatrixXd& pre,
                                      const Eigen::MatrixXd& post) {
    if (act == Activation::Selu) {
        // for x <= 0: d/dx = lambda*alpha*e^x = post + lambda*alpha
        return (pre.array() > 0.0)
            .select(Eigen::ArrayXXd::Constant(pre.rows(), pre.cols(), kSeluLambda),
                    post.array() + kSeluLambda * kSeluAlpha);
    }
    return (pre.array() > 0.0)
        .select(Eigen::ArrayXXd::Constant(pre.rows(), pre.cols(), 1.0),
                Eigen::ArrayXXd::Zero(pre.rows(), pre.cols()));
}

} // namespace

Eigen::MatrixXd mlp_forward(const MlpParams& p, const Eigen::MatrixXd& input,
                            MlpCache* cache) {
    if (input.cols() != p.input_dim())
        throw ArgumentError("mlp_forward: input width " + std::to_string(input.cols()) +
                            " != expected " + std::to_string(p.input_dim()));
    if (cache) {
        cache->pre.assign(p.layer_count(), {});
        cache->act.assign(p.layer_count() + 1, {});
        cache->act[0] = input;
    }

    Eigen::MatrixXd a = input;
    for (std::size_t l = 0; l < p.layer_count(); ++l) {
        Eigen::MatrixXd z(a.rows(), p.weights[l].rows());
        z.noalias() = a * p.weights[l].transpose();
        z.rowwise() += p.biases[l].transpose();
        const bool last = (l + 1 == p.layer_count());
        if (last) {
            a = z; // linear output layer
        } else {
            apply_activation(p.hidden_activation, z, a);
        }
        if (cache) {
            cache->pre[l] = std::move(z);
            cache->act[l + 1] = a;
        }
    }
    return a;
}

Eigen::VectorXd mlp_forward(const MlpParams& p, const Eigen::VectorXd& input) {
    return mlp_forward(p, Eigen::MatrixXd(input.transpose()), nullptr).row(0).transpose();
}

MlpGradients mlp_zero_gradients(const MlpParams& p) {
    MlpGradients g;
    for (std::size_t l = 0; l < p.layer_count(); ++l) {
        g.weights.push_back(Eigen::MatrixXd::Zero(p.weights[l].rows(), p.weights[l].cols()));
        g.biases.push_back(Eigen::VectorXd::Zero(p.biases[l].size()));
    }
    return g;
}

Eigen::MatrixXd mlp_backward(const MlpParams& p, const MlpCache& cache,
                             const Eigen::MatrixXd& output_grad, MlpGradients& grads) {
    if (cache.pre.size() != p.layer_count())
        throw ArgumentError("mlp_backward: cache does not match network depth");

    Eigen::MatrixXd delta = output_grad; // dLoss/dZ of the linear output layer
    for (std::size_t l = p.layer_count(); l-- > 0;) {
        if (l + 1 != p.layer_count()) {
            delta.array() *=
                activation_derivative(p.hidden_activation, cache.pre[l], cache.act[l + 1]);
        }
        grads.weights[l].noalias() += delta.transpose() * cache.act[l];
        grads.biases[l] += delta.colwise().sum().transpose();
        if (l > 0) {
            Eigen::MatrixXd prev(delta.rows(), p.weights[l].cols());
            prev.noalias() = delta * p.weights[l];
            delta = std::move(prev);
        }
    }
    // dLoss/d(input)
    Eigen::MatrixXd input_grad(output_grad.rows(), p.input_dim());
    // delta currently holds dLoss/dZ of layer 0
    input_grad.noalias() = delta * p.weights[0];
    return input_grad;
}

} // namespace smlab
