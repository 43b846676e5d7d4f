#pragma once

#include <cstddef>
#include <cstdint>
#include <span>
#include <string>
#include <vector>

namespace rfml::nn {

// Width of the batch-normalized feature layer. Class profiles are laid out
// against this width, so it is fixed.
inline constexpr std::size_t kFeatureWidth = 50;

struct ConvSpec {
    std::size_t filters = 0;
    std::size_t kernel = 0;
    std::size_t stride = 1;
    bool operator==(const ConvSpec&) const = default;
};

// Input 2 x input_length (I and Q channels)
//   -> [Conv -> BatchNorm -> tanh] per ConvSpec
//   -> flatten -> Dense(feature_width) -> BatchNorm -> tanh   (feature layer)
//   -> Dense(n_classes) -> softmax
// Convolutions use zero padding (kernel - 1) / 2 and have no bias; the
// following batch norm supplies the shift.
struct NetworkConfig {
    std::size_t input_length = 1024;
    std::vector<ConvSpec> conv{{16, 7, 2}, {32, 5, 2}};
    std::size_t feature_width = kFeatureWidth;
    std::vector<std::string> class_names;
    std::string activation = "tanh";
    double bn_epsilon = 1e-5;
    double bn_momentum = 0.9;

    std::size_t n_classes() const noexcept { return class_names.size(); }
    // Throws InvalidArgument on any inconsistency.
    void validate() const;
    bool operator==(const NetworkConfig&) const = default;
};

enum class Mode { Train, Inference };

struct TensorInfo {
    std::string name;
    std::size_t offset = 0;
    std::size_t size = 0;
};

struct ForwardOutput {
    std::size_t batch = 0;
    std::vector<double> logits;         // batch x n_classes
    std::vector<double> probabilities;  // batch x n_classes, rows sum to 1
    std::vector<double> features;       // batch x feature_width, in [-1, 1]
};

struct Workspace;

class Network {
public:
    // Uninitialized; every operation except initialized() throws.
    Network() = default;
    // Glorot-uniform weights from `seed`, unit BN gains, zero shifts,
    // running mean 0 and running variance 1.
    Network(NetworkConfig config, std::uint64_t seed);

    bool initialized() const noexcept { return !params_.empty(); }
    bool trained() const noexcept { return trained_; }
    void mark_trained() noexcept { trained_ = true; }

    const NetworkConfig& config() const;
    Mode mode() const noexcept { return mode_; }
    void set_mode(Mode mode) noexcept { mode_ = mode; }

    // Trainable parameters, flattened in layer order (see parameter_layout()).
    std::span<double> parameters() noexcept { return params_; }
    std::span<const double> parameters() const noexcept { return params_; }
    const std::vector<TensorInfo>& parameter_layout() const noexcept { return param_layout_; }

    // Batch-norm running mean and variance, per BN layer in order.
    std::span<double> running_stats() noexcept { return stats_; }
    std::span<const double> running_stats() const noexcept { return stats_; }
    const std::vector<TensorInfo>& running_stats_layout() const noexcept { return stats_layout_; }

    std::size_t input_size() const;  // 2 * input_length

    // `input` holds batch x 2 x input_length values. Uses running statistics in
    // Mode::Inference and batch statistics in Mode::Train; never updates either.
    ForwardOutput forward(std::span<const double> input, std::size_t batch) const;
    ForwardOutput forward(std::span<const double> input, std::size_t batch, Mode mode) const;

    // Mean cross-entropy of a train-mode forward pass.
    double loss(std::span<const double> input, std::span<const int> labels) const;

    // Train-mode loss and its gradient with respect to parameters() (written to
    // `grad`). When `batch_stats` is non-null it receives each BN layer's batch
    // mean and biased variance in running_stats() layout.
    double loss_and_gradient(std::span<const double> input, std::span<const int> labels, std::span<double> grad,
                             std::vector<double>* batch_stats = nullptr) const;

    // running = momentum * running + (1 - momentum) * batch, with the batch
    // variance converted to its unbiased form using the normalization count.
    void update_running_stats(std::span<const double> batch_stats, std::size_t batch);

private:
    void require_initialized() const;
    void forward_impl(std::span<const double> input, std::size_t batch, Mode mode, Workspace& ws) const;

    NetworkConfig config_;
    std::vector<double> params_;
    std::vector<double> stats_;
    std::vector<TensorInfo> param_layout_;
    std::vector<TensorInfo> stats_layout_;
    Mode mode_ = Mode::Inference;
    bool trained_ = false;
};

struct GradCheckResult {
    double max_relative_error = 0.0;
    double max_abs_gradient = 0.0;
    std::size_t checked = 0;
    std::string worst_tensor;
};

// Compares loss_and_gradient against central differences extrapolated with
// Ridders' method (initial step eps, shrinking by 1.4 over 28 steps) for up to
// `per_tensor` parameters sampled from every tensor. Relative error is
// |analytic - numeric| / max(|analytic|, |numeric|, 1e-7).
GradCheckResult grad_check(const Network& net, std::span<const double> input, std::span<const int> labels,
                           double eps = 1e-2, std::size_t per_tensor = 12, std::uint64_t seed = 0);

}  // namespace rfml::nn
