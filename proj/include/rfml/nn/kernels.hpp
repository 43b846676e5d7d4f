#pragma once

#include <cstddef>
#include <span>

// Dense numeric kernels for the 1-D convolutional network.
//
// Layouts are row-major: activations [batch][channel][position], conv filters
// [out][in][tap], dense weights [out][in]. `reference` holds the naive loops
// used as the test oracle and benchmark baseline. `parallel` holds the
// OpenMP versions the network runs; each output element is owned by exactly
// one thread and summed in a fixed order, so results are identical for any
// thread count.
namespace rfml::nn::kernels {

struct ConvShape {
    std::size_t batch;
    std::size_t in_channels;
    std::size_t in_length;
    std::size_t out_channels;
    std::size_t kernel;
    std::size_t stride;
    std::size_t pad;

    // Zero padding of `pad` on both sides.
    std::size_t out_length() const noexcept { return (in_length + 2 * pad - kernel) / stride + 1; }
    std::size_t col_rows() const noexcept { return in_channels * kernel; }
};

struct DenseShape {
    std::size_t batch;
    std::size_t in;
    std::size_t out;
};

// Batch normalization statistics are taken per channel over (batch, length).
// Dense layers use length = 1.
struct NormShape {
    std::size_t batch;
    std::size_t channels;
    std::size_t length;
};

namespace reference {

void conv1d_forward(const ConvShape& s, std::span<const double> x, std::span<const double> w, std::span<double> y);
void conv1d_backward_data(const ConvShape& s, std::span<const double> dy, std::span<const double> w,
                          std::span<double> dx);
void conv1d_backward_filter(const ConvShape& s, std::span<const double> x, std::span<const double> dy,
                            std::span<double> dw);

// `bias` may be empty.
void dense_forward(const DenseShape& s, std::span<const double> x, std::span<const double> w,
                   std::span<const double> bias, std::span<double> y);
void dense_backward_data(const DenseShape& s, std::span<const double> dy, std::span<const double> w,
                         std::span<double> dx);
// `dbias` may be empty.
void dense_backward_params(const DenseShape& s, std::span<const double> x, std::span<const double> dy,
                           std::span<double> dw, std::span<double> dbias);

// Training-mode normalization. Writes y, the normalized xhat, and per-channel
// batch mean, biased variance and 1/sqrt(var + eps).
void batchnorm_forward_train(const NormShape& s, std::span<const double> x, std::span<const double> gamma,
                             std::span<const double> beta, double eps, std::span<double> y,
                             std::span<double> xhat, std::span<double> mean, std::span<double> var,
                             std::span<double> inv_std);
void batchnorm_forward_infer(const NormShape& s, std::span<const double> x, std::span<const double> gamma,
                             std::span<const double> beta, std::span<const double> running_mean,
                             std::span<const double> running_var, double eps, std::span<double> y);
void batchnorm_backward(const NormShape& s, std::span<const double> dy, std::span<const double> xhat,
                        std::span<const double> gamma, std::span<const double> inv_std, std::span<double> dx,
                        std::span<double> dgamma, std::span<double> dbeta);

}  // namespace reference

namespace parallel {

// Unfolds x into col[batch][in*kernel][out_length] so every tap is a contiguous row.
void im2col(const ConvShape& s, std::span<const double> x, std::span<double> col);
void conv1d_forward_col(const ConvShape& s, std::span<const double> col, std::span<const double> w,
                        std::span<double> y);
void conv1d_forward(const ConvShape& s, std::span<const double> x, std::span<const double> w, std::span<double> y);
void conv1d_backward_data(const ConvShape& s, std::span<const double> dy, std::span<const double> w,
                          std::span<double> dx);
void conv1d_backward_filter_col(const ConvShape& s, std::span<const double> col, std::span<const double> dy,
                                std::span<double> dw);

void dense_forward(const DenseShape& s, std::span<const double> x, std::span<const double> w,
                   std::span<const double> bias, std::span<double> y);
void dense_backward_data(const DenseShape& s, std::span<const double> dy, std::span<const double> w,
                         std::span<double> dx);
void dense_backward_params(const DenseShape& s, std::span<const double> x, std::span<const double> dy,
                           std::span<double> dw, std::span<double> dbias);

void batchnorm_forward_train(const NormShape& s, std::span<const double> x, std::span<const double> gamma,
                             std::span<const double> beta, double eps, std::span<double> y,
                             std::span<double> xhat, std::span<double> mean, std::span<double> var,
                             std::span<double> inv_std);
void batchnorm_forward_infer(const NormShape& s, std::span<const double> x, std::span<const double> gamma,
                             std::span<const double> beta, std::span<const double> running_mean,
                             std::span<const double> running_var, double eps, std::span<double> y);
void batchnorm_backward(const NormShape& s, std::span<const double> dy, std::span<const double> xhat,
                        std::span<const double> gamma, std::span<const double> inv_std, std::span<double> dx,
                        std::span<double> dgamma, std::span<double> dbeta);

void tanh_forward(std::span<const double> x, std::span<double> y);
// dx = dy * (1 - y^2)
void tanh_backward(std::span<const double> y, std::span<const double> dy, std::span<double> dx);

}  // namespace parallel

// Number of OpenMP threads the parallel kernels will use (1 without OpenMP).
int max_threads() noexcept;
void set_threads(int n) noexcept;

}  // namespace rfml::nn::kernels
