#include <benchmark/benchmark.h>

#include <vector>

#include "rfml/nn/kernels.hpp"
#include "rfml/rng.hpp"
#include "rfml/tgda/classify.hpp"

namespace {

using namespace rfml;
namespace k = rfml::nn::kernels;

std::vector<double> random_vec(std::size_t n, std::uint64_t seed)
{
    CounterRng rng(seed);
    std::vector<double> v(n);
    for (auto& x : v) {
        x = rng.normal();
    }
    return v;
}

// First conv layer of the default network on a batch of 64.
k::ConvShape conv_shape() { return {64, 2, 1024, 16, 7, 2, 3}; }
k::DenseShape dense_shape() { return {64, 32 * 256, 50}; }
k::NormShape norm_shape() { return {64, 16, 512}; }

void BM_ConvForwardReference(benchmark::State& state)
{
    const auto s = conv_shape();
    const auto x = random_vec(s.batch * s.in_channels * s.in_length, 1);
    const auto w = random_vec(s.out_channels * s.col_rows(), 2);
    std::vector<double> y(s.batch * s.out_channels * s.out_length());
    for (auto _ : state) {
        k::reference::conv1d_forward(s, x, w, y);
        benchmark::DoNotOptimize(y.data());
    }
}

void BM_ConvForwardParallel(benchmark::State& state)
{
    k::set_threads(static_cast<int>(state.range(0)));
    const auto s = conv_shape();
    const auto x = random_vec(s.batch * s.in_channels * s.in_length, 1);
    const auto w = random_vec(s.out_channels * s.col_rows(), 2);
    std::vector<double> y(s.batch * s.out_channels * s.out_length());
    for (auto _ : state) {
        k::parallel::conv1d_forward(s, x, w, y);
        benchmark::DoNotOptimize(y.data());
    }
}

void BM_DenseForwardReference(benchmark::State& state)
{
    const auto s = dense_shape();
    const auto x = random_vec(s.batch * s.in, 3);
    const auto w = random_vec(s.out * s.in, 4);
    const auto b = random_vec(s.out, 5);
    std::vector<double> y(s.batch * s.out);
    for (auto _ : state) {
        k::reference::dense_forward(s, x, w, b, y);
        benchmark::DoNotOptimize(y.data());
    }
}

void BM_DenseForwardParallel(benchmark::State& state)
{
    k::set_threads(static_cast<int>(state.range(0)));
    const auto s = dense_shape();
    const auto x = random_vec(s.batch * s.in, 3);
    const auto w = random_vec(s.out * s.in, 4);
    const auto b = random_vec(s.out, 5);
    std::vector<double> y(s.batch * s.out);
    for (auto _ : state) {
        k::parallel::dense_forward(s, x, w, b, y);
        benchmark::DoNotOptimize(y.data());
    }
}

struct NormBuffers {
    explicit NormBuffers(const k::NormShape& s)
        : x(random_vec(s.batch * s.channels * s.length, 6)),
          gamma(s.channels, 1.0),
          beta(s.channels, 0.0),
          y(x.size()),
          xhat(x.size()),
          mean(s.channels),
          var(s.channels),
          inv_std(s.channels)
    {
    }
    std::vector<double> x, gamma, beta, y, xhat, mean, var, inv_std;
};

void BM_BatchNormReference(benchmark::State& state)
{
    const auto s = norm_shape();
    NormBuffers b(s);
    for (auto _ : state) {
        k::reference::batchnorm_forward_train(s, b.x, b.gamma, b.beta, 1e-5, b.y, b.xhat, b.mean, b.var, b.inv_std);
        benchmark::DoNotOptimize(b.y.data());
    }
}

void BM_BatchNormParallel(benchmark::State& state)
{
    k::set_threads(static_cast<int>(state.range(0)));
    const auto s = norm_shape();
    NormBuffers b(s);
    for (auto _ : state) {
        k::parallel::batchnorm_forward_train(s, b.x, b.gamma, b.beta, 1e-5, b.y, b.xhat, b.mean, b.var, b.inv_std);
        benchmark::DoNotOptimize(b.y.data());
    }
}

tgda::ProfileSet random_profiles(std::size_t count)
{
    CounterRng rng(7);
    tgda::ProfileSet set;
    for (std::size_t c = 0; c < count; ++c) {
        tgda::ClassProfile p{"c" + std::to_string(c), {}, {}};
        for (auto& d : p.dists) {
            d.s = -1.0 + 0.2 * rng.normal();
            d.p = rng.uniform() < 0.3 ? 0.2 * rng.uniform() : 0.0;
            d.loc = rng.normal();
            d.scale = 0.2 + rng.uniform();
        }
        set.add(std::move(p));
    }
    return set;
}

constexpr std::size_t kRows = 4000;

void BM_ClassifyReference(benchmark::State& state)
{
    const auto set = random_profiles(20);
    const auto x = random_vec(kRows * tgda::kProfileFeatures, 8);
    for (auto _ : state) {
        benchmark::DoNotOptimize(tgda::reference::classify_batch(set, x, kRows));
    }
}

void BM_ClassifyParallel(benchmark::State& state)
{
    k::set_threads(static_cast<int>(state.range(0)));
    const auto set = random_profiles(20);
    const auto x = random_vec(kRows * tgda::kProfileFeatures, 8);
    for (auto _ : state) {
        benchmark::DoNotOptimize(tgda::classify_batch(set, x, kRows));
    }
}

void thread_args(benchmark::internal::Benchmark* b)
{
    for (int t = 1; t <= k::max_threads(); t *= 2) {
        b->Arg(t);
    }
}

}  // namespace

BENCHMARK(BM_ConvForwardReference)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_ConvForwardParallel)->Apply(thread_args)->Unit(benchmark::kMillisecond)->UseRealTime();
BENCHMARK(BM_DenseForwardReference)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_DenseForwardParallel)->Apply(thread_args)->Unit(benchmark::kMillisecond)->UseRealTime();
BENCHMARK(BM_BatchNormReference)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_BatchNormParallel)->Apply(thread_args)->Unit(benchmark::kMillisecond)->UseRealTime();
BENCHMARK(BM_ClassifyReference)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_ClassifyParallel)->Apply(thread_args)->Unit(benchmark::kMillisecond)->UseRealTime();

BENCHMARK_MAIN();
