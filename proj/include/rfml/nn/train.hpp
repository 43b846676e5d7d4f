#pragma once

#include <cstddef>
#include <cstdint>
#include <filesystem>
#include <functional>
#include <span>
#include <vector>

#include "rfml/nn/network.hpp"
#include "rfml/synth/dataset.hpp"

namespace rfml::nn {

// Adam with early stopping on validation loss.
struct TrainConfig {
    double learning_rate = 1e-3;
    double beta1 = 0.9;
    double beta2 = 0.999;
    double adam_epsilon = 1e-8;
    std::size_t batch_size = 64;
    std::size_t max_epochs = 30;
    std::size_t patience = 5;
    std::uint64_t seed = 0;
    double validation_fraction = 0.1;

    void validate() const;
};

struct EpochStats {
    std::size_t epoch = 0;  // 1-based
    double train_loss = 0.0;
    double validation_loss = 0.0;
    double validation_accuracy = 0.0;
};

struct TrainResult {
    Network network;  // snapshot with the lowest validation loss, inference mode
    std::vector<EpochStats> history;
    std::size_t best_epoch = 0;
};

// Copies snippet I/Q into the network's [2][length] input layout.
void pack_input(const synth::SnippetRecord& snippet, std::span<double> dst);

// Maps each dataset class to its network output index; throws if a dataset
// class is unknown to the network.
std::vector<int> label_map(const NetworkConfig& config, const synth::DatasetHeader& header);

// Trains a fresh network (initialized from tc.seed). Deterministic given the
// dataset and configs. Throws if any network class has no training snippets.
TrainResult train(const NetworkConfig& config, const TrainConfig& tc, const synth::Dataset& dataset,
                  const std::function<void(const EpochStats&)>& on_epoch = {});

// Inference-mode feature vectors, dataset.snippets.size() x kFeatureWidth,
// row-major. Results do not depend on batch_size. Throws on an untrained network.
std::vector<double> extract_features(const Network& net, const synth::Dataset& dataset, std::size_t batch_size = 128);
std::vector<double> extract_features(const Network& net, std::span<const double> input, std::size_t batch);

// Argmax network class per snippet.
std::vector<int> predict(const Network& net, const synth::Dataset& dataset, std::size_t batch_size = 128);

struct Provenance {
    std::uint64_t config_hash = 0;
    std::uint64_t seed = 0;
    bool operator==(const Provenance&) const = default;
};

// "TGNN" weight file: version, config block, provenance, trained flag, then
// parameters and running statistics as little-endian f64 in layout order.
void save(const Network& net, const std::filesystem::path& path, const Provenance& provenance = {});
Network load(const std::filesystem::path& path, Provenance* provenance = nullptr);

}  // namespace rfml::nn
