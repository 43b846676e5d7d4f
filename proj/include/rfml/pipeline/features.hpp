#pragma once

#include <cstddef>
#include <cstdint>
#include <filesystem>
#include <string>
#include <vector>

#include "rfml/nn/network.hpp"
#include "rfml/synth/dataset.hpp"

namespace rfml::pipeline {

// Feature vectors of a dataset together with the per-row labels and
// conditions they came from.
struct FeatureSet {
    std::vector<std::string> class_names;  // dataset class table
    std::vector<std::uint16_t> labels;     // index into class_names
    std::vector<std::uint8_t> sps;
    std::vector<float> snr_db;
    std::vector<double> values;  // rows x 50, row-major
    std::uint64_t config_hash = 0;
    std::uint64_t seed = 0;

    std::size_t rows() const noexcept { return labels.size(); }
    bool operator==(const FeatureSet&) const = default;
};

FeatureSet extract_feature_set(const nn::Network& net, const synth::Dataset& dataset, std::uint64_t config_hash = 0,
                               std::uint64_t seed = 0);

// "TGFE": magic, u16 version, u16 width (50), u64 config hash, u64 seed,
// u16 class count + names, u64 rows, then per row u16 label, u8 sps,
// f32 snr_db and 50 f64 values.
void write_features(const FeatureSet& features, const std::filesystem::path& path);
FeatureSet read_features(const std::filesystem::path& path);

}  // namespace rfml::pipeline
