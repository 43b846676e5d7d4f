#pragma once

#include <cstdint>
#include <filesystem>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "rfml/nn/network.hpp"
#include "rfml/nn/train.hpp"
#include "rfml/synth/dataset.hpp"

namespace rfml::pipeline {

inline constexpr int kSchemaVersion = 1;

// Snippet population for one stage (training, profile fitting, testing).
struct DataSpec {
    std::vector<std::string> classes;
    std::size_t count_per_cell = 0;  // per (class, sps, SNR cell)
    std::string snr = "uniform(0, 20)";
    std::vector<int> sps{4};
};

struct NetworkSection {
    std::optional<std::filesystem::path> weights;  // load instead of training
    std::vector<nn::ConvSpec> conv{{16, 7, 2}, {32, 5, 2}};
    DataSpec data;                                  // training set (ignored with weights)
    nn::TrainConfig train;                          // seed is derived from the experiment seed
};

struct ProfileSection {
    DataSpec data;
    std::vector<std::string> condition_on;  // subset of {"snr_db", "sps"}
};

struct EvaluationSection {
    DataSpec data;
    double f1_grid_bin_db = 5.0;  // SNR bin width of the F1 grid for continuous SNRs
    double snr_tolerance_db = 5.0;
};

struct ExperimentConfig {
    int schema_version = kSchemaVersion;
    std::string name = "experiment";
    std::uint64_t seed = 0;
    std::size_t snippet_length = 1024;
    std::map<std::string, std::filesystem::path> constellations;  // custom class name -> file
    NetworkSection network;
    ProfileSection profiles;
    EvaluationSection evaluation;
    std::filesystem::path base_dir;  // directory relative paths resolve against; not serialized

    // Throws ConfigError on inconsistencies (unknown classes, bad SNR policy, ...).
    void validate() const;
};

// Parses JSON text. Unknown keys, wrong types and unsupported schema
// versions raise ConfigError.
ExperimentConfig parse_config(const std::string& json_text, const std::filesystem::path& base_dir = {});
// Reads a config file (IoError if it cannot be read).
ExperimentConfig load_config(const std::filesystem::path& path);
// Canonical JSON with every field explicit and keys sorted.
std::string canonical_json(const ExperimentConfig& config);
// FNV-1a 64 of canonical_json.
std::uint64_t config_hash(const ExperimentConfig& config);
std::string hash_hex(std::uint64_t hash);
std::uint64_t fnv1a64(std::string_view bytes) noexcept;

// Resolves a class name to its generator (builtin or custom constellation).
synth::ModClass resolve_class(const ExperimentConfig& config, const std::string& name);

// Dataset generation config for a stage; `stream` separates the seeds of
// training, fitting and test data.
synth::DatasetConfig dataset_config(const ExperimentConfig& config, const DataSpec& data, std::uint64_t stream);

nn::NetworkConfig network_config(const ExperimentConfig& config);
nn::TrainConfig train_config(const ExperimentConfig& config);

enum class Stage : std::uint64_t { Train = 1, Fit = 2, Test = 3 };
const DataSpec& stage_data(const ExperimentConfig& config, Stage stage);
std::string stage_name(Stage stage);
Stage parse_stage(const std::string& name);

}  // namespace rfml::pipeline
