#pragma once

#include <cstdint>
#include <filesystem>
#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "rfml/eval/metrics.hpp"
#include "rfml/nn/train.hpp"
#include "rfml/pipeline/config.hpp"
#include "rfml/pipeline/features.hpp"
#include "rfml/tgda/profile.hpp"

namespace rfml::pipeline {

using Logger = std::function<void(const std::string&)>;

// Groups feature rows by (class, conditioning attributes) and fits one
// profile per group, in class-table order then ascending attribute values.
// `classes` restricts which classes are fit (empty: all).
std::vector<tgda::ClassProfile> fit_profiles(const FeatureSet& features, const std::vector<std::string>& condition_on,
                                             const std::vector<std::string>& classes = {},
                                             const tgda::FitOptions& options = {});

std::string profile_file_name(const tgda::ClassProfile& profile);

// Writes each profile into dir and a manifest listing `existing` paths first,
// then the new ones. Returns the manifest path.
std::filesystem::path write_profile_set(const std::vector<tgda::ClassProfile>& profiles,
                                        const std::filesystem::path& dir, const std::filesystem::path& manifest,
                                        const std::vector<std::filesystem::path>& existing = {},
                                        const tgda::ScoringOptions& options = {});

struct Prediction {
    std::string truth;
    std::string predicted;
    double true_snr_db = 0.0;
    int true_sps = 0;
    std::optional<double> predicted_snr_db;
    std::optional<int> predicted_sps;
    double loglik = 0.0;
    bool operator==(const Prediction&) const = default;
};

struct Predictions {
    std::vector<std::string> labels;  // distinct profile labels, in set order
    std::vector<Prediction> rows;
    bool operator==(const Predictions&) const = default;
};

// Classifies every row: plain argmax for unconditioned sets, joint argmax
// over (class, attributes) otherwise. Row classes must appear among the
// profile labels.
Predictions classify_features(const tgda::ProfileSet& profiles, const FeatureSet& features);

void write_predictions(const Predictions& predictions, const std::filesystem::path& path);
Predictions read_predictions(const std::filesystem::path& path);

struct EvalOptions {
    double f1_grid_bin_db = 5.0;
    double snr_tolerance_db = 5.0;
    std::vector<double> snr_bins;  // true SNRs are snapped to these for accuracy rows
};

eval::MetricsReport evaluate_predictions(const Predictions& predictions, const EvalOptions& options,
                                         const eval::ReportProvenance& provenance = {});

// Network-only baseline on a dataset whose classes the network knows.
eval::MetricsReport evaluate_network(const nn::Network& net, const synth::Dataset& dataset,
                                     double f1_grid_bin_db = 5.0, const eval::ReportProvenance& provenance = {});

struct RunSummary {
    std::string config_hash;
    std::uint64_t seed = 0;
    std::vector<std::string> stages;  // in execution order
    std::vector<std::filesystem::path> artifacts;
    bool trained = false;
    eval::MetricsReport report;
    std::optional<eval::MetricsReport> network_report;
};

// Stage runner over one config and output directory. Artifacts:
//   <stage>.snip, network.tgnn, <stage>.tgfe, profiles/, profiles.manifest,
//   predictions.csv, report_*.csv/.dat, network_report_*.csv, run.json
class Experiment {
public:
    // With `reuse`, artifacts already in out_dir are loaded instead of
    // rebuilt, provided its run.json carries the same config hash.
    Experiment(ExperimentConfig config, std::filesystem::path out_dir, Logger log = {}, bool reuse = false);

    const ExperimentConfig& config() const noexcept { return config_; }
    const std::filesystem::path& out_dir() const noexcept { return out_dir_; }
    std::uint64_t hash() const noexcept { return hash_; }

    std::filesystem::path dataset_path(Stage stage) const;
    std::filesystem::path features_path(Stage stage) const;
    std::filesystem::path network_path() const;
    std::filesystem::path manifest_path() const;
    std::filesystem::path predictions_path() const;

    std::filesystem::path generate(Stage stage);
    // Loads configured weights, or trains when none are configured.
    nn::Network network();
    std::filesystem::path train();
    std::filesystem::path extract(Stage stage);
    std::filesystem::path fit();
    std::filesystem::path classify();
    eval::MetricsReport evaluate();

    RunSummary run_all();

    const std::vector<std::string>& executed() const noexcept { return executed_; }
    bool trained() const noexcept { return trained_; }
    // Writes run.json (config hash, seed, stages, artifacts).
    void write_run_manifest() const;

private:
    void note(const std::string& stage, const std::filesystem::path& artifact);
    void log(const std::string& msg) const;
    const synth::Dataset& dataset(Stage stage);
    const FeatureSet& features(Stage stage);

    ExperimentConfig config_;
    std::filesystem::path out_dir_;
    Logger log_;
    std::uint64_t hash_ = 0;
    std::vector<std::string> executed_;
    std::vector<std::filesystem::path> artifacts_;
    bool trained_ = false;
    bool reuse_ = false;
    bool fitted_ = false;
    bool classified_ = false;
    std::optional<nn::Network> network_;
    std::optional<synth::Dataset> datasets_[3];
    std::optional<FeatureSet> features_[3];
    std::optional<eval::MetricsReport> network_report_;
};

}  // namespace rfml::pipeline
