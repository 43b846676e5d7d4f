#pragma once

#include <complex>
#include <cstddef>
#include <cstdint>
#include <filesystem>
#include <limits>
#include <string>
#include <string_view>
#include <vector>

#include "rfml/synth/modulation.hpp"

namespace rfml::synth {

inline constexpr double kNoNoise = std::numeric_limits<double>::infinity();

struct SnippetSpec {
    ModClass mod;
    double snr_db = kNoNoise;
    int sps = 4;
    std::size_t length = 1024;
    std::uint64_t seed = 0;
};

struct Snippet {
    std::vector<std::complex<float>> iq;
    SnippetSpec spec;
};

// Throws InvalidArgument unless sps >= 1, length >= sps * kRrcSpanSymbols and
// snr_db is finite or +inf.
void validate(const SnippetSpec& spec);

// bits -> (Gray mapping + RRC shaping) or CPM -> centre `length` samples -> AWGN.
// Bits use derive_seed(spec.seed, 1, 0), noise uses derive_seed(spec.seed, 2, 0).
Snippet synthesize_snippet(const SnippetSpec& spec);

// SNR assignment: `uniform(lo, hi)` draws a continuous SNR per snippet;
// `fixed(b0, b1, ...)` produces count_per_cell snippets at each bin.
class SnrPolicy {
public:
    enum class Kind { Uniform, Fixed };

    static SnrPolicy uniform(double lo, double hi);
    static SnrPolicy fixed(std::vector<double> bins);
    // Parses "uniform(0, 20)" or "fixed(0, 5, 10)".
    static SnrPolicy parse(std::string_view text);

    Kind kind() const noexcept { return kind_; }
    double lo() const noexcept { return lo_; }
    double hi() const noexcept { return hi_; }
    const std::vector<double>& bins() const noexcept { return bins_; }
    std::size_t cells() const noexcept { return kind_ == Kind::Uniform ? 1 : bins_.size(); }
    std::string to_string() const;

private:
    Kind kind_ = Kind::Uniform;
    double lo_ = 0.0;
    double hi_ = 20.0;
    std::vector<double> bins_;
};

struct DatasetConfig {
    std::vector<ModClass> classes;
    std::size_t count_per_cell = 0;  // snippets per (class, sps, snr cell)
    SnrPolicy snr = SnrPolicy::uniform(0.0, 20.0);
    std::vector<int> sps{4};
    std::size_t length = 1024;
    std::uint64_t seed = 0;
};

struct ClassEntry {
    ModKind kind;
    std::string name;
    bool operator==(const ClassEntry&) const = default;
};

struct DatasetHeader {
    std::uint16_t version = 1;
    std::vector<ClassEntry> classes;
    std::uint64_t snippet_count = 0;
    std::uint32_t snippet_length = 0;
    std::uint64_t master_seed = 0;
    bool operator==(const DatasetHeader&) const = default;
};

struct SnippetRecord {
    std::uint8_t label = 0;  // index into DatasetHeader::classes
    std::uint8_t sps = 0;
    float snr_db = 0.0f;
    std::vector<std::complex<float>> iq;
    bool operator==(const SnippetRecord&) const = default;
};

struct Dataset {
    DatasetHeader header;
    std::vector<SnippetRecord> snippets;

    const std::string& class_name(std::size_t i) const { return header.classes.at(snippets.at(i).label).name; }
};

DatasetHeader make_header(const DatasetConfig& config);

// Snippet g (in class-major, then sps, then SNR-cell order) uses
// derive_seed(config.seed, kSnippetStream, g). Snippets are synthesized in
// parallel; output is independent of the thread count.
Dataset synthesize(const DatasetConfig& config);

// Streams the dataset to `path` in chunks and returns its header.
DatasetHeader synthesize_dataset(const DatasetConfig& config, const std::filesystem::path& path);

void write_dataset(const Dataset& dataset, const std::filesystem::path& path);
Dataset read_dataset(const std::filesystem::path& path);
DatasetHeader read_dataset_header(const std::filesystem::path& path);

inline constexpr std::uint64_t kSnippetStream = 0x534e4950;  // "SNIP"

}  // namespace rfml::synth
