#pragma once

#include <cstddef>
#include <cstdint>
#include <filesystem>
#include <span>
#include <string>
#include <vector>

namespace rfml::eval {

// counts[true][predicted] over an ordered label list.
class ConfusionMatrix {
public:
    ConfusionMatrix() = default;
    explicit ConfusionMatrix(std::vector<std::string> labels);

    const std::vector<std::string>& labels() const noexcept { return labels_; }
    std::size_t size() const noexcept { return labels_.size(); }
    std::uint64_t at(std::size_t truth, std::size_t predicted) const;
    void add(std::size_t truth, std::size_t predicted, std::uint64_t count = 1);
    std::size_t index_of(const std::string& label) const;  // throws on unknown labels

    std::uint64_t row_sum(std::size_t truth) const;
    std::uint64_t col_sum(std::size_t predicted) const;
    std::uint64_t total() const;

    bool operator==(const ConfusionMatrix&) const = default;

private:
    std::vector<std::string> labels_;
    std::vector<std::uint64_t> counts_;
};

ConfusionMatrix confusion(std::span<const std::string> predictions, std::span<const std::string> truths,
                          std::vector<std::string> label_order);
ConfusionMatrix confusion(std::span<const std::size_t> predictions, std::span<const std::size_t> truths,
                          std::vector<std::string> label_order);

// Zero denominators give 0.
double precision(const ConfusionMatrix& cm, std::size_t cls);
double recall(const ConfusionMatrix& cm, std::size_t cls);
double f1(const ConfusionMatrix& cm, std::size_t cls);
double macro_precision(const ConfusionMatrix& cm);
double macro_recall(const ConfusionMatrix& cm);
double macro_f1(const ConfusionMatrix& cm);
double accuracy(const ConfusionMatrix& cm);

// Fraction of pairs with |pred - truth| <= within_db. Empty input gives 0.
double snr_accuracy(std::span<const double> predicted, std::span<const double> truth, double within_db);

struct ClassMetrics {
    std::string label;
    double precision = 0.0;
    double recall = 0.0;
    double f1 = 0.0;
    std::uint64_t support = 0;
    bool operator==(const ClassMetrics&) const = default;
};

struct GridCell {
    double snr_db = 0.0;
    std::string label;
    double f1 = 0.0;
    bool operator==(const GridCell&) const = default;
};

// Attribute estimation accuracy for one (class, true attribute value) cell.
struct AccuracyRow {
    std::string attribute;  // "snr_db" or "sps"
    std::string label;
    double true_value = 0.0;
    std::uint64_t count = 0;
    double exact = 0.0;
    double within = 0.0;
    double tolerance = 0.0;
    bool operator==(const AccuracyRow&) const = default;
};

struct ReportProvenance {
    std::string config_hash;
    std::uint64_t seed = 0;
    bool operator==(const ReportProvenance&) const = default;
};

struct MetricsReport {
    ConfusionMatrix confusion;
    std::vector<ClassMetrics> classes;
    double macro_precision = 0.0;
    double macro_recall = 0.0;
    double macro_f1 = 0.0;
    std::vector<GridCell> f1_grid;
    std::vector<AccuracyRow> attr_accuracy;
    ReportProvenance provenance;
    bool operator==(const MetricsReport&) const = default;
};

// Fills per-class and macro metrics from a confusion matrix.
MetricsReport make_report(ConfusionMatrix cm, ReportProvenance provenance = {});

// Per-(SNR bin, class) F1: one confusion matrix per distinct bin value,
// bins in ascending order, classes in label order.
std::vector<GridCell> f1_grid(std::span<const std::size_t> predictions, std::span<const std::size_t> truths,
                              std::span<const double> snr_bins, const std::vector<std::string>& labels);

// Accuracy of an estimated attribute per (class, true value) cell.
std::vector<AccuracyRow> attribute_accuracy(const std::string& attribute, std::span<const std::size_t> truths,
                                            std::span<const double> predicted, std::span<const double> actual,
                                            const std::vector<std::string>& labels, double tolerance);

// Rounds to the 6 significant digits used by the text outputs.
double round_sig6(double v);
std::string format_sig6(double v);
MetricsReport rounded(const MetricsReport& report);

enum class ReportFormat { Csv, PlotData, All };

// Writes <prefix>_metrics.csv, _confusion.csv, _f1_grid.csv, _accuracy.csv,
// _provenance.csv (Csv) and <prefix>_f1_grid.dat (PlotData) into dir.
std::vector<std::filesystem::path> report_emit(const MetricsReport& report, const std::filesystem::path& dir,
                                               const std::string& prefix = "report",
                                               ReportFormat format = ReportFormat::All);

// Parses the CSV files written by report_emit.
MetricsReport report_parse(const std::filesystem::path& dir, const std::string& prefix = "report");

}  // namespace rfml::eval
