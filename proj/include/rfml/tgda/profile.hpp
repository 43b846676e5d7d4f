#pragma once

#include <array>
#include <cstddef>
#include <filesystem>
#include <map>
#include <span>
#include <string>
#include <vector>

#include "rfml/tgda/feature_dist.hpp"

namespace rfml::tgda {

inline constexpr std::size_t kProfileFeatures = 50;

// Conditioning attributes of a profile, e.g. {"snr_db": 10} or {"sps": 4}.
using Attributes = std::map<std::string, double>;

// One class (or class component): 50 feature laws, 200 parameters.
struct ClassProfile {
    std::string label;
    Attributes attrs;
    std::array<FeatureDist, kProfileFeatures> dists{};

    bool operator==(const ClassProfile&) const = default;
};

struct ProfileFitSummary {
    std::size_t spiked = 0;      // 0.01 <= p < 1
    std::size_t point_mass = 0;  // p = 1
    std::size_t fallbacks = 0;   // degenerate fallbacks (zero non-spike variance)
};

// Fits each of the 50 columns of a row-major n x 50 matrix independently.
ClassProfile fit_profile(std::span<const double> features, std::size_t rows, std::string label, Attributes attrs = {},
                         const FitOptions& options = {}, ProfileFitSummary* summary = nullptr);

// Ordered, immutable-after-build collection of profiles with unique
// (label, attrs) keys.
class ProfileSet {
public:
    ProfileSet() = default;
    explicit ProfileSet(ScoringOptions options) : options_(options) {}

    // Validates the profile and rejects duplicate (label, attrs) keys.
    void add(ClassProfile profile);

    const std::vector<ClassProfile>& profiles() const noexcept { return profiles_; }
    std::size_t size() const noexcept { return profiles_.size(); }
    bool empty() const noexcept { return profiles_.empty(); }
    const ClassProfile& operator[](std::size_t i) const { return profiles_.at(i); }
    const ScoringOptions& options() const noexcept { return options_; }

    // Distinct labels in first-appearance order.
    std::vector<std::string> labels() const;

private:
    std::vector<ClassProfile> profiles_;
    ScoringOptions options_{};
};

// "TGDA" profile file: magic, u16 version, label (u16 length + bytes),
// u16 attribute count + (key, f64) pairs, u16 feature count (50), then 50
// records of (s, p, loc, scale) as little-endian f64 (1600 bytes).
void profile_save(const ClassProfile& profile, const std::filesystem::path& path);
ClassProfile profile_load(const std::filesystem::path& path);
std::vector<char> profile_encode(const ClassProfile& profile);
ClassProfile profile_decode(std::vector<char> bytes, const std::string& source = "<memory>");

inline constexpr std::size_t kProfileBodyBytes = kProfileFeatures * 4 * sizeof(double);

// Manifest: '#' comments, an optional "[scoring]" section of "key = value"
// lines (spike_rel_tol, spike_threshold, log_floor), and profile paths one per
// line under "[profiles]" or before any section. Paths are stored relative to
// the manifest directory when possible.
void manifest_save(const std::filesystem::path& manifest, std::span<const std::filesystem::path> profile_paths,
                   const ScoringOptions& options = {});
ProfileSet manifest_load(const std::filesystem::path& manifest);
std::vector<std::filesystem::path> manifest_paths(const std::filesystem::path& manifest);

}  // namespace rfml::tgda
