#pragma once

#include <complex>
#include <cstddef>
#include <cstdint>
#include <filesystem>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace rfml::synth {

using Complex = std::complex<double>;
using BitStream = std::vector<std::uint8_t>;

enum class ModKind : std::uint8_t { BPSK = 0, QPSK = 1, QAM16 = 2, QAM64 = 3, CUSTOM64 = 4, GFSK = 5, GMSK = 6 };

std::string_view to_string(ModKind kind) noexcept;
std::optional<ModKind> parse_mod_kind(std::string_view name) noexcept;

inline constexpr double kRrcRolloff = 0.35;
inline constexpr int kRrcSpanSymbols = 11;
inline constexpr int kGaussianSpanSymbols = 4;

// Bandwidth-time product and modulation index of a continuous-phase class.
struct CpmParams {
    double bt;
    double h;
};

// GMSK: h = 0.5, BT = 0.3. GFSK: h = 1.0, BT = 0.5.
CpmParams cpm_params(ModKind kind);

// A modulation class. Linear classes carry their constellation (unit mean
// power) indexed by Gray-decoded symbol value; continuous-phase classes carry none.
class ModClass {
public:
    static ModClass builtin(ModKind kind);
    // Normalizes `points` to unit mean power. Requires 64 distinct points.
    static ModClass custom(std::vector<Complex> points, std::string name = "CUSTOM64");

    ModKind kind() const noexcept { return kind_; }
    const std::string& name() const noexcept { return name_; }
    const std::vector<Complex>& constellation() const noexcept { return points_; }

    bool is_linear() const noexcept { return kind_ != ModKind::GFSK && kind_ != ModKind::GMSK; }
    int bits_per_symbol() const;

private:
    ModClass(ModKind kind, std::string name, std::vector<Complex> points)
        : kind_(kind), name_(std::move(name)), points_(std::move(points))
    {
    }

    ModKind kind_;
    std::string name_;
    std::vector<Complex> points_;
};

// Reads 64 lines of "re im" and returns a CUSTOM64 class normalized to unit mean power.
ModClass load_constellation(const std::filesystem::path& path, std::string name = "CUSTOM64");

// n i.i.d. uniform bits. Bit i is bit (i mod 64) of CounterRng(seed).at(i / 64).
BitStream generate_bits(std::size_t n, std::uint64_t seed);

// Gray-coded mapping, MSB first. Square QAM splits each symbol's bits into an
// in-phase half followed by a quadrature half.
std::vector<Complex> map_symbols(std::span<const std::uint8_t> bits, const ModClass& mod);

// Unit-energy root-raised-cosine taps, span_symbols * sps + 1 long.
std::vector<double> rrc_taps(double rolloff, int sps, int span_symbols);

// Zero-stuffs by sps, convolves with taps and keeps symbols.size() * sps
// samples aligned on the filter's centre tap.
std::vector<Complex> pulse_shape(std::span<const Complex> symbols, std::span<const double> taps, int sps);

// Gaussian taps (unit DC gain) for a frequency pulse with bandwidth-time product bt.
std::vector<double> gaussian_taps(double bt, int sps, int span_symbols);

// Continuous-phase modulation: NRZ bits held for sps samples, smoothed by a
// Gaussian pulse, phase advanced by pi * h * f[n] / sps per sample.
// Returns bits.size() * sps unit-magnitude samples.
std::vector<Complex> cpm_modulate(std::span<const std::uint8_t> bits, double bt, double h, int sps);

// Adds complex white Gaussian noise of total variance mean|x|^2 / 10^(snr_db/10),
// split evenly between I and Q. snr_db = +inf returns the input unchanged.
std::vector<Complex> add_awgn(std::span<const Complex> samples, double snr_db, std::uint64_t seed);

double mean_power(std::span<const Complex> samples) noexcept;

}  // namespace rfml::synth
