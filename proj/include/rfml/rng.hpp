#pragma once

#include <cmath>
#include <cstdint>
#include <numbers>

namespace rfml {

// SplitMix64 finalizer. Used both as a counter-based generator (hash of
// key + counter) and as the seed-split function.
constexpr std::uint64_t mix64(std::uint64_t z) noexcept
{
    z += 0x9e3779b97f4a7c15ULL;
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
    return z ^ (z >> 31);
}

// Derives an independent child seed from (parent, stream, index). Snippet i of
// a dataset uses derive_seed(master, stream, i), so output never depends on
// the order or thread in which snippets are produced.
constexpr std::uint64_t derive_seed(std::uint64_t parent, std::uint64_t stream,
                                    std::uint64_t index) noexcept
{
    return mix64(mix64(parent ^ mix64(stream)) + index * 0xd1b54a32d192ed03ULL);
}

// Counter-based generator: output k is mix64(key + k * golden_gamma). Any
// position of the stream is addressable without generating the prefix.
class CounterRng {
public:
    explicit CounterRng(std::uint64_t key) noexcept : key_(mix64(key)) {}

    std::uint64_t at(std::uint64_t k) const noexcept
    {
        return mix64(key_ + k * 0x9e3779b97f4a7c15ULL);
    }

    std::uint64_t next_u64() noexcept { return at(counter_++); }

    // Uniform on [0, 1) with 53 random bits.
    double uniform() noexcept
    {
        return static_cast<double>(next_u64() >> 11) * 0x1.0p-53;
    }

    // Uniform on (0, 1].
    double uniform_open0() noexcept { return 1.0 - uniform(); }

    double uniform(double lo, double hi) noexcept { return lo + (hi - lo) * uniform(); }

    // Standard normal via Box-Muller; the second variate of each pair is cached.
    double normal() noexcept
    {
        if (has_spare_) {
            has_spare_ = false;
            return spare_;
        }
        const double r = std::sqrt(-2.0 * std::log(uniform_open0()));
        const double theta = 2.0 * std::numbers::pi * uniform();
        spare_ = r * std::sin(theta);
        has_spare_ = true;
        return r * std::cos(theta);
    }

    // Uniform integer in [0, n). n must be > 0; Lemire's multiply-shift.
    std::uint64_t below(std::uint64_t n) noexcept
    {
        __extension__ using u128 = unsigned __int128;
        const auto product = static_cast<u128>(next_u64()) * n;
        return static_cast<std::uint64_t>(product >> 64);
    }

    std::uint64_t counter() const noexcept { return counter_; }

private:
    std::uint64_t key_;
    std::uint64_t counter_ = 0;
    double spare_ = 0.0;
    bool has_spare_ = false;
};

// Fisher-Yates shuffle driven by CounterRng, so permutations are identical
// across standard library implementations.
template <typename RandomIt>
void deterministic_shuffle(RandomIt first, RandomIt last, CounterRng& rng)
{
    const auto n = static_cast<std::uint64_t>(last - first);
    for (std::uint64_t i = n; i > 1; --i) {
        const auto j = rng.below(i);
        using std::swap;
        swap(first[i - 1], first[j]);
    }
}

}  // namespace rfml
