#ifndef SMLAB_RNG_HPP
#define SMLAB_RNG_HPP

#include <array>
#include <cmath>
#include <cstdint>
#include <string>
#include <string_view>

#include "smlab/error.hpp"

namespace smlab {

/// One step of the splitmix64 sequence starting at `state`.
/// Advances by the golden-ratio increment, then applies the output mix.
constexpr std::uint64_t splitmix64_next(std::uint64_t state) noexcept {
    std::uint64_t z = state + 0x9E3779B97F4A7C15ULL;
    z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
    z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
    return z ^ (z >> 31);
}

/// 64-bit FNV-1a over an arbitrary byte string.
constexpr std::uint64_t fnv1a64(std::string_view data) noexcept {
    std::uint64_t h = 0xCBF29CE484222325ULL;
    for (char c : data) {
        h ^= static_cast<std::uint8_t>(c);
        h *= 0x100000001B3ULL;
    }
    return h;
}

/// Derive an independent 64-bit seed from a master seed and a text label.
/// Every randomized subsystem gets its own label so that streams never alias.
constexpr std::uint64_t seed_derive(std::uint64_t master, std::string_view label) noexcept {
    return splitmix64_next(master ^ fnv1a64(label));
}

/// xoshiro256** generator with deterministic seeding via splitmix64.
/// Single-owner: a stream is never shared between concurrent tasks.
class RandomStream {
public:
    explicit RandomStream(std::uint64_t seed, std::string origin_label = {})
        : origin_seed_(seed), origin_label_(std::move(origin_label)) {
        std::uint64_t sm = seed;
        for (auto& word : state_) {
            sm += 0x9E3779B97F4A7C15ULL;
            std::uint64_t z = sm;
            z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
            z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
            word = z ^ (z >> 31);
        }
        // all-zero state is the one fixed point xoshiro cannot leave
        if ((state_[0] | state_[1] | state_[2] | state_[3]) == 0) state_[0] = 1;
    }

    /// Stream derived from (master, label); the canonical way to fan out.
    static RandomStream derived(std::uint64_t master, std::string_view label) {
        return RandomStream(seed_derive(master, label), std::string(label));
    }

    std::uint64_t next_u64() noexcept {
        const std::uint64_t result = rotl(state_[1] * 5, 7) * 9;
        const std::uint64_t t = state_[1] << 17;
        state_[2] ^= state_[0];
        state_[3] ^= state_[1];
        state_[1] ^= state_[2];
        state_[0] ^= state_[3];
        state_[2] ^= t;
        state_[3] = rotl(state_[3], 45);
        return result;
    }

    /// Uniform double in [0, 1) built from the top 53 bits.
    double next_double() noexcept {
        return static_cast<double>(next_u64() >> 11) * 0x1.0p-53;
    }

    /// Uniform double in [lo, hi). Degenerate interval [x, x) returns x.
    double uniform(double lo, double hi) {
        if (lo > hi) throw ArgumentError("uniform: lo > hi");
        return lo + next_double() * (hi - lo);
    }

    /// Unbiased uniform integer in [0, n). Rejection from the low end.
    std::uint64_t bounded(std::uint64_t n) {
        if (n == 0) throw ArgumentError("bounded: n must be positive");
        const std::uint64_t threshold = (0 - n) % n;
        for (;;) {
            const std::uint64_t r = next_u64();
            if (r >= threshold) return r % n;
        }
    }

    /// Uniform integer in [lo, hi], both ends inclusive.
    std::int64_t uniform_int(std::int64_t lo, std::int64_t hi) {
        if (lo > hi) throw ArgumentError("uniform_int: lo > hi");
        const std::uint64_t span =
            static_cast<std::uint64_t>(hi) - static_cast<std::uint64_t>(lo) + 1;
        return lo + static_cast<std::int64_t>(bounded(span));
    }

    /// Standard normal via Box-Muller; consumes exactly two uniforms.
    double gaussian() noexcept {
        const double u1 = 1.0 - next_double(); // (0, 1]
        const double u2 = next_double();
        return std::sqrt(-2.0 * std::log(u1)) * std::cos(2.0 * M_PI * u2);
    }

    std::array<std::uint64_t, 4> state() const noexcept { return state_; }
    void set_state(const std::array<std::uint64_t, 4>& s) noexcept { state_ = s; }

    std::uint64_t origin_seed() const noexcept { return origin_seed_; }
    const std::string& origin_label() const noexcept { return origin_label_; }

private:
    static constexpr std::uint64_t rotl(std::uint64_t x, int k) noexcept {
        return (x << k) | (x >> (64 - k));
    }

    std::array<std::uint64_t, 4> state_{};
    std::uint64_t origin_seed_ = 0;
    std::string origin_label_;
};

} // namespace smlab

#endif // SMLAB_RNG_HPP
