#pragma once

#include <cmath>
#include <cstdint>
#include <string_view>

namespace coneinf {

// Counter-based splittable generator. Every output is a pure function of
// (seed, stream, counter), so independent substreams can be derived by tag
// and drawn in any order with bit-for-bit reproducibility.
class Rng {
public:
    Rng(std::uint64_t seed, std::uint64_t stream)
        : base_(mix(seed ^ mix(stream ^ 0x6a09e667f3bcc909ULL))) {}

    static std::uint64_t mix(std::uint64_t x) {
        x += 0x9e3779b97f4a7c15ULL;
        x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
        x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
        return x ^ (x >> 31);
    }

    static std::uint64_t hash_tag(std::string_view tag) {
        std::uint64_t h = 0xcbf29ce484222325ULL;
        for (char c : tag) {
            h ^= static_cast<unsigned char>(c);
            h *= 0x100000001b3ULL;
        }
        return h;
    }

    std::uint64_t value_at(std::uint64_t i) const { return mix(base_ + i * 0x9e3779b97f4a7c15ULL); }

    std::uint64_t next_u64() { return value_at(counter_++); }

    // Uniform in [0, 1).
    double next_double() { return static_cast<double>(next_u64() >> 11) * 0x1.0p-53; }

    double uniform(double lo, double hi) { return lo + (hi - lo) * next_double(); }

    // Uniform integer in [lo, hi], inclusive.
    std::int64_t uniform_int(std::int64_t lo, std::int64_t hi) {
        std::uint64_t span = static_cast<std::uint64_t>(hi - lo) + 1;
        return lo + static_cast<std::int64_t>(next_u64() % span);
    }

    // Standard normal via Box-Muller.
    double gaussian() {
        double u1 = (static_cast<double>(next_u64() >> 11) + 1.0) * 0x1.0p-53;
        double u2 = next_double();
        return std::sqrt(-2.0 * std::log(u1)) * std::cos(6.283185307179586 * u2);
    }

private:
    std::uint64_t base_;
    std::uint64_t counter_ = 0;
};

inline Rng derive_rng(std::uint64_t seed, std::string_view tag, std::uint64_t index = 0) {
    return Rng(seed, Rng::hash_tag(tag) ^ (0x9e3779b97f4a7c15ULL * (index + 1)));
}

} // namespace coneinf
