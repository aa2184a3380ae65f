#pragma once

#include <cmath>
#include <cstdint>
#include <string_view>

namespace simlearn {

namespace detail {

inline std::uint64_t splitmix64(std::uint64_t& state) {
    state += 0x9e3779b97f4a7c15ULL;
    std::uint64_t z = state;
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
    return z ^ (z >> 31);
}

inline std::uint64_t mix64(std::uint64_t x) {
    std::uint64_t s = x;
    return splitmix64(s);
}

inline std::uint64_t fnv1a64(std::string_view text) {
    std::uint64_t h = 0xcbf29ce484222325ULL;
    for (unsigned char c : text) {
        h ^= c;
        h *= 0x100000001b3ULL;
    }
    return h;
}

}  // namespace detail

/// Deterministic seeded random stream (splitmix64 core). Streams are cheap
/// values; derive one per purpose via stream() so results do not depend on
/// evaluation order elsewhere.
class Rng {
public:
    explicit Rng(std::uint64_t seed) : state_(detail::mix64(seed)) {}

    /// Named substream: same (seed, name) always yields the same stream.
    static Rng stream(std::uint64_t seed, std::string_view name) {
        return Rng(detail::mix64(seed) ^ detail::fnv1a64(name));
    }

    std::uint64_t next_u64() { return detail::splitmix64(state_); }

    /// Uniform on [0, 1).
    double next_unit() { return static_cast<double>(next_u64() >> 11) * 0x1.0p-53; }

    double uniform(double lo, double hi) { return lo + (hi - lo) * next_unit(); }

    double normal(double mean, double stddev) {
        if (have_spare_) {
            have_spare_ = false;
            return mean + stddev * spare_;
        }
        // Box-Muller; 1-u keeps the log argument in (0,1].
        const double u1 = 1.0 - next_unit();
        const double u2 = next_unit();
        const double r = std::sqrt(-2.0 * std::log(u1));
        const double theta = 2.0 * 3.14159265358979323846 * u2;
        spare_ = r * std::sin(theta);
        have_spare_ = true;
        return mean + stddev * (r * std::cos(theta));
    }

    /// Uniform index in [0, n). n must be positive.
    std::size_t index(std::size_t n) {
        return static_cast<std::size_t>(
            (static_cast<unsigned __int128>(next_u64()) * n) >> 64);
    }

private:
    std::uint64_t state_;
    bool have_spare_ = false;
    double spare_ = 0.0;
};

/// Keyed hash to a uniform value in [0, 1). Used for lazily materialized
/// similarity tables: the value for (seed, a, b) is fixed at construction
/// time and never stored.
inline double unit_from_hash(std::uint64_t seed, std::uint64_t a, std::uint64_t b) {
    std::uint64_t s = detail::mix64(seed);
    s ^= detail::mix64(a + 0x9e3779b97f4a7c15ULL);
    std::uint64_t h = detail::splitmix64(s);
    s ^= detail::mix64(b + 0x517cc1b727220a95ULL);
    h ^= detail::splitmix64(s);
    return static_cast<double>(h >> 11) * 0x1.0p-53;
}

}  // namespace simlearn
