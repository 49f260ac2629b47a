#pragma once

#include <cmath>
#include <cstdint>
#include <random>
#include <stdexcept>
#include <string>
#include <vector>

namespace hemsched {

using Vec = std::vector<double>;

/// Thrown on contract violations (bad dimensions, invalid configuration,
/// scenario infeasibility). LP statuses are reported via LpSolution, not
/// exceptions.
class Error : public std::runtime_error {
public:
    explicit Error(const std::string& what) : std::runtime_error(what) {}
};

inline double pos_part(double x) { return x > 0.0 ? x : 0.0; }

inline bool nearly_equal(double a, double b, double tol) {
    return std::abs(a - b) <= tol;
}

/// FNV-1a over raw bytes; used to fingerprint scenario realizations so a
/// report can state exactly which instance it was computed from.
inline std::uint64_t fnv1a(const void* data, std::size_t n,
                           std::uint64_t seed = 1469598103934665603ull) {
    const auto* p = static_cast<const unsigned char*>(data);
    std::uint64_t h = seed;
    for (std::size_t i = 0; i < n; ++i) {
        h ^= p[i];
        h *= 1099511628211ull;
    }
    return h;
}

inline std::uint64_t fnv1a(const std::string& s,
                           std::uint64_t seed = 1469598103934665603ull) {
    return fnv1a(s.data(), s.size(), seed);
}

using Rng = std::mt19937_64;

// Sampling helpers on top of mt19937_64. The raw-bit arithmetic keeps
// generated scenarios byte-stable across standard library implementations,
// which the determinism guarantees rely on.
namespace detail {

inline double uniform01(Rng& rng) {
    return static_cast<double>(rng() >> 11) * 0x1.0p-53;
}

inline double uniform_real(Rng& rng, double lo, double hi) {
    return lo + (hi - lo) * uniform01(rng);
}

/// Uniform integer in [lo, hi], both inclusive.
inline long uniform_int(Rng& rng, long lo, long hi) {
    if (lo > hi) throw Error("uniform_int: empty range");
    const auto span = static_cast<std::uint64_t>(hi - lo) + 1;
    // Rejection sampling to avoid modulo bias.
    const std::uint64_t limit = UINT64_MAX - UINT64_MAX % span;
    std::uint64_t x;
    do {
        x = rng();
    } while (x >= limit);
    return lo + static_cast<long>(x % span);
}

inline bool bernoulli(Rng& rng, double p) { return uniform01(rng) < p; }

}  // namespace detail

}  // namespace hemsched
