#pragma once

#include <cstdint>
#include <random>
#include <span>

namespace ccstop {

// SplitMix64 finalizer; used to derive independent engine seeds from (seed, stream).
constexpr std::uint64_t mix64(std::uint64_t x) noexcept {
    x += 0x9e3779b97f4a7c15ULL;
    x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
    x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
    return x ^ (x >> 31);
}

// Random stream keyed by (master seed, stream index). Stream i's output depends on
// nothing else, so replications can be farmed out to any number of workers.
// Engine: std::mt19937_64 (fully specified by the standard); bounded draws use
// rejection sampling so results do not depend on the library's distributions.
class Rng {
public:
    Rng(std::uint64_t seed, std::uint64_t stream) : engine_(mix64(mix64(seed) ^ mix64(~stream))) {}

    std::uint64_t next() { return engine_(); }

    // Uniform in [0, bound), bound >= 1.
    std::uint64_t below(std::uint64_t bound) {
        const std::uint64_t limit = ~std::uint64_t{0} - (~std::uint64_t{0} % bound);
        std::uint64_t x;
        do {
            x = engine_();
        } while (x >= limit);
        return x % bound;
    }

    // Uniform double in [0, 1) with 53 random bits.
    double uniform() { return static_cast<double>(engine_() >> 11) * 0x1.0p-53; }

    // Forward Fisher-Yates over the first `count` positions; after the call
    // items[0..count) is a uniform random ordered sample. count == size gives a
    // full shuffle, and a shorter call yields the prefix of that same shuffle.
    template <typename T>
    void partial_shuffle(std::span<T> items, std::size_t count) {
        const std::size_t n = items.size();
        if (count > n) count = n;
        for (std::size_t i = 0; i < count && i + 1 < n; ++i) {
            const std::size_t j = i + static_cast<std::size_t>(below(n - i));
            std::swap(items[i], items[j]);
        }
    }

private:
    std::mt19937_64 engine_;
};

}  // namespace ccstop
