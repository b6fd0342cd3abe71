#pragma once

#include <cstdint>
#include <random>
#include <stdexcept>
#include <vector>

namespace hilbert {

// Deterministic random stream. All draws go through hand-rolled reductions of
// mt19937_64 output because the std distribution objects are allowed to differ
// between standard library implementations, and we promise byte-identical
// artifacts for a fixed seed everywhere.
class RandomStream {
public:
    explicit RandomStream(std::uint64_t seed) : engine_(seed) {}

    // splitmix64 finalizer; decorrelates nearby inputs.
    static std::uint64_t mix(std::uint64_t z) {
        z += 0x9e3779b97f4a7c15ull;
        z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ull;
        z = (z ^ (z >> 27)) * 0x94d049bb133111ebull;
        return z ^ (z >> 31);
    }

    // Seed of an independent stream for item `ordinal` of a batch keyed by
    // `master`. `salt` separates streams drawn for different purposes from
    // one master seed (training data vs. evaluation suites and so on).
    static std::uint64_t derive_seed(std::uint64_t master, std::uint64_t ordinal,
                                     std::uint64_t salt = 0) {
        return mix(master ^ mix(ordinal ^ mix(salt)));
    }

    static RandomStream derive(std::uint64_t master, std::uint64_t ordinal,
                               std::uint64_t salt = 0) {
        return RandomStream(derive_seed(master, ordinal, salt));
    }

    std::uint64_t next_u64() { return engine_(); }

    // Uniform in [0, bound). Rejection sampling, no modulo bias.
    std::uint64_t below(std::uint64_t bound) {
        if (bound == 0)
            throw std::invalid_argument("RandomStream::below: bound must be positive");
        const std::uint64_t threshold = (0 - bound) % bound;
        for (;;) {
            const std::uint64_t r = next_u64();
            if (r >= threshold)
                return r % bound;
        }
    }

    // Uniform in [0, 1), 53 bits of precision.
    double unit() { return static_cast<double>(next_u64() >> 11) * 0x1.0p-53; }

    bool bernoulli(double p) {
        if (p <= 0.0)
            return false;
        if (p >= 1.0)
            return true;
        return unit() < p;
    }

    template <typename T>
    const T& pick(const std::vector<T>& items) {
        if (items.empty())
            throw std::invalid_argument("RandomStream::pick: empty choice set");
        return items[static_cast<std::size_t>(below(items.size()))];
    }

private:
    std::mt19937_64 engine_;
};

// Purpose tags for RandomStream::derive, so that distinct pipeline stages fed
// by one master seed never share a stream.
namespace stream_salt {
inline constexpr std::uint64_t generate = 0x67656e65ull;   // training/base generation
inline constexpr std::uint64_t augment = 0x6175676dull;    // template transformation
inline constexpr std::uint64_t depth_suite = 0x64657074ull;
inline constexpr std::uint64_t width_suite = 0x77696474ull;
}  // namespace stream_salt

}  // namespace hilbert
