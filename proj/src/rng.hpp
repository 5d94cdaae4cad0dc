#ifndef DAGPATH_RNG_HPP
#define DAGPATH_RNG_HPP

#include <cstdint>

namespace dagpath {

// Counter-based generator (splitmix64 core). A (seed, stream) pair fully
// determines the sequence, with no reliance on libstdc++ distribution
// internals, so outputs are identical across platforms. Streams are cheap:
// trial i of a campaign uses stream i and is independent of every other
// trial.
class SplitRng {
public:
    explicit SplitRng(std::uint64_t seed, std::uint64_t stream = 0)
        : state_(mix(seed ^ mix(stream * 0x9E3779B97F4A7C15ULL + 0x632BE59BD9B4E019ULL))) {}

    std::uint64_t next_u64() {
        state_ += 0x9E3779B97F4A7C15ULL;
        return mix(state_);
    }

    // Unbiased integer in [lo, hi], inclusive.
    long long uniform(long long lo, long long hi) {
        const std::uint64_t span =
            static_cast<std::uint64_t>(hi) - static_cast<std::uint64_t>(lo) + 1;
        if (span == 0) return static_cast<long long>(next_u64()); // full 64-bit range
        unsigned __int128 product = static_cast<unsigned __int128>(next_u64()) * span;
        auto low = static_cast<std::uint64_t>(product);
        if (low < span) {
            const std::uint64_t threshold = (0 - span) % span;
            while (low < threshold) {
                product = static_cast<unsigned __int128>(next_u64()) * span;
                low = static_cast<std::uint64_t>(product);
            }
        }
        return static_cast<long long>(static_cast<std::uint64_t>(product >> 64) +
                                      static_cast<std::uint64_t>(lo));
    }

    bool bernoulli(double p) {
        if (p <= 0.0) return false;
        if (p >= 1.0) return true;
        const auto threshold = static_cast<std::uint64_t>(p * 9007199254740992.0); // 2^53
        return (next_u64() >> 11) < threshold;
    }

    static std::uint64_t mix(std::uint64_t z) {
        z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
        z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
        return z ^ (z >> 31);
    }

private:
    std::uint64_t state_;
};

// Seed for an independent sub-stream, e.g. one campaign trial.
inline std::uint64_t derive_seed(std::uint64_t seed, std::uint64_t index) {
    return SplitRng::mix(seed + 0x9E3779B97F4A7C15ULL * (index + 1));
}

} // namespace dagpath

#endif
