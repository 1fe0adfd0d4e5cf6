#pragma once

#include <cstdint>

namespace partilab {

// Deterministic generator with a stable cross-platform output stream.
// std::uniform_int_distribution is implementation-defined, so anything that
// must reproduce byte-identical fixtures goes through this instead.
class Rng {
public:
    explicit Rng(std::uint64_t seed) noexcept
        : state_(seed)
    {
    }

    std::uint64_t next_u64() noexcept
    {
        // splitmix64
        std::uint64_t z = (state_ += 0x9e3779b97f4a7c15ULL);
        z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
        z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
        return z ^ (z >> 31);
    }

    // uniform in [lo, hi], inclusive
    int uniform(int lo, int hi) noexcept
    {
        const std::uint64_t span = static_cast<std::uint64_t>(hi - lo) + 1;
        return lo + static_cast<int>(next_u64() % span);
    }

    bool chance(double p) noexcept
    {
        return static_cast<double>(next_u64() >> 11) * (1.0 / 9007199254740992.0) < p;
    }

private:
    std::uint64_t state_;
};

} // namespace partilab
