#pragma once

#include <cstdint>

namespace ebmin {

// SplitMix64 (Steele/Lea/Flood mixer). Fixed-increment stream, identical
// output on every platform; all randomness in the library flows through it.
class SplitMix64 {
public:
    explicit SplitMix64(std::uint64_t seed) : state_(seed) {}

    std::uint64_t next() {
        std::uint64_t z = (state_ += 0x9e3779b97f4a7c15ull);
        z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ull;
        z = (z ^ (z >> 27)) * 0x94d049bb133111ebull;
        return z ^ (z >> 31);
    }

    // uniform double in [0, 1), 53 random bits
    double uniform01() { return static_cast<double>(next() >> 11) * 0x1.0p-53; }

private:
    std::uint64_t state_;
};

// Per-trial seed stream: mix(masterSeed XOR (trialIndex+1)*golden). Pure
// function of (masterSeed, trialIndex), so trials can run in any order and
// still reproduce bit-identically.
inline std::uint64_t trial_seed(std::uint64_t master_seed, std::uint64_t trial_index) {
    SplitMix64 g(master_seed ^ ((trial_index + 1) * 0x9e3779b97f4a7c15ull));
    return g.next();
}

} // namespace ebmin
