#pragma once

#include <array>
#include <cstdint>
#include <vector>

namespace heliodet {

/// splitmix64 finalizer. Used both as a stateless 64-bit hash and as the
/// seeding sequence for Rng. Reference: Steele/Lea/Flood, "Fast splittable
/// pseudorandom number generators".
inline uint64_t splitmix64(uint64_t x) {
    x += 0x9E3779B97F4A7C15ULL;
    x = (x ^ (x >> 30)) * 0xBF58476D1CE4E5B9ULL;
    x = (x ^ (x >> 27)) * 0x94D049BB133111EBULL;
    return x ^ (x >> 31);
}

/// Deterministic sub-stream seed: seed for scene i, epoch i, layer i, ...
/// derive_seed(s, i) = splitmix64(s ^ splitmix64(i)). All randomness in the
/// toolkit flows from one root seed through this function, so parallel and
/// serial runs produce identical outputs.
inline uint64_t derive_seed(uint64_t seed, uint64_t salt) {
    return splitmix64(seed ^ splitmix64(salt));
}

/// xoshiro256** 1.0 (Blackman & Vigna), seeded via splitmix64. Integer and
/// IEEE-754 arithmetic only, so streams are bit-identical across platforms.
class Rng {
public:
    explicit Rng(uint64_t seed) {
        uint64_t sm = seed;
        for (auto& word : state_) {
            sm += 0x9E3779B97F4A7C15ULL;
            uint64_t z = sm;
            z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
            z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
            word = z ^ (z >> 31);
        }
        if (state_[0] == 0 && state_[1] == 0 && state_[2] == 0 && state_[3] == 0)
            state_[0] = 1;
    }

    uint64_t next_u64() {
        const uint64_t result = rotl(state_[1] * 5, 7) * 9;
        const uint64_t t = state_[1] << 17;
        state_[2] ^= state_[0];
        state_[3] ^= state_[1];
        state_[1] ^= state_[2];
        state_[0] ^= state_[3];
        state_[2] ^= t;
        state_[3] = rotl(state_[3], 45);
        return result;
    }

    /// Uniform double in [0, 1), 53-bit resolution.
    double uniform() { return static_cast<double>(next_u64() >> 11) * 0x1.0p-53; }

    double uniform(double lo, double hi) { return lo + uniform() * (hi - lo); }

    float uniform_f(float lo, float hi) { return static_cast<float>(uniform(lo, hi)); }

    /// Uniform integer in [lo, hi] inclusive. Modulo bias is negligible for
    /// the small ranges used here and keeps the mapping platform-stable.
    int64_t uniform_int(int64_t lo, int64_t hi) {
        const uint64_t span = static_cast<uint64_t>(hi - lo) + 1;
        return lo + static_cast<int64_t>(next_u64() % span);
    }

    bool bernoulli(double p) { return uniform() < p; }

    /// Seeded Fisher-Yates shuffle.
    template <typename T>
    void shuffle(std::vector<T>& v) {
        for (size_t i = v.size(); i > 1; --i) {
            const size_t j = static_cast<size_t>(uniform_int(0, static_cast<int64_t>(i) - 1));
            std::swap(v[i - 1], v[j]);
        }
    }

private:
    static uint64_t rotl(uint64_t x, int k) { return (x << k) | (x >> (64 - k)); }

    std::array<uint64_t, 4> state_{};
};

}  // namespace heliodet
