#ifndef PARTSAMP_RNG_HPP
#define PARTSAMP_RNG_HPP

#include <cstdint>

namespace partsamp {

// splitmix64 (Vigna). Used only to derive stream seeds.
inline std::uint64_t splitmix64_next(std::uint64_t& state) {
    std::uint64_t z = (state += 0x9E3779B97F4A7C15ULL);
    z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
    z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
    return z ^ (z >> 31);
}

// xoshiro256++ with splitmix-derived state. One engine per logical sample
// stream: stream i of seed s starts from the splitmix64 sequence at offset i,
// so the set of streams is independent of how work is divided among threads.
class Rng {
public:
    Rng(std::uint64_t seed, std::uint64_t stream) {
        std::uint64_t sm = seed + stream * 0x9E3779B97F4A7C15ULL;
        for (auto& w : s_) w = splitmix64_next(sm);
    }

    std::uint64_t next() {
        const std::uint64_t result = rotl(s_[0] + s_[3], 23) + s_[0];
        const std::uint64_t t = s_[1] << 17;
        s_[2] ^= s_[0];
        s_[3] ^= s_[1];
        s_[1] ^= s_[2];
        s_[0] ^= s_[3];
        s_[2] ^= t;
        s_[3] = rotl(s_[3], 45);
        return result;
    }

    // uniform in [2^-54, 1 - 2^-54]; never 0 or 1, so log() is always finite
    double uniform01() {
        return static_cast<double>(next() >> 11) * 0x1.0p-53 + 0x1.0p-54;
    }

    // unbiased integer in [0, m), m >= 1
    std::uint64_t below(std::uint64_t m) {
        if (m <= 1) return 0;
        const std::uint64_t rem = (0 - m) % m;  // 2^64 mod m
        for (;;) {
            std::uint64_t x = next();
            if (x >= rem) return x % m;
        }
    }

private:
    static std::uint64_t rotl(std::uint64_t x, int k) {
        return (x << k) | (x >> (64 - k));
    }
    std::uint64_t s_[4];
};

// smallest log a uniform01() draw can produce: log(2^-54)
inline constexpr double kMinLogUniform = -37.42994775023705;

}  // namespace partsamp

#endif
