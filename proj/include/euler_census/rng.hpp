#pragma once
#include <cmath>
#include <cstdint>
#include <random>

namespace ec {

// splitmix64 step; used only to derive seeds, never as the main stream.
inline std::uint64_t splitmix64(std::uint64_t& state) {
    std::uint64_t z = (state += 0x9e3779b97f4a7c15ULL);
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
    return z ^ (z >> 31);
}

// Substream i of a root seed: two splitmix64 steps over (seed, i).
// This is the repo-wide PRNG contract -- mt19937_64 seeded this way,
// uniforms by the (x >> 11) * 2^-53 rule, normals by Box-Muller -- so
// fixtures are reproducible across platforms and worker counts.
inline std::uint64_t substream_seed(std::uint64_t seed, std::uint64_t i) {
    std::uint64_t s = seed;
    std::uint64_t a = splitmix64(s);
    s = a ^ i;
    return splitmix64(s);
}

class Rng {
  public:
    explicit Rng(std::uint64_t seed) : gen_(seed) {}
    static Rng substream(std::uint64_t seed, std::uint64_t i) {
        return Rng(substream_seed(seed, i));
    }

    std::uint64_t next_u64() { return gen_(); }

    // uniform in [0,1) with 53 significant bits
    double uniform() { return static_cast<double>(gen_() >> 11) * 0x1.0p-53; }

    // uniform integer in [0, bound) by rejection (no modulo bias)
    std::uint64_t uniform_int(std::uint64_t bound) {
        std::uint64_t threshold = (0ULL - bound) % bound;
        for (;;) {
            std::uint64_t x = gen_();
            if (x >= threshold) return x % bound;
        }
    }

    // standard normal via Box-Muller, one spare cached
    double normal() {
        if (have_spare_) {
            have_spare_ = false;
            return spare_;
        }
        double u1, u2;
        do {
            u1 = uniform();
        } while (u1 <= 0.0);
        u2 = uniform();
        double r = std::sqrt(-2.0 * std::log(u1));
        double a = 6.283185307179586476925286766559 * u2;
        spare_ = r * std::sin(a);
        have_spare_ = true;
        return r * std::cos(a);
    }

  private:
    std::mt19937_64 gen_;
    bool have_spare_ = false;
    double spare_ = 0.0;
};

}  // namespace ec
