#pragma once

#include <cmath>
#include <cstdint>
#include <random>
#include <string_view>

namespace qmono {

// Deterministic RNG wrapper: mt19937_64 with an explicit Box-Muller gaussian
// so sampled values depend only on the seed, not on library distribution
// internals.
class Rng {
  public:
    explicit Rng(std::uint64_t seed) : gen_(seed) {}

    std::uint64_t next_u64() { return gen_(); }

    // uniform in (0, 1]
    double uniform() {
        return static_cast<double>((gen_() >> 11) + 1) * 0x1.0p-53;
    }

    std::uint64_t below(std::uint64_t n) { return gen_() % n; }

    double gaussian() {
        if (have_spare_) {
            have_spare_ = false;
            return spare_;
        }
        constexpr double two_pi = 6.283185307179586476925286766559;
        double u1 = uniform();
        double u2 = uniform();
        double r = std::sqrt(-2.0 * std::log(u1));
        double a = two_pi * u2;
        spare_ = r * std::sin(a);
        have_spare_ = true;
        return r * std::cos(a);
    }

  private:
    std::mt19937_64 gen_;
    double spare_ = 0.0;
    bool have_spare_ = false;
};

// FNV-1a over a string, mixed with splitmix64 steps; used to derive
// independent oracle seeds from (master seed, state label, cut, direction).
inline std::uint64_t mix_seed(std::uint64_t seed, std::string_view tag) {
    std::uint64_t h = 1469598103934665603ull ^ seed;
    for (char ch : tag) {
        h ^= static_cast<unsigned char>(ch);
        h *= 1099511628211ull;
    }
    h += 0x9e3779b97f4a7c15ull;
    h = (h ^ (h >> 30)) * 0xbf58476d1ce4e5b9ull;
    h = (h ^ (h >> 27)) * 0x94d049bb133111ebull;
    return h ^ (h >> 31);
}

}  // namespace qmono
