#pragma once

#include <cmath>
#include <cstdint>

namespace lpfc {

// Small deterministic generator (splitmix64). Used everywhere instead of
// <random> so that sampled graphs, noise and trial seeds are reproducible
// across platforms and standard library versions.
class SplitMix64 {
public:
    explicit SplitMix64(std::uint64_t seed) : state_(seed) {}

    static std::uint64_t scramble(std::uint64_t z) {
        z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
        z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
        return z ^ (z >> 31);
    }

    std::uint64_t next() {
        state_ += 0x9e3779b97f4a7c15ULL;
        return scramble(state_);
    }

    // uniform in [0,1), 53 random bits
    double next_double() { return static_cast<double>(next() >> 11) * 0x1.0p-53; }

    // uniform integer in [0,n), n > 0, via rejection
    std::uint64_t next_below(std::uint64_t n) {
        const std::uint64_t limit = ~std::uint64_t{0} - (~std::uint64_t{0} % n);
        std::uint64_t v;
        do {
            v = next();
        } while (v >= limit);
        return v % n;
    }

    // standard normal via Box-Muller, one cached draw
    double next_gaussian() {
        if (have_spare_) {
            have_spare_ = false;
            return spare_;
        }
        double u1;
        do {
            u1 = next_double();
        } while (u1 <= 0.0);
        const double u2 = next_double();
        const double r = std::sqrt(-2.0 * std::log(u1));
        const double a = 6.283185307179586476925286766559 * u2;
        spare_ = r * std::sin(a);
        have_spare_ = true;
        return r * std::cos(a);
    }

private:
    std::uint64_t state_;
    bool have_spare_ = false;
    double spare_ = 0.0;
};

// Pure mixing function (master, stream, index) -> seed. Lets paired trials
// derive independent per-trial generators without any shared state.
inline std::uint64_t mix_seed(std::uint64_t master, std::uint64_t stream, std::uint64_t index) {
    std::uint64_t h = SplitMix64::scramble(master ^ 0x6a09e667f3bcc909ULL);
    h = SplitMix64::scramble(h ^ (stream + 0x9e3779b97f4a7c15ULL));
    h = SplitMix64::scramble(h ^ (index + 0xd1b54a32d192ed03ULL));
    return h;
}

} // namespace lpfc
