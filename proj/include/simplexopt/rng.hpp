#ifndef SIMPLEXOPT_RNG_HPP
#define SIMPLEXOPT_RNG_HPP

#include <cmath>
#include <cstdint>
#include <random>

namespace simplexopt {

// Deterministic random source. Distributions are hand-rolled on top of
// mt19937_64 so that streams are identical across standard libraries.
class Rng {
public:
    explicit Rng(std::uint64_t seed) : engine_(seed) {}

    // uniform in [0, 1)
    double uniform() {
        return static_cast<double>(engine_() >> 11) * 0x1.0p-53;
    }

    double uniform(double lo, double hi) { return lo + (hi - lo) * uniform(); }

    // standard normal via Box-Muller; draws come in pairs
    double normal() {
        if (have_spare_) {
            have_spare_ = false;
            return spare_;
        }
        double u1 = uniform();
        double u2 = uniform();
        while (u1 <= 0.0) u1 = uniform();
        const double r = std::sqrt(-2.0 * std::log(u1));
        const double theta = 2.0 * 3.141592653589793238462643383279502884 * u2;
        spare_ = r * std::sin(theta);
        have_spare_ = true;
        return r * std::cos(theta);
    }

    // integer in [0, m)
    std::uint64_t below(std::uint64_t m) {
        // rejection sampling to avoid modulo bias
        const std::uint64_t limit = UINT64_MAX - UINT64_MAX % m;
        std::uint64_t v = engine_();
        while (v >= limit) v = engine_();
        return v % m;
    }

    // independent child stream, e.g. one per instance or per run
    Rng spawn(std::uint64_t stream) {
        return Rng(engine_() ^ (0x9e3779b97f4a7c15ULL * (stream + 1)));
    }

private:
    std::mt19937_64 engine_;
    double spare_ = 0.0;
    bool have_spare_ = false;
};

// Order-independent sub-seed: mixes a base seed with up to three stream ids.
// Parallel workers seeded this way see the same stream no matter who runs first.
inline std::uint64_t mix_seed(std::uint64_t base, std::uint64_t a, std::uint64_t b = 0,
                              std::uint64_t c = 0) {
    auto splitmix = [](std::uint64_t z) {
        z += 0x9e3779b97f4a7c15ULL;
        z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
        z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
        return z ^ (z >> 31);
    };
    std::uint64_t s = splitmix(base);
    s = splitmix(s ^ (a + 0x100));
    s = splitmix(s ^ (b + 0x10000));
    s = splitmix(s ^ (c + 0x1000000));
    return s;
}

}  // namespace simplexopt

#endif
