#ifndef ADSWEDGE_RANDOM_HPP
#define ADSWEDGE_RANDOM_HPP

#include <cmath>
#include <cstdint>
#include <numbers>
#include <random>

namespace adswedge
{

// Seeded generator with portable variates. The standard distributions are
// implementation-defined, so reports would not be byte-stable across
// standard libraries; everything here is derived from the raw 64-bit stream.
class Rng
{
  public:
    explicit Rng(std::uint64_t seed) : engine_(seed) {}

    // uniform in [0, 1)
    double uniform() { return static_cast<double>(engine_() >> 11) * 0x1.0p-53; }

    double uniform(double lo, double hi) { return lo + (hi - lo) * uniform(); }

    double log_uniform(double lo, double hi) { return std::exp(uniform(std::log(lo), std::log(hi))); }

    // Box-Muller; the cached second variate is deliberately discarded so that
    // the stream position depends only on the number of calls.
    double normal()
    {
        double u1 = uniform();
        while (u1 <= 0.0)
            u1 = uniform();
        const double u2 = uniform();
        return std::sqrt(-2.0 * std::log(u1)) * std::cos(2.0 * std::numbers::pi * u2);
    }

    // maps (-pi/2, pi/2) onto the real line; heavy tailed, covers R
    double tan_transform(double scale = 1.0)
    {
        const double u = uniform(-0.5, 0.5) * 0.999999;
        return scale * std::tan(std::numbers::pi * u);
    }

    std::uint64_t next() { return engine_(); }

  private:
    std::mt19937_64 engine_;
};

} // namespace adswedge

#endif // ADSWEDGE_RANDOM_HPP
