#ifndef GAWS_RNG_HPP
#define GAWS_RNG_HPP

#include <cstdint>
#include <cmath>
#include <random>
#include <stdexcept>

#include "gaws/math.hpp"

namespace gaws {

/// Deterministic random source. All samplers are implemented on top of raw
/// 64-bit draws so that streams are reproducible independent of the standard
/// library's distribution implementations.
class Rng {
  public:
    explicit Rng(std::uint64_t seed, std::uint64_t stream = 0)
        : seed_(seed), engine_(mix(seed, stream)) {}

    /// Derive an independent child stream from the same base seed.
    Rng child(std::uint64_t stream) const { return Rng(seed_, stream); }

    std::uint64_t raw() { return engine_(); }

    /// Uniform on (0, 1) — never returns an exact endpoint.
    double uniform() { return (static_cast<double>(raw() >> 11) + 0.5) * 0x1.0p-53; }

    double uniform(double a, double b) { return a + (b - a) * uniform(); }

    int uniform_int(int lo, int hi) {  // inclusive bounds
        if (hi < lo) throw std::invalid_argument("uniform_int: empty range");
        const auto span = static_cast<std::uint64_t>(hi - lo) + 1;
        return lo + static_cast<int>(raw() % span);
    }

    bool bernoulli(double p) { return uniform() < p; }

    double normal() { return norm_quantile(uniform()); }

    double normal(double mean, double sd) { return mean + sd * normal(); }

    double lognormal(double meanlog, double sdlog) { return std::exp(normal(meanlog, sdlog)); }

    double truncated_lognormal(double meanlog, double sdlog, double lo, double hi) {
        for (int i = 0; i < 100000; ++i) {
            const double x = lognormal(meanlog, sdlog);
            if (x >= lo && x <= hi) return x;
        }
        throw std::runtime_error("truncated_lognormal: acceptance region too small");
    }

    /// Gamma(shape, scale=1) via Marsaglia-Tsang.
    double gamma(double shape) {
        if (!(shape > 0.0)) throw std::domain_error("gamma: shape <= 0");
        if (shape < 1.0) {
            const double u = uniform();
            return gamma(shape + 1.0) * std::pow(u, 1.0 / shape);
        }
        const double d = shape - 1.0 / 3.0;
        const double c = 1.0 / std::sqrt(9.0 * d);
        for (;;) {
            double x, v;
            do {
                x = normal();
                v = 1.0 + c * x;
            } while (v <= 0.0);
            v = v * v * v;
            const double u = uniform();
            if (u < 1.0 - 0.0331 * x * x * x * x) return d * v;
            if (std::log(u) < 0.5 * x * x + d * (1.0 - v + std::log(v))) return d * v;
        }
    }

    double chi_squared(double df) { return 2.0 * gamma(df / 2.0); }

    double student_t(double df) {
        const double z = normal();
        const double g = chi_squared(df);
        return z / std::sqrt(g / df);
    }

    /// Poisson by inversion (small means only).
    int poisson(double lambda) {
        if (lambda < 0.0) throw std::domain_error("poisson: lambda < 0");
        if (lambda > 30.0) throw std::domain_error("poisson: inversion sampler needs small lambda");
        const double u = uniform();
        double p = std::exp(-lambda), cum = p;
        int k = 0;
        while (u > cum && k < 200) {
            ++k;
            p *= lambda / k;
            cum += p;
        }
        return k;
    }

    /// Zero-adjusted Poisson: P(0) = p0, else truncated Poisson(lambda) >= 1.
    int zero_adjusted_poisson(double lambda, double p0) {
        if (bernoulli(p0)) return 0;
        for (int i = 0; i < 100000; ++i) {
            const int k = poisson(lambda);
            if (k >= 1) return k;
        }
        return 1;
    }

  private:
    static std::uint64_t mix(std::uint64_t seed, std::uint64_t stream) {
        // splitmix64 over (seed, stream)
        std::uint64_t z = seed + 0x9e3779b97f4a7c15ULL * (stream + 1);
        z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
        z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
        return z ^ (z >> 31);
    }

    std::uint64_t seed_ = 0;
    std::mt19937_64 engine_;
};

}  // namespace gaws

#endif
