#ifndef GAWS_DISTRIBUTIONS_HPP
#define GAWS_DISTRIBUTIONS_HPP

#include <array>
#include <cmath>
#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

#include "gaws/math.hpp"
#include "gaws/rng.hpp"
#include "gaws/series.hpp"

namespace gaws {

enum class FamilyId : std::uint8_t { Normal, LogNormal, Gamma, BCCG, LogT };

enum class ParamRole : std::uint8_t { Mu = 0, Sigma = 1, Nu = 2, Tau = 3 };
inline constexpr std::size_t kMaxParams = 4;

enum class LinkFn : std::uint8_t { Identity, Log };

inline const char* family_name(FamilyId f) {
    switch (f) {
        case FamilyId::Normal: return "normal";
        case FamilyId::LogNormal: return "lognormal";
        case FamilyId::Gamma: return "gamma";
        case FamilyId::BCCG: return "bccg";
        case FamilyId::LogT: return "logt";
    }
    return "?";
}

inline FamilyId family_from_name(const std::string& s) {
    if (s == "normal") return FamilyId::Normal;
    if (s == "lognormal") return FamilyId::LogNormal;
    if (s == "gamma") return FamilyId::Gamma;
    if (s == "bccg") return FamilyId::BCCG;
    if (s == "logt") return FamilyId::LogT;
    throw std::invalid_argument("unknown family: " + s);
}

inline const char* role_name(ParamRole r) {
    switch (r) {
        case ParamRole::Mu: return "mu";
        case ParamRole::Sigma: return "sigma";
        case ParamRole::Nu: return "nu";
        case ParamRole::Tau: return "tau";
    }
    return "?";
}

inline ParamRole role_from_name(const std::string& s) {
    if (s == "mu") return ParamRole::Mu;
    if (s == "sigma") return ParamRole::Sigma;
    if (s == "nu") return ParamRole::Nu;
    if (s == "tau") return ParamRole::Tau;
    throw std::invalid_argument("unknown parameter role: " + s);
}

/// A distribution family together with its per-parameter link functions.
struct DistributionFamily {
    FamilyId id = FamilyId::Normal;
    std::array<LinkFn, kMaxParams> links{LinkFn::Identity, LinkFn::Log, LinkFn::Identity,
                                         LinkFn::Log};

    std::size_t n_params() const {
        switch (id) {
            case FamilyId::Normal:
            case FamilyId::LogNormal:
            case FamilyId::Gamma: return 2;
            case FamilyId::BCCG: return 3;
            case FamilyId::LogT: return 3;  // mu, sigma, tau
        }
        return 2;
    }

    /// Roles in fitting order.
    std::vector<ParamRole> roles() const {
        switch (id) {
            case FamilyId::Normal:
            case FamilyId::LogNormal:
            case FamilyId::Gamma: return {ParamRole::Mu, ParamRole::Sigma};
            case FamilyId::BCCG: return {ParamRole::Mu, ParamRole::Sigma, ParamRole::Nu};
            case FamilyId::LogT: return {ParamRole::Mu, ParamRole::Sigma, ParamRole::Tau};
        }
        return {};
    }

    LinkFn link(ParamRole r) const { return links[static_cast<std::size_t>(r)]; }

    bool positive_support() const { return id != FamilyId::Normal; }

    static DistributionFamily make(FamilyId id) {
        DistributionFamily f;
        f.id = id;
        // log links everywhere by default; identity for Normal location and
        // for the BCCG skewness (which ranges over negative values).
        f.links = {LinkFn::Log, LinkFn::Log, LinkFn::Identity, LinkFn::Log};
        if (id == FamilyId::Normal) f.links[0] = LinkFn::Identity;
        return f;
    }
};

/// Per-role parameter value set at a single observation.
struct ParamValues {
    double mu = 0.0;
    double sigma = 1.0;
    double nu = 0.0;
    double tau = 10.0;

    double get(ParamRole r) const {
        switch (r) {
            case ParamRole::Mu: return mu;
            case ParamRole::Sigma: return sigma;
            case ParamRole::Nu: return nu;
            case ParamRole::Tau: return tau;
        }
        return 0.0;
    }
    void set(ParamRole r, double v) {
        switch (r) {
            case ParamRole::Mu: mu = v; break;
            case ParamRole::Sigma: sigma = v; break;
            case ParamRole::Nu: nu = v; break;
            case ParamRole::Tau: tau = v; break;
        }
    }
};

/// Time-indexed parameters on the natural scale.
struct ParameterVector {
    std::vector<double> mu, sigma, nu, tau;

    std::size_t size() const { return mu.size(); }

    ParamValues at(std::size_t t) const {
        ParamValues p;
        p.mu = mu[t];
        p.sigma = sigma.empty() ? 1.0 : sigma[t];
        p.nu = nu.empty() ? 0.0 : nu[t];
        p.tau = tau.empty() ? 10.0 : tau[t];
        return p;
    }

    static ParameterVector constant(std::size_t n, const ParamValues& p) {
        ParameterVector v;
        v.mu.assign(n, p.mu);
        v.sigma.assign(n, p.sigma);
        v.nu.assign(n, p.nu);
        v.tau.assign(n, p.tau);
        return v;
    }
};

inline double apply_link(LinkFn link, double theta) {
    switch (link) {
        case LinkFn::Identity: return theta;
        case LinkFn::Log:
            if (!(theta > 0.0)) throw std::domain_error("apply_link: log link needs theta > 0");
            return std::log(theta);
    }
    return theta;
}

inline double invert_link(LinkFn link, double eta) {
    switch (link) {
        case LinkFn::Identity: return eta;
        case LinkFn::Log: return std::exp(eta);
    }
    return eta;
}

inline double apply_link(const DistributionFamily& f, ParamRole r, double theta) {
    return apply_link(f.link(r), theta);
}
inline double invert_link(const DistributionFamily& f, ParamRole r, double eta) {
    return invert_link(f.link(r), eta);
}

inline bool in_support(FamilyId id, double y) {
    if (id == FamilyId::Normal) return std::isfinite(y);
    return std::isfinite(y) && y > 0.0;
}

namespace detail {

inline void check_params(FamilyId id, const ParamValues& p) {
    if (!(p.sigma > 0.0)) throw std::domain_error("log_density: sigma <= 0");
    if ((id == FamilyId::Gamma || id == FamilyId::LogNormal || id == FamilyId::BCCG ||
         id == FamilyId::LogT) &&
        !(p.mu > 0.0))
        throw std::domain_error("log_density: mu <= 0 for positive-support family");
    if (id == FamilyId::LogT && !(p.tau > 0.0)) throw std::domain_error("log_density: tau <= 0");
}

/// BCCG z-transform; the nu = 0 branch is the log form.
inline double bccg_z(double y, double mu, double sigma, double nu) {
    if (nu != 0.0) return (std::pow(y / mu, nu) - 1.0) / (nu * sigma);
    return std::log(y / mu) / sigma;
}

}  // namespace detail

/// Log density of y under the family at pointwise parameter values.
inline double log_density(FamilyId id, double y, const ParamValues& p) {
    detail::check_params(id, p);
    if (!in_support(id, y)) throw std::domain_error("log_density: y outside support");
    switch (id) {
        case FamilyId::Normal: {
            const double z = (y - p.mu) / p.sigma;
            return -std::log(p.sigma) + norm_logpdf(z);
        }
        case FamilyId::LogNormal: {
            const double z = std::log(y / p.mu) / p.sigma;
            return -std::log(y) - std::log(p.sigma) + norm_logpdf(z);
        }
        case FamilyId::Gamma: {
            const double k = 1.0 / (p.sigma * p.sigma);
            return k * (std::log(k) - std::log(p.mu)) + (k - 1.0) * std::log(y) -
                   k * y / p.mu - std::lgamma(k);
        }
        case FamilyId::BCCG: {
            const double z = detail::bccg_z(y, p.mu, p.sigma, p.nu);
            return (p.nu - 1.0) * std::log(y) - p.nu * std::log(p.mu) - std::log(p.sigma) +
                   norm_logpdf(z);
        }
        case FamilyId::LogT: {
            const double u = std::log(y / p.mu) / p.sigma;
            const double t = p.tau;
            return std::lgamma(0.5 * (t + 1.0)) - std::lgamma(0.5 * t) -
                   0.5 * std::log(t * M_PI) - std::log(p.sigma) - std::log(y) -
                   0.5 * (t + 1.0) * std::log1p(u * u / t);
        }
    }
    throw std::logic_error("log_density: unreachable");
}

/// CDF of y under the family. The BCCG branch integrates the density exactly
/// through the z substitution; the printed density carries no truncation
/// normalization, so for nu < 0 the total mass is Phi(1/(sigma*|nu|)).
inline double cdf(FamilyId id, double y, const ParamValues& p) {
    detail::check_params(id, p);
    if (id == FamilyId::Normal) return norm_cdf((y - p.mu) / p.sigma);
    if (!(y > 0.0)) return 0.0;
    switch (id) {
        case FamilyId::LogNormal: return norm_cdf(std::log(y / p.mu) / p.sigma);
        case FamilyId::Gamma: {
            const double k = 1.0 / (p.sigma * p.sigma);
            return gamma_p(k, k * y / p.mu);
        }
        case FamilyId::BCCG: {
            const double z = detail::bccg_z(y, p.mu, p.sigma, p.nu);
            if (p.nu > 0.0) {
                const double zlo = -1.0 / (p.nu * p.sigma);
                return norm_cdf(z) - norm_cdf(zlo);
            }
            return norm_cdf(z);
        }
        case FamilyId::LogT: return student_t_cdf(std::log(y / p.mu) / p.sigma, p.tau);
        default: break;
    }
    throw std::logic_error("cdf: unreachable");
}

/// Total probability mass of the printed BCCG density (< 1 when nu != 0).
inline double bccg_mass(double sigma, double nu) {
    if (nu == 0.0) return 1.0;
    return norm_cdf(1.0 / (sigma * std::abs(nu)));
}

/// One random draw. BCCG uses the inverse z-transform with the standard
/// normal truncated to the region where 1 + nu*sigma*z > 0.
inline double sample(FamilyId id, const ParamValues& p, Rng& rng) {
    detail::check_params(id, p);
    switch (id) {
        case FamilyId::Normal: return rng.normal(p.mu, p.sigma);
        case FamilyId::LogNormal: return p.mu * std::exp(p.sigma * rng.normal());
        case FamilyId::Gamma: {
            const double k = 1.0 / (p.sigma * p.sigma);
            return rng.gamma(k) * p.mu / k;
        }
        case FamilyId::BCCG: {
            if (p.nu == 0.0) return p.mu * std::exp(p.sigma * rng.normal());
            double z;
            do {
                z = rng.normal();
            } while (1.0 + p.nu * p.sigma * z <= 0.0);
            return p.mu * std::pow(1.0 + p.nu * p.sigma * z, 1.0 / p.nu);
        }
        case FamilyId::LogT: return p.mu * std::exp(p.sigma * rng.student_t(p.tau));
    }
    throw std::logic_error("sample: unreachable");
}

/// Normalized quantile residuals Phi^-1(F(y_t)); one value per observed t.
/// All supported families are continuous, so the result is deterministic
/// (the rng argument exists for future discrete families).
inline std::vector<double> quantile_residuals(FamilyId id, const TimeSeriesSample& y,
                                              const ParameterVector& params,
                                              std::uint64_t /*rng_seed*/ = 0) {
    if (params.size() != y.size())
        throw std::invalid_argument("quantile_residuals: parameter/series length mismatch");
    std::vector<double> out;
    out.reserve(y.size());
    constexpr double eps = 1e-15;
    for (std::size_t t = 0; t < y.size(); ++t) {
        if (!y.valid[t]) continue;
        double u = cdf(id, y.values[t], params.at(t));
        u = std::min(1.0 - eps, std::max(eps, u));
        out.push_back(norm_quantile(u));
    }
    return out;
}

}  // namespace gaws

#endif
