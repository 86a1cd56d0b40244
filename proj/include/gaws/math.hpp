#ifndef GAWS_MATH_HPP
#define GAWS_MATH_HPP

#include <algorithm>
#include <cmath>
#include <cstddef>
#include <functional>
#include <limits>
#include <stdexcept>
#include <vector>

namespace gaws {

inline constexpr double kLog2Pi = 1.8378770664093454835606594728112353;
inline constexpr double kSqrt2 = 1.4142135623730950488016887242096981;

inline double norm_logpdf(double z) { return -0.5 * (kLog2Pi + z * z); }

inline double norm_cdf(double z) { return 0.5 * std::erfc(-z / kSqrt2); }

/// Inverse standard normal CDF (Wichura's PPND16, ~1e-15 accurate).
inline double norm_quantile(double p) {
    if (!(p > 0.0 && p < 1.0)) {
        if (p == 0.0) return -std::numeric_limits<double>::infinity();
        if (p == 1.0) return std::numeric_limits<double>::infinity();
        throw std::domain_error("norm_quantile: p outside [0,1]");
    }
    const double q = p - 0.5;
    double r, x;
    if (std::abs(q) <= 0.425) {
        r = 0.180625 - q * q;
        x = q *
            (((((((2.5090809287301226727e3 * r + 3.3430575583588128105e4) * r +
                  6.7265770927008700853e4) * r + 4.5921953931549871457e4) * r +
                1.3731693765509461125e4) * r + 1.9715909503065514427e3) * r +
               1.3314166789178437745e2) * r + 3.3871328727963666080e0) /
            (((((((5.2264952788528545610e3 * r + 2.8729085735721942674e4) * r +
                  3.9307895800092710610e4) * r + 2.1213794301586595867e4) * r +
                5.3941960214247511077e3) * r + 6.8718700749205790830e2) * r +
               4.2313330701600911252e1) * r + 1.0);
        return x;
    }
    r = q < 0.0 ? p : 1.0 - p;
    r = std::sqrt(-std::log(r));
    if (r <= 5.0) {
        r -= 1.6;
        x = (((((((7.74545014278341407640e-4 * r + 2.27238449892691845833e-2) * r +
                  2.41780725177450611770e-1) * r + 1.27045825245236838258e0) * r +
                3.64784832476320460504e0) * r + 5.76949722146069140550e0) * r +
               4.63033784615654529590e0) * r + 1.42343711074968357734e0) /
            (((((((1.05075007164441684324e-9 * r + 5.47593808499534494600e-4) * r +
                  1.51986665636164571966e-2) * r + 1.48103976427480074590e-1) * r +
                6.89767334985100004550e-1) * r + 1.67638483018380384940e0) * r +
               2.05319162663775882187e0) * r + 1.0);
    } else {
        r -= 5.0;
        x = (((((((2.01033439929228813265e-7 * r + 2.71155556874348757815e-5) * r +
                  1.24266094738807843860e-3) * r + 2.65321895265761230930e-2) * r +
                2.96560571828504891230e-1) * r + 1.78482653991729133580e0) * r +
               5.46378491116411436990e0) * r + 6.65790464350110377720e0) /
            (((((((2.04426310338993978564e-15 * r + 1.42151175831644588870e-7) * r +
                  1.84631831751005468180e-5) * r + 7.86869131145613259100e-4) * r +
                1.48753612908506148525e-2) * r + 1.36929880922735805310e-1) * r +
               5.99832206555887937690e-1) * r + 1.0);
    }
    return q < 0.0 ? -x : x;
}

/// Digamma via recurrence + asymptotic expansion.
inline double digamma(double x) {
    if (!(x > 0.0)) throw std::domain_error("digamma: x <= 0");
    double result = 0.0;
    while (x < 6.0) {
        result -= 1.0 / x;
        x += 1.0;
    }
    const double inv = 1.0 / x, inv2 = inv * inv;
    result += std::log(x) - 0.5 * inv -
              inv2 * (1.0 / 12.0 - inv2 * (1.0 / 120.0 - inv2 * (1.0 / 252.0 - inv2 / 240.0)));
    return result;
}

inline double trigamma(double x) {
    if (!(x > 0.0)) throw std::domain_error("trigamma: x <= 0");
    double result = 0.0;
    while (x < 6.0) {
        result += 1.0 / (x * x);
        x += 1.0;
    }
    const double inv = 1.0 / x, inv2 = inv * inv;
    result += inv * (1.0 + 0.5 * inv +
                     inv2 * (1.0 / 6.0 - inv2 * (1.0 / 30.0 - inv2 * (1.0 / 42.0 - inv2 / 30.0))));
    return result;
}

namespace detail {

inline double gamma_p_series(double a, double x) {
    double term = 1.0 / a, sum = term, ap = a;
    for (int n = 0; n < 500; ++n) {
        ap += 1.0;
        term *= x / ap;
        sum += term;
        if (std::abs(term) < std::abs(sum) * 1e-16) break;
    }
    return sum * std::exp(-x + a * std::log(x) - std::lgamma(a));
}

inline double gamma_q_contfrac(double a, double x) {
    const double tiny = 1e-300;
    double b = x + 1.0 - a, c = 1.0 / tiny, d = 1.0 / b, h = d;
    for (int i = 1; i <= 500; ++i) {
        const double an = -static_cast<double>(i) * (i - a);
        b += 2.0;
        d = an * d + b;
        if (std::abs(d) < tiny) d = tiny;
        c = b + an / c;
        if (std::abs(c) < tiny) c = tiny;
        d = 1.0 / d;
        const double del = d * c;
        h *= del;
        if (std::abs(del - 1.0) < 1e-16) break;
    }
    return h * std::exp(-x + a * std::log(x) - std::lgamma(a));
}

inline double betacf(double a, double b, double x) {
    const double tiny = 1e-300;
    const double qab = a + b, qap = a + 1.0, qam = a - 1.0;
    double c = 1.0, d = 1.0 - qab * x / qap;
    if (std::abs(d) < tiny) d = tiny;
    d = 1.0 / d;
    double h = d;
    for (int m = 1; m <= 300; ++m) {
        const int m2 = 2 * m;
        double aa = m * (b - m) * x / ((qam + m2) * (a + m2));
        d = 1.0 + aa * d;
        if (std::abs(d) < tiny) d = tiny;
        c = 1.0 + aa / c;
        if (std::abs(c) < tiny) c = tiny;
        d = 1.0 / d;
        h *= d * c;
        aa = -(a + m) * (qab + m) * x / ((a + m2) * (qap + m2));
        d = 1.0 + aa * d;
        if (std::abs(d) < tiny) d = tiny;
        c = 1.0 + aa / c;
        if (std::abs(c) < tiny) c = tiny;
        d = 1.0 / d;
        const double del = d * c;
        h *= del;
        if (std::abs(del - 1.0) < 1e-16) break;
    }
    return h;
}

}  // namespace detail

/// Regularized lower incomplete gamma P(a, x).
inline double gamma_p(double a, double x) {
    if (!(a > 0.0) || x < 0.0) throw std::domain_error("gamma_p: invalid arguments");
    if (x == 0.0) return 0.0;
    if (x < a + 1.0) return detail::gamma_p_series(a, x);
    return 1.0 - detail::gamma_q_contfrac(a, x);
}

/// Regularized incomplete beta I_x(a, b).
inline double beta_inc(double a, double b, double x) {
    if (!(a > 0.0) || !(b > 0.0)) throw std::domain_error("beta_inc: invalid shape");
    if (x <= 0.0) return 0.0;
    if (x >= 1.0) return 1.0;
    const double lbeta = std::lgamma(a) + std::lgamma(b) - std::lgamma(a + b);
    const double front = std::exp(a * std::log(x) + b * std::log1p(-x) - lbeta);
    if (x < (a + 1.0) / (a + b + 2.0)) return front * detail::betacf(a, b, x) / a;
    return 1.0 - front * detail::betacf(b, a, 1.0 - x) / b;
}

/// Student-t CDF with df degrees of freedom.
inline double student_t_cdf(double x, double df) {
    if (!(df > 0.0)) throw std::domain_error("student_t_cdf: df <= 0");
    if (x == 0.0) return 0.5;
    const double ib = beta_inc(df / 2.0, 0.5, df / (df + x * x));
    return x > 0.0 ? 1.0 - 0.5 * ib : 0.5 * ib;
}

namespace detail {

inline double simpson(const std::function<double(double)>& f, double a, double b, double fa,
                      double fm, double fb, double whole, double tol, int depth) {
    const double m = 0.5 * (a + b);
    const double lm = 0.5 * (a + m), rm = 0.5 * (m + b);
    const double flm = f(lm), frm = f(rm);
    const double left = (m - a) / 6.0 * (fa + 4.0 * flm + fm);
    const double right = (b - m) / 6.0 * (fm + 4.0 * frm + fb);
    const double delta = left + right - whole;
    if (depth <= 0 || std::abs(delta) <= 15.0 * tol) return left + right + delta / 15.0;
    return simpson(f, a, m, fa, flm, fm, left, 0.5 * tol, depth - 1) +
           simpson(f, m, b, fm, frm, fb, right, 0.5 * tol, depth - 1);
}

}  // namespace detail

/// Adaptive Simpson quadrature with absolute tolerance.
inline double integrate(const std::function<double(double)>& f, double a, double b,
                        double abs_tol = 1e-8, int max_depth = 40) {
    if (a == b) return 0.0;
    const double m = 0.5 * (a + b);
    const double fa = f(a), fm = f(m), fb = f(b);
    const double whole = (b - a) / 6.0 * (fa + 4.0 * fm + fb);
    return detail::simpson(f, a, b, fa, fm, fb, whole, abs_tol, max_depth);
}

/// One-sample Kolmogorov-Smirnov statistic against a CDF.
inline double ks_statistic(std::vector<double> sample, const std::function<double(double)>& cdf) {
    if (sample.empty()) throw std::invalid_argument("ks_statistic: empty sample");
    std::sort(sample.begin(), sample.end());
    const double n = static_cast<double>(sample.size());
    double d = 0.0;
    for (std::size_t i = 0; i < sample.size(); ++i) {
        const double F = cdf(sample[i]);
        d = std::max(d, std::max((i + 1.0) / n - F, F - i / n));
    }
    return d;
}

/// Asymptotic KS critical value at significance level alpha.
inline double ks_critical(std::size_t n, double alpha) {
    return std::sqrt(-0.5 * std::log(alpha / 2.0)) / std::sqrt(static_cast<double>(n));
}

inline double median(std::vector<double> v) {
    if (v.empty()) throw std::invalid_argument("median: empty");
    const std::size_t k = v.size() / 2;
    std::nth_element(v.begin(), v.begin() + k, v.end());
    double hi = v[k];
    if (v.size() % 2 == 1) return hi;
    std::nth_element(v.begin(), v.begin() + k - 1, v.end());
    return 0.5 * (hi + v[k - 1]);
}

/// Median absolute deviation (unscaled).
inline double mad(const std::vector<double>& v) {
    const double m = median(v);
    std::vector<double> dev(v.size());
    for (std::size_t i = 0; i < v.size(); ++i) dev[i] = std::abs(v[i] - m);
    return median(dev);
}

}  // namespace gaws

#endif
