#include <catch2/catch_amalgamated.hpp>

#include <cmath>

#include "gaws/math.hpp"
#include "gaws/rng.hpp"

using namespace gaws;

TEST_CASE("normal quantile inverts the normal cdf", "[math]") {
    for (double u : {1e-12, 1e-6, 0.01, 0.2, 0.5, 0.77, 0.99, 1.0 - 1e-9}) {
        const double z = norm_quantile(u);
        REQUIRE(norm_cdf(z) == Catch::Approx(u).epsilon(1e-12).margin(1e-15));
    }
    REQUIRE(norm_quantile(0.5) == 0.0);
    REQUIRE(norm_quantile(0.975) == Catch::Approx(1.959963984540054).epsilon(1e-12));
}

TEST_CASE("digamma and trigamma agree with known values", "[math]") {
    // psi(1) = -gamma_E, psi'(1) = pi^2/6
    REQUIRE(digamma(1.0) == Catch::Approx(-0.5772156649015329).epsilon(1e-12));
    REQUIRE(trigamma(1.0) == Catch::Approx(M_PI * M_PI / 6.0).epsilon(1e-12));
    REQUIRE(digamma(10.5) == Catch::Approx(2.3030010342976864).epsilon(1e-13));
    REQUIRE(digamma(0.3) == Catch::Approx(-3.502524222200133).epsilon(1e-13));
    // recurrence psi(x+1) = psi(x) + 1/x
    for (double x : {0.3, 1.7, 4.2, 9.9}) {
        REQUIRE(digamma(x + 1.0) == Catch::Approx(digamma(x) + 1.0 / x).epsilon(1e-12));
        REQUIRE(trigamma(x + 1.0) == Catch::Approx(trigamma(x) - 1.0 / (x * x)).epsilon(1e-11));
    }
}

TEST_CASE("incomplete gamma and beta", "[math]") {
    // P(1, x) = 1 - exp(-x)
    for (double x : {0.1, 1.0, 3.5}) {
        REQUIRE(gamma_p(1.0, x) == Catch::Approx(1.0 - std::exp(-x)).epsilon(1e-12));
    }
    // I_x(1, 1) = x
    REQUIRE(beta_inc(1.0, 1.0, 0.3) == Catch::Approx(0.3).epsilon(1e-12));
    // symmetry I_x(a,b) = 1 - I_{1-x}(b,a)
    REQUIRE(beta_inc(2.5, 4.0, 0.4) ==
            Catch::Approx(1.0 - beta_inc(4.0, 2.5, 0.6)).epsilon(1e-12));
    // t cdf: df=1 is Cauchy
    REQUIRE(student_t_cdf(1.0, 1.0) == Catch::Approx(0.75).epsilon(1e-10));
    REQUIRE(student_t_cdf(0.0, 7.0) == 0.5);
    // large df approaches normal
    REQUIRE(student_t_cdf(1.96, 1e7) == Catch::Approx(norm_cdf(1.96)).margin(1e-6));
}

TEST_CASE("adaptive simpson integrates smooth functions", "[math]") {
    const double val = integrate([](double x) { return std::exp(-x * x / 2.0); }, -8.0, 8.0, 1e-10);
    REQUIRE(val == Catch::Approx(std::sqrt(2.0 * M_PI)).epsilon(1e-9));
    REQUIRE(integrate([](double x) { return x * x; }, 0.0, 1.0, 1e-12) ==
            Catch::Approx(1.0 / 3.0).epsilon(1e-12));
}

TEST_CASE("rng determinism and moments", "[math][rng]") {
    Rng a(42), b(42);
    for (int i = 0; i < 100; ++i) REQUIRE(a.raw() == b.raw());

    Rng r(7);
    const int n = 50000;
    double sum = 0.0, sq = 0.0;
    for (int i = 0; i < n; ++i) {
        const double z = r.normal();
        sum += z;
        sq += z * z;
    }
    REQUIRE(sum / n == Catch::Approx(0.0).margin(0.02));
    REQUIRE(sq / n == Catch::Approx(1.0).margin(0.03));

    // gamma mean/variance
    double gm = 0.0, gv = 0.0;
    const double shape = 3.5;
    for (int i = 0; i < n; ++i) {
        const double g = r.gamma(shape);
        gm += g;
        gv += g * g;
    }
    gm /= n;
    gv = gv / n - gm * gm;
    REQUIRE(gm == Catch::Approx(shape).margin(0.05));
    REQUIRE(gv == Catch::Approx(shape).margin(0.15));
}

TEST_CASE("ks statistic behaves", "[math]") {
    Rng r(11);
    std::vector<double> z(2000);
    for (auto& v : z) v = r.normal();
    const double d = ks_statistic(z, [](double x) { return norm_cdf(x); });
    REQUIRE(d < ks_critical(z.size(), 0.01));
    // shifted sample should fail
    for (auto& v : z) v += 0.5;
    REQUIRE(ks_statistic(z, [](double x) { return norm_cdf(x); }) >
            ks_critical(z.size(), 0.01));
}

TEST_CASE("median and mad", "[math]") {
    REQUIRE(median({3.0, 1.0, 2.0}) == 2.0);
    REQUIRE(median({4.0, 1.0, 2.0, 3.0}) == 2.5);
    REQUIRE(mad({1.0, 1.0, 1.0, 10.0}) == 0.0);
}
