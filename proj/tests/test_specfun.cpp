#include <cmath>
#include <numbers>
#include <random>

#include "doctest.h"
#include "invsq/specfun.hpp"
#include "oracles.hpp"

namespace sf = invsq::specfun;
using sf::ImagOrder;

namespace {
constexpr double kPi = std::numbers::pi;
}

TEST_CASE("ImagOrder construction and round trip") {
    CHECK_THROWS_AS(ImagOrder(-0.1), std::domain_error);
    CHECK_THROWS_AS(ImagOrder::from_rho0_sq(0.25), std::domain_error);
    CHECK_THROWS_AS(ImagOrder::from_rho0_sq(0.2), std::domain_error);
    const ImagOrder order = ImagOrder::from_rho0_sq(50.0);
    CHECK(order.g() == doctest::Approx(std::sqrt(49.75)).epsilon(1e-15));
    for (double rho0_sq : {0.2500001, 0.26, 1.0, 50.0, 4900.0}) {
        const ImagOrder o = ImagOrder::from_rho0_sq(rho0_sq);
        CHECK(o.rho0_sq() == doctest::Approx(rho0_sq).epsilon(1e-14));
    }
}

TEST_CASE("bessel_k_im reproduces K0 at g = 0") {
    const ImagOrder g0(0.0);
    // Frozen from the independent simpson oracle of int_0^inf e^{-x cosh t} dt.
    CHECK(sf::bessel_k_im(g0, 1.0) == doctest::Approx(0.42102443824070834).epsilon(1e-12));
    for (double x : {0.1, 1.0, 5.0, 10.0}) {
        CHECK(sf::bessel_k_im(g0, x) ==
              doctest::Approx(oracles::bessel_k0(x)).epsilon(1e-10));
        CHECK(sf::bessel_k_im_deriv(g0, x) ==
              doctest::Approx(-oracles::bessel_k1(x)).epsilon(1e-10));
    }
}

TEST_CASE("bessel_k_im domain and determinism") {
    const ImagOrder g1(1.0);
    CHECK_THROWS_AS(sf::bessel_k_im(g1, 0.0), std::domain_error);
    CHECK_THROWS_AS(sf::bessel_k_im(g1, -2.0), std::domain_error);
    CHECK_THROWS_AS(sf::bessel_k_im_deriv(g1, 0.0), std::domain_error);
    // The integrand is even in g, so equal orders must give bit-equal values.
    CHECK(sf::bessel_k_im(ImagOrder(1.0), 0.7) == sf::bessel_k_im(ImagOrder(1.0), 0.7));
}

TEST_CASE("bessel_k_im at large argument") {
    // Frozen from the simpson oracle at rel_tol 1e-14. The naive leading
    // asymptotic sqrt(pi/2x) e^{-x} is ~3.4x too large here because x ~ g^2/2;
    // the Gaussian phase factor e^{-g^2/(2x)} restores it to ~1%.
    const double g = 7.05337;
    const double v = sf::bessel_k_im(ImagOrder(g), 20.0);
    CHECK(v == doctest::Approx(1.6852061922590629e-10).epsilon(1e-10));
    const double lead = std::sqrt(kPi / 40.0) * std::exp(-20.0);
    CHECK(v / (lead * std::exp(-g * g / 40.0)) == doctest::Approx(1.0).epsilon(0.05));
}

TEST_CASE("derivative agrees with central differences") {
    for (double g : {0.5, 1.0, 7.053}) {
        const ImagOrder order(g);
        for (double x : {1e-3, 1e-2, 0.1, 1.0, 10.0}) {
            const double h = 1e-6 * x;
            const double fd =
                (sf::bessel_k_im(order, x + h) - sf::bessel_k_im(order, x - h)) / (2.0 * h);
            const double an = sf::bessel_k_im_deriv(order, x);
            CHECK(an == doctest::Approx(fd).epsilon(1e-6));
        }
    }
}

TEST_CASE("derivative approaches -K at large argument") {
    const ImagOrder g1(1.0);
    const double ratio = sf::bessel_k_im_deriv(g1, 30.0) / (-sf::bessel_k_im(g1, 30.0));
    CHECK(ratio > 0.95);
    CHECK(ratio < 1.05);
}

TEST_CASE("K_ig satisfies the modified Bessel equation") {
    // x^2 K'' + x K' - (x^2 - g^2) K = 0, with K'' from the differentiated
    // integrand evaluated by the independent simpson oracle.
    for (double g : {0.5, 1.0, 7.053}) {
        const ImagOrder order(g);
        for (double x : {0.5, 1.0, 2.0}) {
            const double k = sf::bessel_k_im(order, x);
            const double kp = sf::bessel_k_im_deriv(order, x);
            const double T = std::acosh(745.0 / x) + 3.0;
            const double kpp = oracles::simpson(
                [x, g](double t) {
                    const double c = std::cosh(t);
                    return std::exp(-x * c) * c * c * std::cos(g * t);
                },
                0.0, T, 1e-12);
            const double residual = x * x * kpp + x * kp - (x * x - g * g) * k;
            CHECK(std::fabs(residual) < 1e-6 * std::fabs(k));
        }
    }
}

TEST_CASE("small-argument form tracks the integral representation") {
    for (double g : {0.5, 1.0, 7.053}) {
        const ImagOrder order(g);
        double prev_dev = 1.0;
        for (double x : {1e-3, 1e-4, 1e-5}) {
            const double ratio = sf::bessel_k_im_smallx(order, x) / sf::bessel_k_im(order, x);
            const double dev = std::fabs(ratio - 1.0);
            if (x <= 1e-4) {
                CHECK(ratio > 0.99);
                CHECK(ratio < 1.01);
            }
            CHECK(dev < prev_dev);
            prev_dev = dev;
        }
    }
}

TEST_CASE("small-argument form: zeros and log-periodicity") {
    const ImagOrder order(1.0);
    const double g = 1.0;
    const double phi0 = sf::arg_gamma(0, order);
    // Zeros exactly where g ln(x/2) - phi(0) = m pi.
    const double x_zero = 2.0 * std::exp((phi0 - 3.0 * kPi) / g);
    CHECK(std::fabs(sf::bessel_k_im_smallx(order, x_zero)) < 1e-12);
    // |value| is invariant under x -> x e^{pi/g}.
    const ImagOrder order2(2.0);
    const double x = 1e-4;
    const double shift = std::exp(kPi / 2.0);
    CHECK(std::fabs(sf::bessel_k_im_smallx(order2, x)) ==
          doctest::Approx(std::fabs(sf::bessel_k_im_smallx(order2, x * shift))).epsilon(1e-10));
}

TEST_CASE("arg_gamma against the complex log-gamma oracle") {
    CHECK(sf::arg_gamma(0, ImagOrder(0.0)) == 0.0);
    for (double g : {0.1, 1.0, 3.0, 7.053}) {
        for (int k : {0, 1, 5}) {
            CHECK(sf::arg_gamma(k, ImagOrder(g)) ==
                  doctest::Approx(oracles::arg_gamma(k, g)).epsilon(5e-11));
        }
    }
    // Leading order -gamma g for small g.
    const double g = 1e-4;
    CHECK(sf::arg_gamma(0, ImagOrder(g)) ==
          doctest::Approx(-sf::euler_gamma * g).epsilon(1e-3));
    CHECK_THROWS_AS(sf::arg_gamma(-1, ImagOrder(1.0)), std::invalid_argument);
}

TEST_CASE("digamma at positive integers") {
    CHECK(sf::digamma_int(1) == doctest::Approx(-sf::euler_gamma).epsilon(1e-15));
    CHECK(sf::digamma_int(2) == doctest::Approx(1.0 - sf::euler_gamma).epsilon(1e-15));
    CHECK(sf::digamma_int(5) ==
          doctest::Approx(1.0 + 0.5 + 1.0 / 3.0 + 0.25 - sf::euler_gamma).epsilon(1e-15));
    CHECK_THROWS_AS(sf::digamma_int(0), std::invalid_argument);
}

TEST_CASE("sinc") {
    CHECK(sf::sinc(0.0) == 1.0);
    CHECK(std::fabs(sf::sinc(kPi)) < 1e-15);
    CHECK(sf::sinc(1.0) == doctest::Approx(0.8414709848078965).epsilon(1e-12));
    // Series and direct evaluation agree across the switch point.
    CHECK(sf::sinc(0.99e-4) == doctest::Approx(sf::sinc(1.01e-4)).epsilon(1e-8));
    CHECK(sf::sinc(-1.0) == sf::sinc(1.0));
}

TEST_CASE("sine integral") {
    CHECK(sf::sine_integral(0.0) == 0.0);
    CHECK(sf::sine_integral(1.0) == doctest::Approx(0.94608307036718298).epsilon(1e-12));
    CHECK(sf::sine_integral(1e6) == doctest::Approx(kPi / 2.0).epsilon(1e-5));
    CHECK_THROWS_AS(sf::sine_integral(-1.0), std::domain_error);
    for (double z : {0.5, 3.0, 5.9999, 6.0001, 8.0, 15.0, 25.0, 39.9, 40.1, 60.0}) {
        const double oracle = oracles::simpson(
            [](double t) { return t == 0.0 ? 1.0 : std::sin(t) / t; }, 0.0, z, 1e-14);
        CHECK(std::fabs(sf::sine_integral(z) - oracle) < 1e-12);
    }
}

TEST_CASE("property: randomized evenness and round trips") {
    std::mt19937 rng(7741);
    std::uniform_real_distribution<double> u01(0.0, 1.0);
    for (int trial = 0; trial < 200; ++trial) {
        // l2 is even in n and vanishes for n = 0 at every rho.
        const int n = 1 + static_cast<int>(u01(rng) * 40);
        const double rho = 0.001 + 0.999 * u01(rng);
        CHECK(sf::l2_integral(-n, rho) == sf::l2_integral(n, rho));
        CHECK(sf::l2_integral(0, rho) == 0.0);
        // sinc is even.
        const double z = 20.0 * (u01(rng) - 0.5);
        CHECK(sf::sinc(z) == sf::sinc(-z));
    }
}

TEST_CASE("l2 integral closed form") {
    CHECK(sf::l2_integral(0, 0.3) == 0.0);
    CHECK(sf::l2_integral(0, 1.0) == 0.0);
    CHECK(sf::l2_integral(-3, 0.17) == sf::l2_integral(3, 0.17));
    CHECK(sf::l2_integral(5, 1.0) == doctest::Approx(0.0).epsilon(1e-14));
    CHECK_THROWS_AS(sf::l2_integral(1, 0.0), std::domain_error);
    CHECK_THROWS_AS(sf::l2_integral(1, 1.2), std::domain_error);
    CHECK_THROWS_AS(sf::l2_integral(1, -0.5), std::domain_error);

    // Frozen from the simpson oracle of the defining integral.
    CHECK(sf::l2_integral(1, 0.5) == doctest::Approx(1.5116554801258966).epsilon(1e-12));

    // High index at small rho, the regime the Hamiltonian assembly relies on.
    {
        const int n = 2400;
        const double rho = 0.001;
        const double oracle = oracles::simpson(
            [n](double y) { return (1.0 - std::cos(n * kPi * y)) / (y * y); }, rho, 1.0, 1e-7);
        CHECK(sf::l2_integral(n, rho) == doctest::Approx(oracle).epsilon(1e-9));
    }
    for (int n = 1; n <= 12; ++n) {
        for (double rho : {0.001, 0.01, 0.1, 0.5, 1.0}) {
            const double oracle =
                rho == 1.0 ? 0.0
                           : oracles::simpson(
                                 [n](double y) {
                                     return (1.0 - std::cos(n * kPi * y)) / (y * y);
                                 },
                                 rho, 1.0, 1e-12);
            CHECK(std::fabs(sf::l2_integral(n, rho) - oracle) < 1e-10);
        }
    }
}
