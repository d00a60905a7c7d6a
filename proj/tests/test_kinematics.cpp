#include <doctest.h>

#include <cmath>
#include <random>

#include "angtun/errors.hpp"
#include "angtun/kinematics.hpp"

using namespace angtun;

TEST_CASE("free_wavenumber at reference points")
{
    CHECK(free_wavenumber(6.0, 1.0) == doctest::Approx(12.549145548824281).epsilon(1e-12));
    CHECK(free_wavenumber(3.0, 1.0) == doctest::Approx(8.873585915670628).epsilon(1e-12));
    CHECK(free_wavenumber(0.0, 1.0) == 0.0);
    CHECK_THROWS_AS(free_wavenumber(-1.0, 1.0), DomainError);
    CHECK_THROWS_AS(free_wavenumber(1.0, 0.0), DomainError);
}

TEST_CASE("decay_constant at reference points")
{
    CHECK(decay_constant(6.0, 12.0, 1.0) == doctest::Approx(12.549145548824281).epsilon(1e-12));
    CHECK(decay_constant(3.0, 12.0, 1.0) == doctest::Approx(15.369501651269127).epsilon(1e-12));
    // vanishing barrier margin
    CHECK(decay_constant(12.0 - 1e-12, 12.0, 1.0) < 1e-4);
    CHECK_THROWS_AS(decay_constant(12.0, 12.0, 1.0), RegimeError);
    CHECK_THROWS_AS(decay_constant(13.0, 12.0, 1.0), RegimeError);
}

TEST_CASE("energy partition identity k1^2 + K^2 = k(V)^2")
{
    std::mt19937 rng(12345);
    std::uniform_real_distribution<double> height_dist(0.5, 60.0);
    std::uniform_real_distribution<double> fraction(1e-3, 1.0 - 1e-3);
    for (int i = 0; i < 1000; ++i) {
        const double V = height_dist(rng);
        const double E = V * fraction(rng);
        const double k = free_wavenumber(E, 1.0);
        const double K = decay_constant(E, V, 1.0);
        const double kv = free_wavenumber(V, 1.0);
        CHECK(k * k + K * K == doctest::Approx(kv * kv).epsilon(1e-12));
    }
}

TEST_CASE("eta at reference points")
{
    CHECK(eta(6.0, 12.0) == doctest::Approx(1.0).epsilon(1e-14));
    CHECK(eta(3.0, 12.0) == doctest::Approx(0.5773502691896258).epsilon(1e-12));
    CHECK(eta(1e-9, 12.0) < 1e-4);
    CHECK_THROWS_AS(eta(12.0, 12.0), RegimeError);
}

TEST_CASE("beta_paper values and monotonicity")
{
    const double eta_value = std::sqrt(1.0 / 3.0);
    CHECK(beta_paper(eta_value, 0.0) == eta_value); // exact reduction at normal incidence
    CHECK(beta_paper(0.57735, deg_to_rad(45.0)) == doctest::Approx(1.29099).epsilon(1e-5));
    CHECK(beta_paper(1.0, deg_to_rad(60.0))
          == doctest::Approx(2.6457513110645907).epsilon(1e-12));
    CHECK_THROWS_AS(beta_paper(1.0, kHalfPi), DomainError);

    double previous = beta_paper(0.7, 0.0);
    for (int i = 1; i <= 80; ++i) {
        const double beta = beta_paper(0.7, deg_to_rad(i * 89.9 / 80.0));
        CHECK(beta > previous);
        previous = beta;
    }
}

TEST_CASE("refraction_angle limits and values")
{
    CHECK(refraction_angle(0.0, complexd(2.0, 0.5)) == complexd(0.0, 0.0));
    for (int i = 0; i <= 18; ++i) {
        const double theta1 = deg_to_rad(i * 5.0);
        const complexd theta2 = refraction_angle(theta1, complexd(1.0, 0.0));
        CHECK(theta2.real() == doctest::Approx(theta1).epsilon(1e-12));
        CHECK(theta2.imag() == doctest::Approx(0.0));
    }
    // sin(theta1)/n = 0.25 -> theta2 = asin(0.25)
    const double theta1 = deg_to_rad(30.0);
    const double n = std::sin(theta1) / 0.25;
    const complexd theta2 = refraction_angle(theta1, complexd(n, 0.0));
    CHECK(rad_to_deg(theta2.real()) == doctest::Approx(14.477512185929925).epsilon(1e-10));
    CHECK_THROWS_AS(refraction_angle(0.3, complexd(0.0, 0.0)), DomainError);
}

TEST_CASE("regime classification reduces to sign of E - V at normal incidence")
{
    CHECK(classify_regime(13.0, 0.0, 12.0) == RegimeKind::PropagatingInterior);
    CHECK(classify_regime(11.0, 0.0, 12.0) == RegimeKind::EvanescentInterior);
    CHECK(classify_regime(12.0, 0.0, 12.0) == RegimeKind::CriticalInterior);
    CHECK(classify_regime(12.0 + 0.5e-9, 0.0, 12.0) == RegimeKind::CriticalInterior);
    // oblique: 13 eV at 60 degrees has perpendicular energy 3.25 eV
    CHECK(classify_regime(13.0, deg_to_rad(60.0), 12.0) == RegimeKind::EvanescentInterior);
}

TEST_CASE("kinematics aggregate at the reference barrier")
{
    const BarrierSpec barrier{12.0, 0.18};

    SUBCASE("normal incidence, E = 6 eV")
    {
        const Kinematics kin = make_kinematics({6.0, 0.0, {1.0}}, barrier);
        CHECK(kin.K == doctest::Approx(12.549145548824281).epsilon(1e-12));
        CHECK(kin.kappa_eff == kin.K); // theta = 0 degeneracy
        CHECK(kin.eta == doctest::Approx(1.0).epsilon(1e-14));
        CHECK(kin.beta == doctest::Approx(1.0).epsilon(1e-14));
        CHECK(kin.regime == RegimeKind::EvanescentInterior);
        CHECK(kin.k2.real() == doctest::Approx(0.0));
        CHECK(kin.k2.imag() == doctest::Approx(kin.K).epsilon(1e-12));
    }

    SUBCASE("45 degrees, E = 6 eV: kappa_eff = sqrt(2m(V - E cos^2))/hbar")
    {
        const Kinematics kin = make_kinematics({6.0, deg_to_rad(45.0), {1.0}}, barrier);
        CHECK(kin.kappa_eff == doctest::Approx(15.369501651269127).epsilon(1e-10));
    }

    SUBCASE("E = 13 eV at normal incidence propagates")
    {
        const Kinematics kin = make_kinematics({13.0, 0.0, {1.0}}, barrier);
        CHECK(kin.regime == RegimeKind::PropagatingInterior);
        CHECK(kin.k2.imag() == 0.0);
        CHECK(kin.k2.real() > 0.0);
        CHECK(std::isnan(kin.K));
        CHECK(std::isnan(kin.eta));
    }

    SUBCASE("kappa_eff identity and monotonicity in theta1")
    {
        std::mt19937 rng(777);
        std::uniform_real_distribution<double> energy_dist(0.1, 11.9);
        for (int i = 0; i < 200; ++i) {
            const double E = energy_dist(rng);
            double previous = -1.0;
            for (int j = 0; j <= 10; ++j) {
                const double theta1 = j * kHalfPi / 10.0;
                const Kinematics kin = make_kinematics({E, theta1, {1.0}}, barrier);
                const double expected =
                    kin.K * kin.K + kin.k1 * kin.k1 * std::sin(theta1) * std::sin(theta1);
                CHECK(kin.kappa_eff * kin.kappa_eff
                      == doctest::Approx(expected).epsilon(1e-12));
                CHECK(kin.kappa_eff >= kin.K);
                CHECK(kin.kappa_eff > previous);
                previous = kin.kappa_eff;
            }
        }
    }
}

TEST_CASE("input validation")
{
    CHECK_THROWS_AS(make_kinematics({-1.0, 0.0, {1.0}}, {12.0, 0.18}), DomainError);
    CHECK_THROWS_AS(make_kinematics({6.0, -0.1, {1.0}}, {12.0, 0.18}), DomainError);
    CHECK_THROWS_AS(make_kinematics({6.0, 0.0, {-1.0}}, {12.0, 0.18}), DomainError);
    CHECK_THROWS_AS(make_kinematics({6.0, 0.0, {1.0}}, {0.0, 0.18}), DomainError);
    CHECK_THROWS_AS(make_kinematics({6.0, 0.0, {1.0}}, {12.0, 0.0}), DomainError);
}
