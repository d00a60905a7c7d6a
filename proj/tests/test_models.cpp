#include <doctest.h>

#include <cmath>
#include <random>

#include "angtun/errors.hpp"
#include "angtun/models.hpp"

using namespace angtun;

namespace {
constexpr double kV = 12.0;
constexpr double kWidth = 0.18;
}

TEST_CASE("usual thick-barrier coefficient")
{
    CHECK(usual_thick_transmission(6.0, kV, kWidth).transmission
          == doctest::Approx(0.04365672088182286).epsilon(1e-12));
    CHECK(usual_thick_transmission(3.0, kV, kWidth).transmission
          == doctest::Approx(0.011862082557159998).epsilon(1e-12));
    CHECK(usual_thick_transmission(1e-10, kV, kWidth).transmission < 1e-10);
    CHECK_THROWS_AS(usual_thick_transmission(12.0, kV, kWidth), RegimeError);
    CHECK_THROWS_AS(usual_thick_transmission(13.0, kV, kWidth), RegimeError);

    // breakdown at thin barriers is flagged, not clamped
    const auto thin = usual_thick_transmission(6.0, kV, 1e-4);
    CHECK(thin.transmission > 1.0);
    REQUIRE(thin.warnings.size() == 1);
    CHECK(thin.warnings[0] == "approximation exceeded unity");

    // approximate models never report reflection
    CHECK_FALSE(usual_thick_transmission(6.0, kV, kWidth).reflection.has_value());
}

TEST_CASE("angular paper-literal formula")
{
    const double theta45 = deg_to_rad(45.0);
    CHECK(angular_paper_literal_transmission(3.0, kV, kWidth, 0.0).transmission
          == usual_thick_transmission(3.0, kV, kWidth).transmission);
    CHECK(angular_paper_literal_transmission(3.0, kV, kWidth, kHalfPi).transmission == 0.0);
    CHECK(angular_paper_literal_transmission(3.0, kV, kWidth, theta45).transmission
          == doctest::Approx(0.02372416511432).epsilon(1e-12));
    CHECK_THROWS_AS(angular_paper_literal_transmission(13.0, kV, kWidth, theta45), RegimeError);
}

TEST_CASE("angular beta formula")
{
    const double theta45 = deg_to_rad(45.0);
    CHECK(angular_paper_beta_transmission(3.0, kV, kWidth, 0.0).transmission
          == doctest::Approx(usual_thick_transmission(3.0, kV, kWidth).transmission)
                 .epsilon(1e-14));
    CHECK(angular_paper_beta_transmission(3.0, kV, kWidth, theta45).transmission
          == doctest::Approx(0.014827603196449999).epsilon(1e-12));
    CHECK(angular_paper_beta_transmission(3.0, kV, kWidth, kHalfPi).transmission == 0.0);
    // beta -> infinity kills the prefactor near grazing
    CHECK(angular_paper_beta_transmission(3.0, kV, kWidth, deg_to_rad(89.999)).transmission
          < 1e-8);
}

TEST_CASE("angular consistent-thick formula")
{
    const double theta45 = deg_to_rad(45.0);
    CHECK(angular_consistent_thick_transmission(3.0, kV, kWidth, 0.0).transmission
          == doctest::Approx(usual_thick_transmission(3.0, kV, kWidth).transmission)
                 .epsilon(1e-14));
    CHECK(angular_consistent_thick_transmission(3.0, kV, kWidth, theta45).transmission
          == doctest::Approx(0.004441649315756848).epsilon(1e-12));
    CHECK_THROWS_AS(angular_consistent_thick_transmission(13.0, kV, kWidth, 0.0), RegimeError);
    // 13 eV at 60 degrees has perpendicular energy 3.25 eV < V: in regime
    CHECK(angular_consistent_thick_transmission(13.0, kV, kWidth, deg_to_rad(60.0)).transmission
          > 0.0);

    SUBCASE("ratio to exact tends to 1 deep in the thick-barrier regime")
    {
        const auto approx = angular_consistent_thick_transmission(6.0, kV, 1.0, deg_to_rad(30.0));
        const auto exact = exact_barrier_transmission(6.0, kV, 1.0, deg_to_rad(30.0));
        CHECK(approx.transmission / exact.transmission == doctest::Approx(1.0).epsilon(0.01));
    }
}

TEST_CASE("exact closed form")
{
    const double theta45 = deg_to_rad(45.0);
    CHECK(exact_barrier_transmission(6.0, kV, kWidth, 0.0).transmission
          == doctest::Approx(0.04271914334738049).epsilon(1e-12));
    CHECK(exact_barrier_transmission(6.0, kV, kWidth, theta45).transmission
          == doctest::Approx(0.011815180286693434).epsilon(1e-12));
    CHECK(exact_barrier_transmission(3.0, kV, kWidth, theta45).transmission
          == doctest::Approx(0.004444440777692561).epsilon(1e-12));
    CHECK(exact_barrier_transmission(13.0, kV, kWidth, 0.0).transmission
          == doctest::Approx(0.36249448851555843).epsilon(1e-12));

    // zero-width barrier is transparent; grazing incidence is opaque
    CHECK(exact_barrier_transmission(6.0, kV, 0.0, 0.3).transmission == 1.0);
    CHECK(exact_barrier_transmission(6.0, kV, kWidth, kHalfPi).transmission == 0.0);

    SUBCASE("unitarity and amplitude consistency on random inputs")
    {
        std::mt19937 rng(424242);
        std::uniform_real_distribution<double> energy_dist(0.1, 50.0);
        std::uniform_real_distribution<double> height_dist(0.5, 40.0);
        std::uniform_real_distribution<double> width_dist(0.01, 1.0);
        std::uniform_real_distribution<double> angle_dist(0.0, deg_to_rad(89.0));
        for (int i = 0; i < 10000; ++i) {
            const auto result = exact_barrier_transmission(energy_dist(rng), height_dist(rng),
                                                           width_dist(rng), angle_dist(rng));
            CHECK(result.transmission >= 0.0);
            CHECK(result.transmission <= 1.0);
            REQUIRE(result.reflection.has_value());
            CHECK(result.transmission + *result.reflection == doctest::Approx(1.0).epsilon(1e-12));
            if (result.amplitude)
                CHECK(std::norm(*result.amplitude)
                      == doctest::Approx(result.transmission).epsilon(1e-10));
        }
    }

    SUBCASE("transmission decreases with width in the evanescent regime")
    {
        double previous = 1.0;
        for (int i = 1; i <= 50; ++i) {
            const double width = i * 0.02;
            const double t = exact_barrier_transmission(6.0, kV, width, 0.3).transmission;
            CHECK(t < previous);
            previous = t;
        }
    }

    SUBCASE("continuity across the critical regime")
    {
        const double delta = 1e-6;
        for (double theta1 : {0.0, deg_to_rad(20.0)}) {
            const double c = std::cos(theta1);
            const double critical_energy = kV / (c * c);
            const double at_critical =
                exact_barrier_transmission(critical_energy, kV, kWidth, theta1).transmission;
            const double below =
                exact_barrier_transmission(critical_energy - delta, kV, kWidth, theta1)
                    .transmission;
            const double above =
                exact_barrier_transmission(critical_energy + delta, kV, kWidth, theta1)
                    .transmission;
            CHECK(std::abs(below - at_critical) < 1e-6);
            CHECK(std::abs(above - at_critical) < 1e-6);
        }
    }

    SUBCASE("opaque barrier guard")
    {
        const auto result = exact_barrier_transmission(1.0, 400.0, 5.0, 0.0);
        CHECK(result.transmission == 0.0);
        CHECK(*result.reflection == 1.0);
        REQUIRE(result.warnings.size() == 1);
        CHECK(result.warnings[0] == "opaque barrier");
    }
}

TEST_CASE("step-regime amplitude")
{
    CHECK(step_regime_transmission(13.0, kV, kWidth, 0.0).transmission
          == doctest::Approx(0.36249448851555843).epsilon(1e-12));

    // transparency resonance at q a = pi
    const double q = std::sqrt((13.0 - kV) / kHbar2Over2Me);
    const auto resonant = step_regime_transmission(13.0, kV, kPi / q, 0.0);
    CHECK(resonant.transmission == doctest::Approx(1.0).epsilon(1e-12));

    CHECK_THROWS_AS(step_regime_transmission(6.0, kV, kWidth, 0.0), RegimeError);
    // 13 eV at 60 degrees: perpendicular energy below the barrier top
    CHECK_THROWS_AS(step_regime_transmission(13.0, kV, kWidth, deg_to_rad(60.0)), RegimeError);

    SUBCASE("default form equals the exact closed form")
    {
        std::mt19937 rng(31337);
        std::uniform_real_distribution<double> height_dist(0.5, 20.0);
        std::uniform_real_distribution<double> excess(1.05, 8.0);
        std::uniform_real_distribution<double> width_dist(0.01, 1.5);
        std::uniform_real_distribution<double> angle_fraction(0.0, 0.95);
        for (int i = 0; i < 1000; ++i) {
            const double V = height_dist(rng);
            const double E = V * excess(rng);
            // keep E cos^2(theta) above V
            const double theta_max = std::acos(std::sqrt(V * 1.01 / E));
            const double theta1 = theta_max * angle_fraction(rng);
            const double width = width_dist(rng);
            const double step = step_regime_transmission(E, V, width, theta1).transmission;
            const double exact = exact_barrier_transmission(E, V, width, theta1).transmission;
            CHECK(step == doctest::Approx(exact).epsilon(1e-10));
        }
    }

    SUBCASE("printed-form variant differs and is flagged")
    {
        const auto literal = step_regime_transmission(13.0, kV, kWidth, 0.0, 1.0, true);
        REQUIRE(literal.warnings.size() >= 1);
        CHECK(literal.warnings[0] == "printed-form variant");
        CHECK(literal.transmission
              != doctest::Approx(0.36249448851555843).epsilon(1e-6));
    }
}

TEST_CASE("phase factors")
{
    const BarrierSpec barrier{kV, kWidth};

    // evanescent interior: |Z1| = 1, |Z2| < 1
    const Kinematics tunneling = make_kinematics({6.0, deg_to_rad(30.0), {1.0}}, barrier);
    const PhaseFactors z_evanescent = phase_factors(tunneling, kWidth);
    CHECK(std::abs(z_evanescent.Z1) == doctest::Approx(1.0).epsilon(1e-14));
    CHECK(std::abs(z_evanescent.Z2) < 1.0);
    // k2 cos(theta2) = i kappa_eff, so |Z2| = exp(-kappa_eff a)
    CHECK(std::abs(z_evanescent.Z2)
          == doctest::Approx(std::exp(-tunneling.kappa_eff * kWidth)).epsilon(1e-12));

    // propagating interior: both unimodular
    const Kinematics propagating = make_kinematics({14.0, deg_to_rad(10.0), {1.0}}, barrier);
    const PhaseFactors z_propagating = phase_factors(propagating, kWidth);
    CHECK(std::abs(z_propagating.Z1) == doctest::Approx(1.0).epsilon(1e-14));
    CHECK(std::abs(z_propagating.Z2) == doctest::Approx(1.0).epsilon(1e-14));
}

TEST_CASE("normal-incidence reduction is exact across all angular models")
{
    std::mt19937 rng(2024);
    std::uniform_real_distribution<double> height_dist(0.5, 60.0);
    std::uniform_real_distribution<double> fraction(0.01, 0.99);
    std::uniform_real_distribution<double> width_dist(0.02, 1.0);
    for (int i = 0; i < 1000; ++i) {
        const double V = height_dist(rng);
        const double E = V * fraction(rng);
        const double a = width_dist(rng);
        const double usual = usual_thick_transmission(E, V, a).transmission;
        CHECK(angular_paper_literal_transmission(E, V, a, 0.0).transmission == usual);
        CHECK(angular_paper_beta_transmission(E, V, a, 0.0).transmission
              == doctest::Approx(usual).epsilon(1e-14));
        CHECK(angular_consistent_thick_transmission(E, V, a, 0.0).transmission
              == doctest::Approx(usual).epsilon(1e-14));
    }
}

TEST_CASE("paper-literal decomposition and ratio identities")
{
    std::mt19937 rng(99);
    std::uniform_real_distribution<double> fraction(0.05, 0.95);
    std::uniform_real_distribution<double> angle_dist(0.0, deg_to_rad(89.0));
    for (int i = 0; i < 2000; ++i) {
        const double E = 12.0 * fraction(rng);
        const double theta1 = angle_dist(rng);
        const double s = std::sin(theta1);
        const double c = std::cos(theta1);
        const double usual = usual_thick_transmission(E, kV, kWidth).transmission;

        // I - I sin^2 = I cos^2
        CHECK(usual - usual * s * s == doctest::Approx(usual * c * c).epsilon(1e-14));

        // closed-form ratio used by the crossover search
        const double literal =
            angular_paper_literal_transmission(E, kV, kWidth, theta1).transmission;
        const double ratio = c * c * (1.0 + 2.0 * (kV - E) * s * s / E);
        CHECK(literal / usual == doctest::Approx(ratio).epsilon(1e-12));
    }
}
