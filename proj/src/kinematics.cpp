#include "angtun/kinematics.hpp"

#include <cmath>
#include <limits>

#include "angtun/errors.hpp"

namespace angtun {

namespace {
constexpr double kNaN = std::numeric_limits<double>::quiet_NaN();
}

const char* regime_name(RegimeKind regime)
{
    switch (regime) {
    case RegimeKind::PropagatingInterior: return "propagating";
    case RegimeKind::EvanescentInterior: return "evanescent";
    case RegimeKind::CriticalInterior: return "critical";
    }
    return "unknown";
}

void validate(const ParticleSpec& particle)
{
    if (!(particle.mass > 0.0))
        throw DomainError("particle mass must be positive");
}

void validate(const BarrierSpec& barrier)
{
    if (!(barrier.height > 0.0))
        throw DomainError("barrier height must be positive");
    if (!(barrier.width > 0.0))
        throw DomainError("barrier width must be positive");
}

void validate(const IncidenceSpec& incidence)
{
    if (!(incidence.energy > 0.0))
        throw DomainError("energy must be positive");
    if (!(incidence.theta1 >= 0.0) || !(incidence.theta1 <= kHalfPi))
        throw DomainError("incidence angle must lie in [0, pi/2]");
    validate(incidence.particle);
}

double free_wavenumber(double energy, double mass)
{
    if (energy < 0.0)
        throw DomainError("free_wavenumber: energy must be non-negative");
    if (!(mass > 0.0))
        throw DomainError("free_wavenumber: mass must be positive");
    return std::sqrt(energy * mass / kHbar2Over2Me);
}

double decay_constant(double energy, double height, double mass)
{
    if (!(energy > 0.0) || !(mass > 0.0))
        throw DomainError("decay_constant: energy and mass must be positive");
    if (energy >= height)
        throw RegimeError("decay_constant: requires E < V");
    return std::sqrt((height - energy) * mass / kHbar2Over2Me);
}

double eta(double energy, double height)
{
    if (!(energy > 0.0))
        throw DomainError("eta: energy must be positive");
    if (energy >= height)
        throw RegimeError("eta: requires E < V");
    return std::sqrt(energy / (height - energy));
}

double beta_paper(double eta_value, double theta1)
{
    if (!(eta_value > 0.0))
        throw DomainError("beta_paper: eta must be positive");
    if (theta1 < 0.0 || theta1 > kHalfPi)
        throw DomainError("beta_paper: theta1 must lie in [0, pi/2]");
    if (is_grazing(theta1))
        throw DomainError("beta_paper: diverges at theta1 = pi/2");
    const double s = std::sin(theta1);
    const double s2 = s * s;
    return std::sqrt((eta_value * eta_value + s2) / (1.0 - s2));
}

complexd refraction_angle(double theta1, complexd n)
{
    if (theta1 < 0.0 || theta1 > kHalfPi)
        throw DomainError("refraction_angle: theta1 must lie in [0, pi/2]");
    if (n == complexd(0.0, 0.0))
        throw DomainError("refraction_angle: index ratio must be nonzero");
    if (theta1 == 0.0)
        return complexd(0.0, 0.0);
    return std::asin(complexd(std::sin(theta1), 0.0) / n);
}

RegimeKind classify_regime(double energy, double theta1, double height)
{
    const double c = std::cos(theta1);
    const double perp = energy * c * c - height;
    if (perp > kRegimeToleranceEv)
        return RegimeKind::PropagatingInterior;
    if (perp < -kRegimeToleranceEv)
        return RegimeKind::EvanescentInterior;
    return RegimeKind::CriticalInterior;
}

Kinematics make_kinematics(const IncidenceSpec& incidence, const BarrierSpec& barrier)
{
    validate(incidence);
    validate(barrier);

    const double E = incidence.energy;
    const double V = barrier.height;
    const double m = incidence.particle.mass;
    const double theta1 = incidence.theta1;
    const double c = std::cos(theta1);

    Kinematics kin{};
    kin.theta1 = theta1;
    kin.k1 = free_wavenumber(E, m);
    kin.k2 = std::sqrt(complexd((E - V) * m / kHbar2Over2Me, 0.0));
    kin.regime = classify_regime(E, theta1, V);

    if (E < V) {
        kin.K = decay_constant(E, V, m);
        kin.eta = eta(E, V);
        kin.beta = is_grazing(theta1) ? kNaN : beta_paper(kin.eta, theta1);
    } else {
        kin.K = kNaN;
        kin.eta = kNaN;
        kin.beta = kNaN;
    }

    const double perp_gap = V - E * c * c;
    kin.kappa_eff = perp_gap > 0.0 ? std::sqrt(perp_gap * m / kHbar2Over2Me) : kNaN;

    if (kin.k2 != complexd(0.0, 0.0)) {
        kin.n = kin.k1 / kin.k2;
        kin.theta2 = refraction_angle(theta1, kin.n);
        kin.N = kin.n * c / std::cos(kin.theta2);
    } else {
        constexpr double inf = std::numeric_limits<double>::infinity();
        kin.n = complexd(inf, 0.0);
        kin.theta2 = complexd(0.0, 0.0);
        kin.N = complexd(inf, 0.0);
    }
    return kin;
}

} // namespace angtun
