#pragma once

#include <complex>

#include "angtun/units.hpp"

// Scattering kinematics for a plane wave hitting a rectangular potential
// region at oblique incidence. All quantities derive from the triple
// (energy, barrier height, incidence angle) plus the particle mass.

namespace angtun {

using complexd = std::complex<double>;

struct ParticleSpec {
    double mass = 1.0; // electron masses
};

struct BarrierSpec {
    double height; // eV
    double width;  // nm
};

struct IncidenceSpec {
    double energy; // eV
    double theta1; // radians, in [0, pi/2]
    ParticleSpec particle{};
};

// Classification of the barrier interior at fixed parallel momentum:
// the perpendicular kinetic energy E cos^2(theta1) above, below, or at
// the barrier top (within kRegimeToleranceEv).
enum class RegimeKind {
    PropagatingInterior,
    EvanescentInterior,
    CriticalInterior,
};

const char* regime_name(RegimeKind regime);

// Derived wavenumbers and index quantities for one (E, V, theta1) point.
// Fields that are undefined in the current regime are quiet NaN:
// K, eta, beta need E < V; kappa_eff needs an evanescent interior.
struct Kinematics {
    double theta1;     // radians, copied from the incidence spec
    double k1;         // nm^-1, region-1 total wavenumber
    complexd k2;       // nm^-1, region-2 total wavenumber (iK when E < V)
    double K;          // nm^-1, decay constant sqrt(2m(V-E))/hbar
    double kappa_eff;  // nm^-1, angle-corrected decay constant K sqrt(1 + eta^2 sin^2 theta1)
    double eta;        // sqrt(E / (V - E))
    double beta;       // sqrt((eta^2 + sin^2 theta1) / (1 - sin^2 theta1))
    complexd n;        // index ratio k1 / k2
    complexd N;        // n cos(theta1) / cos(theta2)
    complexd theta2;   // refraction angle, complex in the evanescent regime
    RegimeKind regime;
};

// k = sqrt(2 m E) / hbar = sqrt(E m / C); returns 0 at E = 0.
double free_wavenumber(double energy, double mass = 1.0);

// K = sqrt(2 m (V - E)) / hbar; requires 0 < E < V.
double decay_constant(double energy, double height, double mass = 1.0);

// eta = sqrt(E / (V - E)); requires 0 < E < V.
double eta(double energy, double height);

// The beta of the evanescent interface matching, exactly as defined:
// beta = sqrt((eta^2 + sin^2 theta1) / (1 - sin^2 theta1)).
// Diverges at theta1 = pi/2 (DomainError).
double beta_paper(double eta_value, double theta1);

// Snell's law for matter waves: sin(theta2) = sin(theta1) / n evaluated on
// the principal branch. Real for a propagating interior, complex otherwise.
complexd refraction_angle(double theta1, complexd n);

RegimeKind classify_regime(double energy, double theta1, double height);

Kinematics make_kinematics(const IncidenceSpec& incidence, const BarrierSpec& barrier);

void validate(const ParticleSpec& particle);
void validate(const BarrierSpec& barrier);
void validate(const IncidenceSpec& incidence);

} // namespace angtun
