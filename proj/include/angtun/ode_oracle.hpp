#pragma once

#include "angtun/transfer_matrix.hpp"

// Brute-force verification path: integrates the perpendicular-reduced
// stationary Schrodinger equation psi'' = ((V(x) - E) m / C + k_par^2) psi
// across the profile and extracts transmission by plane-wave matching.
//
// Integration runs from the transmitted side BACKWARD to the incidence side;
// in that direction the physical solution grows through evanescent regions,
// which is numerically stable. Steps are aligned to region boundaries so the
// fixed-step scheme keeps its full 4th order on piecewise-constant profiles.

namespace angtun {

enum class IntegratorMethod { RungeKutta4 };

struct IntegratorConfig {
    double step = 1e-4; // nm
    double pad = 0.5;   // nm of flat 0 eV medium on each side
    IntegratorMethod method = IntegratorMethod::RungeKutta4;
};

// Returns T for the profile; converges at 4th order in config.step.
// Throws ConfigError when step * max|k| >= 0.1 (resolution guard).
// Returns 0 if the solution overflows across a thick evanescent region.
double integrate_transmission(const PotentialProfile& profile, double energy, double theta1,
                              double mass = 1.0, const IntegratorConfig& config = {});

} // namespace angtun
