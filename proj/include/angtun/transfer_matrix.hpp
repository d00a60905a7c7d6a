#pragma once

#include <complex>
#include <vector>

#include "angtun/models.hpp"

// Exact scattering through a piecewise-constant potential at fixed parallel
// momentum, built from 2x2 complex interface and propagation matrices.
//
// Convention: matrices map the amplitude pair (forward, backward) on the
// RIGHT of an interface/slab to the pair on its LEFT, so the full transfer
// matrix is the left-to-right product of the per-element matrices and acts
// on the transmitted-side amplitudes (t, 0).

namespace angtun {

struct ProfileSegment {
    double potential; // eV
    double width;     // nm
};

// Semi-infinite outer media are fixed at 0 eV on both sides.
struct PotentialProfile {
    std::vector<ProfileSegment> segments;

    double total_width() const;
};

void validate(const PotentialProfile& profile);

struct TwoByTwoComplex {
    complexd m11, m12, m21, m22;

    static TwoByTwoComplex identity();
    TwoByTwoComplex operator*(const TwoByTwoComplex& rhs) const;
    complexd determinant() const;
};

// Per-region (forward, backward) amplitude pairs, referenced at the region's
// left boundary (region 0 is referenced at the first interface, x = 0).
// Region count = segment count + 2; the incident amplitude is normalized to
// 1 and the last backward amplitude is exactly 0. For a critical segment the
// plane-wave basis degenerates (k = 0, psi = c + d x); its stored pair is
// (value, slope) of that linear solution at the region's left boundary.
struct RegionAmplitudes {
    std::vector<std::pair<complexd, complexd>> regions;
};

struct ProfileSolution {
    RegionAmplitudes amplitudes;
    TransmissionResult result;
};

// M = (1/2) [[1+r, 1-r], [1-r, 1+r]] with r = k_right / k_left;
// identity when the wavenumbers match, det = r.
TwoByTwoComplex interface_matrix(complexd k_left, complexd k_right);

// diag(exp(-i k d), exp(+i k d)); evanescent k = i kappa yields real
// growth/decay factors.
TwoByTwoComplex propagation_matrix(complexd k, double width);

// Perpendicular wavenumber in a region of the given potential at conserved
// parallel momentum k_par = k1 sin(theta1). Principal sqrt: i*kappa when
// the region is classically forbidden.
complexd perpendicular_wavenumber(double energy, double potential, double theta1, double mass);

ProfileSolution solve_profile(const PotentialProfile& profile, double energy, double theta1,
                              double mass = 1.0);

} // namespace angtun
