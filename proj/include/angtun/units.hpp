#pragma once

#include <numbers>

// Unit conventions used throughout: energies in eV, lengths in nm,
// masses in multiples of the electron rest mass, angles in radians
// internally (degrees only at the CLI surface).

namespace angtun {

// hbar^2 / (2 m_e) in eV nm^2. Every wavenumber in the library derives
// from this one pinned constant so results are bit-reproducible.
inline constexpr double kHbar2Over2Me = 0.0380998212;

// Tolerance on E cos^2(theta1) - V for regime classification, in eV.
inline constexpr double kRegimeToleranceEv = 1e-9;

inline constexpr double kPi = std::numbers::pi;
inline constexpr double kHalfPi = std::numbers::pi / 2.0;

// Evanescent exponents beyond this are treated as fully opaque
// (exp(300) is near the top of the double range; T < 1e-260 there).
inline constexpr double kOpaqueExponent = 300.0;

inline constexpr double deg_to_rad(double degrees)
{
    return degrees * (kPi / 180.0);
}

inline constexpr double rad_to_deg(double radians)
{
    return radians * (180.0 / kPi);
}

// theta1 = pi/2 is a declared limiting case (k_perp = 0); anything within
// rounding distance of it is treated as grazing.
inline bool is_grazing(double theta1)
{
    return theta1 >= kHalfPi - 1e-12;
}

} // namespace angtun
