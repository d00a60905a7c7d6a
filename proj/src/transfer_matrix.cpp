#include "angtun/transfer_matrix.hpp"

#include <cmath>

#include "angtun/errors.hpp"

namespace angtun {

namespace {

const complexd kImag(0.0, 1.0);

// Transfer across a critical slab (zero perpendicular kinetic energy, linear
// interior psi = c + d x), mapping right-medium amplitudes referenced at the
// slab's right interface to left-medium amplitudes at its left interface.
// This is the k -> 0 limit of interface * propagation * interface, which
// cannot be composed from those factors directly (the interface matrix out of
// a zero-k region is singular).
TwoByTwoComplex critical_slab_matrix(complexd k_left, double width, complexd k_right)
{
    const complexd rho = k_right / k_left;
    const complexd chi = kImag * k_right * width;
    return {0.5 * (1.0 + rho - chi), 0.5 * (1.0 - rho + chi),
            0.5 * (1.0 - rho - chi), 0.5 * (1.0 + rho + chi)};
}

} // namespace

double PotentialProfile::total_width() const
{
    double width = 0.0;
    for (const auto& segment : segments)
        width += segment.width;
    return width;
}

void validate(const PotentialProfile& profile)
{
    for (const auto& segment : profile.segments)
        if (!(segment.width > 0.0))
            throw DomainError("potential profile: all segment widths must be positive");
}

TwoByTwoComplex TwoByTwoComplex::identity()
{
    return {complexd(1.0, 0.0), complexd(0.0, 0.0), complexd(0.0, 0.0), complexd(1.0, 0.0)};
}

TwoByTwoComplex TwoByTwoComplex::operator*(const TwoByTwoComplex& rhs) const
{
    return {
        m11 * rhs.m11 + m12 * rhs.m21,
        m11 * rhs.m12 + m12 * rhs.m22,
        m21 * rhs.m11 + m22 * rhs.m21,
        m21 * rhs.m12 + m22 * rhs.m22,
    };
}

complexd TwoByTwoComplex::determinant() const
{
    return m11 * m22 - m12 * m21;
}

TwoByTwoComplex interface_matrix(complexd k_left, complexd k_right)
{
    if (k_left == complexd(0.0, 0.0))
        throw DomainError("interface_matrix: k_left must be nonzero");
    const complexd r = k_right / k_left;
    const complexd p = 0.5 * (1.0 + r);
    const complexd m = 0.5 * (1.0 - r);
    return {p, m, m, p};
}

TwoByTwoComplex propagation_matrix(complexd k, double width)
{
    if (width < 0.0)
        throw DomainError("propagation_matrix: width must be non-negative");
    const complexd phase = kImag * k * width;
    return {std::exp(-phase), complexd(0.0, 0.0), complexd(0.0, 0.0), std::exp(phase)};
}

complexd perpendicular_wavenumber(double energy, double potential, double theta1, double mass)
{
    const double k1 = free_wavenumber(energy, mass);
    const double k_par = k1 * std::sin(theta1);
    const double kperp2 = (energy - potential) * mass / kHbar2Over2Me - k_par * k_par;
    return std::sqrt(complexd(kperp2, 0.0));
}

ProfileSolution solve_profile(const PotentialProfile& profile, double energy, double theta1,
                              double mass)
{
    validate(profile);
    if (!(energy > 0.0) || !(mass > 0.0))
        throw DomainError("solve_profile: energy and mass must be positive");
    if (theta1 < 0.0 || theta1 > kHalfPi)
        throw DomainError("solve_profile: theta1 must lie in [0, pi/2]");

    const std::size_t n_regions = profile.segments.size() + 2;

    ProfileSolution solution{};
    solution.result.model = ModelKind::ExactClosedForm;
    solution.amplitudes.regions.assign(n_regions, {complexd(0.0, 0.0), complexd(0.0, 0.0)});

    // interior regime: critical dominates evanescent dominates propagating
    solution.result.regime = RegimeKind::PropagatingInterior;
    for (const auto& segment : profile.segments) {
        const RegimeKind regime = classify_regime(energy, theta1, segment.potential);
        if (regime == RegimeKind::CriticalInterior) {
            solution.result.regime = regime;
            break;
        }
        if (regime == RegimeKind::EvanescentInterior)
            solution.result.regime = regime;
    }

    if (is_grazing(theta1)) {
        solution.result.transmission = 0.0;
        solution.result.reflection = 1.0;
        solution.result.warnings.emplace_back("grazing limit");
        solution.amplitudes.regions.front() = {complexd(1.0, 0.0), complexd(-1.0, 0.0)};
        return solution;
    }

    // wavenumbers per region: outer media at 0 eV on both sides; segments
    // inside the critical tolerance band get k pinned to exactly zero so the
    // linear-interior limit is taken instead of a near-singular division
    std::vector<complexd> k(n_regions);
    k.front() = perpendicular_wavenumber(energy, 0.0, theta1, mass);
    for (std::size_t j = 0; j < profile.segments.size(); ++j) {
        const double potential = profile.segments[j].potential;
        k[j + 1] = classify_regime(energy, theta1, potential) == RegimeKind::CriticalInterior
            ? complexd(0.0, 0.0)
            : perpendicular_wavenumber(energy, potential, theta1, mass);
    }
    k.back() = k.front();

    // opacity guard: the backward propagation factor exp(+kappa d) overflows
    // well before T is distinguishable from zero
    double evanescent_exponent = 0.0;
    for (std::size_t j = 0; j < profile.segments.size(); ++j)
        evanescent_exponent += k[j + 1].imag() * profile.segments[j].width;
    if (evanescent_exponent > kOpaqueExponent) {
        solution.result.transmission = 0.0;
        solution.result.reflection = 1.0;
        solution.result.warnings.emplace_back("opaque profile");
        solution.amplitudes.regions.front() = {complexd(1.0, 0.0), complexd(0.0, 0.0)};
        return solution;
    }

    // chain, walked left to right; consecutive critical segments merge into a
    // single slab (linear interior throughout), and a slab's matrix already
    // includes the interface into the region on its right
    const std::size_t n_segments = profile.segments.size();
    TwoByTwoComplex transfer = TwoByTwoComplex::identity();
    bool entered = false; // interface into the upcoming region already applied
    for (std::size_t j = 0; j < n_segments;) {
        if (k[j + 1] == complexd(0.0, 0.0)) {
            double slab_width = profile.segments[j].width;
            std::size_t last = j;
            while (last + 1 < n_segments && k[last + 2] == complexd(0.0, 0.0))
                slab_width += profile.segments[++last].width;
            transfer = transfer * critical_slab_matrix(k[j], slab_width, k[last + 2]);
            j = last + 1;
            entered = true;
        } else {
            if (!entered)
                transfer = transfer * interface_matrix(k[j], k[j + 1]);
            transfer = transfer * propagation_matrix(k[j + 1], profile.segments[j].width);
            entered = false;
            ++j;
        }
    }
    if (!entered)
        transfer = transfer * interface_matrix(k[n_segments], k[n_segments + 1]);

    const complexd t = complexd(1.0, 0.0) / transfer.m11;
    const complexd r = transfer.m21 * t;
    solution.result.transmission = std::norm(t);
    solution.result.reflection = std::norm(r);
    solution.result.amplitude = t;

    // amplitudes per region, back-substituted right to left by tracking the
    // continuous (psi, psi') at the walking position; for a critical region
    // the stored pair is (value, slope) of its linear interior solution
    auto& regions = solution.amplitudes.regions;
    regions.back() = {t, complexd(0.0, 0.0)};
    complexd psi = t;
    complexd dpsi = kImag * k.back() * t;
    for (std::size_t j = n_segments; j-- > 0;) {
        const double width = profile.segments[j].width;
        if (k[j + 1] == complexd(0.0, 0.0)) {
            psi -= dpsi * width;
            regions[j + 1] = {psi, dpsi};
        } else {
            const complexd a_right = 0.5 * (psi + dpsi / (kImag * k[j + 1]));
            const complexd b_right = psi - a_right;
            const complexd phase = kImag * k[j + 1] * width;
            const complexd a_left = a_right * std::exp(-phase);
            const complexd b_left = b_right * std::exp(phase);
            regions[j + 1] = {a_left, b_left};
            psi = a_left + b_left;
            dpsi = kImag * k[j + 1] * (a_left - b_left);
        }
    }
    regions.front() = {0.5 * (psi + dpsi / (kImag * k.front())),
                       0.5 * (psi - dpsi / (kImag * k.front()))};
    return solution;
}

} // namespace angtun
