#include "angtun/ode_oracle.hpp"

#include <cmath>

#include "angtun/errors.hpp"

namespace angtun {

namespace {

const complexd kImag(0.0, 1.0);

struct State {
    complexd psi;
    complexd dpsi;
};

// one RK4 step of (psi, psi')' = (psi', W psi) with constant W
State rk4_step(const State& y, double w, double h)
{
    const complexd k1p = y.dpsi;
    const complexd k1d = w * y.psi;
    const complexd k2p = y.dpsi + 0.5 * h * k1d;
    const complexd k2d = w * (y.psi + 0.5 * h * k1p);
    const complexd k3p = y.dpsi + 0.5 * h * k2d;
    const complexd k3d = w * (y.psi + 0.5 * h * k2p);
    const complexd k4p = y.dpsi + h * k3d;
    const complexd k4d = w * (y.psi + h * k3p);
    return {y.psi + h / 6.0 * (k1p + 2.0 * k2p + 2.0 * k3p + k4p),
            y.dpsi + h / 6.0 * (k1d + 2.0 * k2d + 2.0 * k3d + k4d)};
}

} // namespace

double integrate_transmission(const PotentialProfile& profile, double energy, double theta1,
                              double mass, const IntegratorConfig& config)
{
    validate(profile);
    if (!(energy > 0.0) || !(mass > 0.0))
        throw DomainError("integrate_transmission: energy and mass must be positive");
    if (theta1 < 0.0 || theta1 > kHalfPi)
        throw DomainError("integrate_transmission: theta1 must lie in [0, pi/2]");
    if (is_grazing(theta1) || classify_regime(energy, theta1, 0.0) != RegimeKind::PropagatingInterior)
        throw DomainError("integrate_transmission: outer media must be propagating");
    if (!(config.step > 0.0) || config.pad < 0.0)
        throw ConfigError("integrate_transmission: step must be positive and pad non-negative");

    const double k1 = free_wavenumber(energy, mass);
    const double k_par = k1 * std::sin(theta1);
    const double k_par2 = k_par * k_par;
    const double k_perp = k1 * std::cos(theta1);

    // regions walked right-to-left, pads included
    std::vector<ProfileSegment> regions;
    regions.push_back({0.0, config.pad});
    regions.insert(regions.end(), profile.segments.begin(), profile.segments.end());
    regions.push_back({0.0, config.pad});

    double k_max = k_perp;
    for (const auto& region : regions) {
        const double w = (region.potential - energy) * mass / kHbar2Over2Me + k_par2;
        k_max = std::max(k_max, std::sqrt(std::abs(w)));
    }
    if (!(config.step * k_max < 0.1))
        throw ConfigError("integrate_transmission: resolution guard step * max|k| < 0.1 violated");

    // pure outgoing wave exp(i k_perp x) at the right edge
    double x_right = 0.0;
    for (const auto& region : regions)
        x_right += region.width;
    State state{std::exp(kImag * complexd(k_perp * x_right, 0.0)), complexd(0.0, 0.0)};
    state.dpsi = kImag * k_perp * state.psi;

    for (auto it = regions.rbegin(); it != regions.rend(); ++it) {
        if (it->width == 0.0)
            continue;
        const double w = (it->potential - energy) * mass / kHbar2Over2Me + k_par2;
        const auto n_steps = static_cast<long>(std::ceil(it->width / config.step));
        const double h = -it->width / static_cast<double>(n_steps);
        for (long i = 0; i < n_steps; ++i) {
            state = rk4_step(state, w, h);
            if ((i & 63) == 0 && std::norm(state.psi) > 1e280)
                return 0.0; // overflow across thick evanescent region
        }
    }

    // decompose at x = 0 (left pad edge) into incident/reflected plane waves
    const complexd incident = 0.5 * (state.psi + state.dpsi / (kImag * k_perp));
    return 1.0 / std::norm(incident);
}

} // namespace angtun
