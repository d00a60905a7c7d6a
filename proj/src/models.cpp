#include "angtun/models.hpp"

#include <cmath>

#include "angtun/errors.hpp"

namespace angtun {

namespace {

const complexd kImag(0.0, 1.0);

void check_tunneling_inputs(const char* op, double energy, double height, double width,
                            double mass)
{
    if (!(energy > 0.0) || !(mass > 0.0))
        throw DomainError(std::string(op) + ": energy and mass must be positive");
    if (!(width > 0.0))
        throw DomainError(std::string(op) + ": width must be positive");
    if (energy >= height)
        throw RegimeError(std::string(op) + ": requires E < V");
}

void check_theta(const char* op, double theta1)
{
    if (theta1 < 0.0 || theta1 > kHalfPi)
        throw DomainError(std::string(op) + ": theta1 must lie in [0, pi/2]");
}

void flag_if_above_unity(TransmissionResult& result)
{
    if (result.transmission > 1.0)
        result.warnings.emplace_back("approximation exceeded unity");
}

} // namespace

const char* model_name(ModelKind model)
{
    switch (model) {
    case ModelKind::UsualThick: return "usual_thick";
    case ModelKind::AngularPaperLiteral: return "angular_paper_literal";
    case ModelKind::AngularPaperBeta: return "angular_paper_beta";
    case ModelKind::AngularConsistentThick: return "angular_consistent_thick";
    case ModelKind::ExactClosedForm: return "exact";
    case ModelKind::StepRegime: return "step_regime";
    }
    return "unknown";
}

std::optional<ModelKind> model_from_name(const std::string& name)
{
    for (ModelKind kind : all_models())
        if (name == model_name(kind))
            return kind;
    return std::nullopt;
}

const std::vector<ModelKind>& all_models()
{
    static const std::vector<ModelKind> kinds = {
        ModelKind::UsualThick,
        ModelKind::AngularPaperLiteral,
        ModelKind::AngularPaperBeta,
        ModelKind::AngularConsistentThick,
        ModelKind::ExactClosedForm,
        ModelKind::StepRegime,
    };
    return kinds;
}

PhaseFactors phase_factors(const Kinematics& kin, double width)
{
    PhaseFactors z{};
    z.Z1 = std::exp(kImag * complexd(kin.k1 * width * std::cos(kin.theta1), 0.0));
    z.Z2 = std::exp(kImag * kin.k2 * width * std::cos(kin.theta2));
    return z;
}

TransmissionResult usual_thick_transmission(double energy, double height, double width,
                                            double mass)
{
    check_tunneling_inputs("usual_thick_transmission", energy, height, width, mass);
    const double K = decay_constant(energy, height, mass);
    const double ratio = energy / height;

    TransmissionResult result{};
    result.model = ModelKind::UsualThick;
    result.regime = RegimeKind::EvanescentInterior;
    result.transmission = 16.0 * ratio * (1.0 - ratio) * std::exp(-2.0 * K * width);
    flag_if_above_unity(result);
    return result;
}

TransmissionResult angular_paper_literal_transmission(double energy, double height, double width,
                                                      double theta1, double mass)
{
    check_tunneling_inputs("angular_paper_literal_transmission", energy, height, width, mass);
    check_theta("angular_paper_literal_transmission", theta1);

    TransmissionResult result{};
    result.model = ModelKind::AngularPaperLiteral;
    result.regime = RegimeKind::EvanescentInterior;
    if (is_grazing(theta1)) {
        result.transmission = 0.0; // no perpendicular momentum, declared limit
        return result;
    }

    const double usual = usual_thick_transmission(energy, height, width, mass).transmission;
    const double s = std::sin(theta1);
    const double s2x = std::sin(2.0 * theta1);
    const double gap = height - energy;
    const double K = decay_constant(energy, height, mass);
    result.transmission = usual - usual * s * s
        + (8.0 / (height * height)) * gap * gap * s2x * s2x * std::exp(-2.0 * K * width);
    flag_if_above_unity(result);
    return result;
}

TransmissionResult angular_paper_beta_transmission(double energy, double height, double width,
                                                   double theta1, double mass)
{
    check_tunneling_inputs("angular_paper_beta_transmission", energy, height, width, mass);
    check_theta("angular_paper_beta_transmission", theta1);

    TransmissionResult result{};
    result.model = ModelKind::AngularPaperBeta;
    result.regime = RegimeKind::EvanescentInterior;
    if (is_grazing(theta1)) {
        result.transmission = 0.0; // beta diverges, T -> 0
        return result;
    }

    const double beta = beta_paper(eta(energy, height), theta1);
    const double b2 = beta * beta;
    const double K = decay_constant(energy, height, mass);
    result.transmission = 16.0 * b2 / ((b2 + 1.0) * (b2 + 1.0)) * std::exp(-2.0 * K * width);
    flag_if_above_unity(result);
    return result;
}

TransmissionResult angular_consistent_thick_transmission(double energy, double height,
                                                         double width, double theta1,
                                                         double mass)
{
    if (!(energy > 0.0) || !(mass > 0.0))
        throw DomainError("angular_consistent_thick_transmission: energy and mass must be positive");
    if (!(width > 0.0))
        throw DomainError("angular_consistent_thick_transmission: width must be positive");
    check_theta("angular_consistent_thick_transmission", theta1);

    TransmissionResult result{};
    result.model = ModelKind::AngularConsistentThick;
    result.regime = RegimeKind::EvanescentInterior;
    if (is_grazing(theta1)) {
        result.transmission = 0.0;
        return result;
    }

    const double c = std::cos(theta1);
    const double perp_energy = energy * c * c;
    if (perp_energy >= height)
        throw RegimeError("angular_consistent_thick_transmission: requires E cos^2(theta1) < V");

    const double gap = height - perp_energy;
    const double kappa_eff = std::sqrt(gap * mass / kHbar2Over2Me);
    result.transmission = 16.0 * perp_energy * gap / (height * height)
        * std::exp(-2.0 * kappa_eff * width);
    flag_if_above_unity(result);
    return result;
}

TransmissionResult exact_barrier_transmission(double energy, double height, double width,
                                              double theta1, double mass)
{
    if (!(energy > 0.0) || !(mass > 0.0))
        throw DomainError("exact_barrier_transmission: energy and mass must be positive");
    if (!(height > 0.0))
        throw DomainError("exact_barrier_transmission: height must be positive");
    if (width < 0.0)
        throw DomainError("exact_barrier_transmission: width must be non-negative");
    check_theta("exact_barrier_transmission", theta1);

    TransmissionResult result{};
    result.model = ModelKind::ExactClosedForm;
    result.regime = classify_regime(energy, theta1, height);

    if (is_grazing(theta1)) {
        result.transmission = 0.0;
        result.reflection = 1.0;
        return result;
    }
    if (width == 0.0) {
        result.transmission = 1.0;
        result.reflection = 0.0;
        result.amplitude = complexd(1.0, 0.0);
        return result;
    }

    const double kp = free_wavenumber(energy, mass) * std::cos(theta1);
    const double kp2 = kp * kp;
    const double q2 = kp2 - height * mass / kHbar2Over2Me;

    switch (result.regime) {
    case RegimeKind::EvanescentInterior: {
        const double kappa = std::sqrt(-q2);
        if (kappa * width > kOpaqueExponent) {
            result.transmission = 0.0;
            result.reflection = 1.0;
            result.warnings.emplace_back("opaque barrier");
            return result;
        }
        const double kappa2 = kappa * kappa;
        const double sh = std::sinh(kappa * width);
        const double prefactor = (kp2 + kappa2) * (kp2 + kappa2) / (4.0 * kp2 * kappa2);
        result.transmission = 1.0 / (1.0 + prefactor * sh * sh);
        break;
    }
    case RegimeKind::PropagatingInterior: {
        const double q = std::sqrt(q2);
        const double sn = std::sin(q * width);
        const double prefactor = (kp2 - q2) * (kp2 - q2) / (4.0 * kp2 * q2);
        result.transmission = 1.0 / (1.0 + prefactor * sn * sn);
        break;
    }
    case RegimeKind::CriticalInterior: {
        // leading term of the q -> 0 expansion; |q^2 a^2| is below the
        // classification tolerance here
        const double half = kp * width / 2.0;
        result.transmission = 1.0 / (1.0 + half * half);
        break;
    }
    }
    result.reflection = 1.0 - result.transmission;

    // transmitted amplitude relative to unit incident amplitude
    if (result.regime == RegimeKind::CriticalInterior) {
        result.amplitude = std::exp(-kImag * complexd(kp * width, 0.0))
            / complexd(1.0, -kp * width / 2.0);
    } else {
        const complexd q = std::sqrt(complexd(q2, 0.0));
        const complexd eiqa = std::exp(kImag * q * width);
        const complexd kpl = complexd(kp, 0.0) + q;
        const complexd kmi = complexd(kp, 0.0) - q;
        result.amplitude = 4.0 * kp * q * std::exp(-kImag * complexd(kp * width, 0.0))
            / (kpl * kpl / eiqa - kmi * kmi * eiqa);
    }
    return result;
}

TransmissionResult step_regime_transmission(double energy, double height, double width,
                                            double theta1, double mass, bool literal_form)
{
    if (!(energy > 0.0) || !(mass > 0.0))
        throw DomainError("step_regime_transmission: energy and mass must be positive");
    if (!(width > 0.0))
        throw DomainError("step_regime_transmission: width must be positive");
    check_theta("step_regime_transmission", theta1);
    if (classify_regime(energy, theta1, height) != RegimeKind::PropagatingInterior)
        throw RegimeError("step_regime_transmission: requires E cos^2(theta1) > V");

    const double c = std::cos(theta1);
    const double kp = free_wavenumber(energy, mass) * c;
    const double q = std::sqrt(kp * kp - height * mass / kHbar2Over2Me);
    const double N = kp / q;

    TransmissionResult result{};
    result.model = ModelKind::StepRegime;
    result.regime = RegimeKind::PropagatingInterior;

    if (literal_form) {
        // printed single-expression variant: bracket without Z2^2, overall
        // exp(2 i k2 a) in the denominator, total wavenumbers in the phases
        const double k1 = free_wavenumber(energy, mass);
        const double k2 = std::sqrt((energy - height) * mass / kHbar2Over2Me);
        const double ratio = (N - 1.0) / (N + 1.0);
        const complexd numerator = 4.0 * N / ((1.0 + N) * (1.0 + N))
            * std::exp(kImag * complexd((k2 - k1) * width, 0.0));
        const complexd denominator = (1.0 - ratio * ratio)
            * std::exp(2.0 * kImag * complexd(k2 * width, 0.0));
        const complexd amp = numerator / denominator;
        result.amplitude = amp;
        result.transmission = std::norm(amp);
        result.warnings.emplace_back("printed-form variant");
        flag_if_above_unity(result);
        return result;
    }

    const complexd Z1 = std::exp(kImag * complexd(kp * width, 0.0));
    const complexd Z2 = std::exp(kImag * complexd(q * width, 0.0));
    const complexd amp = 4.0 * N * Z2
        / (Z1 * (complexd((N + 1.0) * (N + 1.0), 0.0) - (N - 1.0) * (N - 1.0) * Z2 * Z2));
    result.amplitude = amp;
    result.transmission = std::norm(amp);
    result.reflection = 1.0 - result.transmission;
    return result;
}

} // namespace angtun
