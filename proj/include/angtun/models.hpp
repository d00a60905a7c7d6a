#pragma once

#include <complex>
#include <optional>
#include <string>
#include <vector>

#include "angtun/kinematics.hpp"

// Closed-form transmission models for the rectangular barrier at oblique
// incidence. Approximate (thick-barrier) models may exceed unity; they are
// returned as-is with a warning flag so that approximation breakdown stays
// visible. Only the exact model reports a reflection probability.

namespace angtun {

enum class ModelKind {
    UsualThick,             // 16 (E/V)(1 - E/V) exp(-2Ka), normal-incidence thick barrier
    AngularPaperLiteral,    // the angular formula with the printed coefficient 8
    AngularPaperBeta,       // 16 beta^2 / (beta^2 + 1)^2 exp(-2Ka)
    AngularConsistentThick, // thick-barrier limit of the momentum-conserving solution
    ExactClosedForm,        // exact single-barrier result, all regimes
    StepRegime,             // propagating-interior amplitude (above-barrier)
};

const char* model_name(ModelKind model);
std::optional<ModelKind> model_from_name(const std::string& name);
const std::vector<ModelKind>& all_models();

struct TransmissionResult {
    ModelKind model;
    double transmission;
    std::optional<double> reflection;          // exact models only
    std::optional<complexd> amplitude;         // where the model yields one
    RegimeKind regime;
    std::vector<std::string> warnings;
};

// Z1 = exp(i k1 a cos theta1), Z2 = exp(i k2 a cos theta2).
// |Z1| = 1 always; |Z2| < 1 in the evanescent regime.
struct PhaseFactors {
    complexd Z1;
    complexd Z2;
};

PhaseFactors phase_factors(const Kinematics& kin, double width);

TransmissionResult usual_thick_transmission(double energy, double height, double width,
                                            double mass = 1.0);

TransmissionResult angular_paper_literal_transmission(double energy, double height, double width,
                                                      double theta1, double mass = 1.0);

TransmissionResult angular_paper_beta_transmission(double energy, double height, double width,
                                                   double theta1, double mass = 1.0);

TransmissionResult angular_consistent_thick_transmission(double energy, double height, double width,
                                                         double theta1, double mass = 1.0);

TransmissionResult exact_barrier_transmission(double energy, double height, double width,
                                              double theta1, double mass = 1.0);

// Above-barrier amplitude. The default form keeps the Z2^2 factor inside the
// denominator bracket and matches the exact closed form; literal_form
// evaluates the printed single-expression variant instead.
TransmissionResult step_regime_transmission(double energy, double height, double width,
                                            double theta1, double mass = 1.0,
                                            bool literal_form = false);

} // namespace angtun
