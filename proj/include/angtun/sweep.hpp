#pragma once

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "angtun/models.hpp"
#include "angtun/ode_oracle.hpp"

// Sweep harness: grid evaluation over (angle, energy, model) triples with
// deterministic ordering and byte-stable CSV emission, plus the crossover
// search and the cross-model validation report.

namespace angtun {

struct EnergyGrid {
    double start; // eV
    double stop;  // eV
    int count;

    double at(int index) const;
};

struct SweepConfig {
    BarrierSpec barrier;
    double mass = 1.0; // electron masses
    std::vector<ModelKind> models;
    EnergyGrid energy_grid;
    std::vector<double> angle_list; // degrees, in [0, 90]
    std::string output;
    bool emit_plot_script = false;
};

void validate(const SweepConfig& config);

// Flat key = value config file; keys follow the SweepConfig field names
// (barrier.height, barrier.width, mass, models, energy_grid, angle_list,
// output, emit_plot_script). Unknown keys are errors.
SweepConfig parse_config_file(const std::string& path);

struct SweepCell {
    std::optional<double> transmission; // absent when out of the model's regime
    std::vector<std::string> warnings;
};

struct SweepRow {
    double energy;    // eV
    double angle;     // degrees
    std::vector<SweepCell> cells; // one per config.models entry
    RegimeKind regime;
};

// Single-point dispatch to the model implementations; StepRegime uses the
// corrected (default) form.
TransmissionResult compute_point(ModelKind model, double energy, double height, double width,
                                 double theta1, double mass = 1.0);

// Rows in (angle-major, energy-minor) ascending order; out-of-regime cells
// are empty rather than fatal. Cell evaluation may be parallelized; assembly
// is order-preserving, so the thread count never changes the output.
std::vector<SweepRow> run_sweep(const SweepConfig& config, int threads = 1);

// Bisection for T_a(E) = T_b(E) inside the bracket, run to floating-point
// convergence (well past the 1e-6 eV requirement).
double find_crossover(ModelKind model_a, ModelKind model_b, double theta1, double height,
                      double width, double mass, std::pair<double, double> bracket);

// Deviation statistics of one computation route against a reference route.
// References are the exact closed form, the transfer-matrix solver
// ("transfer_matrix") and the ODE oracle ("ode_oracle").
struct ModelDeviation {
    std::string model;
    std::string reference;
    double max_absolute = 0.0;
    double mean_absolute = 0.0;
    double max_relative = 0.0;
    int cells_compared = 0;
    int cells_above_unity = 0;
};

struct ValidationReport {
    std::vector<ModelDeviation> deviations;

    std::string to_table() const;
    const ModelDeviation* find(const std::string& model, const std::string& reference) const;
};

// Max/mean deviations of every model against ExactClosedForm and the ODE
// oracle (and of the exact closed form against the transfer-matrix solver)
// over the grid; out-of-regime cells are skipped.
ValidationReport validate_models(double height, double width, double mass,
                                 const EnergyGrid& energies,
                                 const std::vector<double>& angles_deg);

void emit_csv(const std::vector<SweepRow>& rows, const std::vector<ModelKind>& models,
              const std::string& path);

// Self-contained matplotlib script that reads the CSV by relative path.
void emit_plot_script(const std::vector<ModelKind>& models, const std::string& csv_path,
                      const std::string& script_path);

// 12 significant digits, plain decimal point, no separators.
std::string format_number(double value);

} // namespace angtun
