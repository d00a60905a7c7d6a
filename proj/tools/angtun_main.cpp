// Command-line front end: single-point evaluation, energy/angle sweeps with
// CSV (and optional plot-script) emission, crossover search, and the
// cross-model validation report.
//
// Exit codes: 0 success, 1 domain/regime errors, 2 I/O or config errors.

#include <complex>
#include <cstdio>
#include <iostream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "angtun/errors.hpp"
#include "angtun/sweep.hpp"

namespace {

angtun::ModelKind parse_model(const std::string& name)
{
    const auto model = angtun::model_from_name(name);
    if (!model) {
        std::string known;
        for (angtun::ModelKind kind : angtun::all_models()) {
            if (!known.empty())
                known += ", ";
            known += angtun::model_name(kind);
        }
        throw angtun::ConfigError("unknown model '" + name + "' (known: " + known + ")");
    }
    return *model;
}

void print_result(const angtun::TransmissionResult& result)
{
    std::printf("model        : %s\n", angtun::model_name(result.model));
    std::printf("regime       : %s\n", angtun::regime_name(result.regime));
    std::printf("transmission : %s\n", angtun::format_number(result.transmission).c_str());
    if (result.reflection)
        std::printf("reflection   : %s\n", angtun::format_number(*result.reflection).c_str());
    if (result.amplitude) {
        const double imag = result.amplitude->imag();
        std::printf("amplitude    : %s %s%si\n",
                    angtun::format_number(result.amplitude->real()).c_str(),
                    imag < 0.0 ? "-" : "+",
                    angtun::format_number(std::abs(imag)).c_str());
    }
    for (const auto& warning : result.warnings)
        std::printf("warning      : %s\n", warning.c_str());
}

} // namespace

int main(int argc, char** argv)
{
    CLI::App app{"Quantum transmission through a rectangular barrier at oblique incidence"};
    app.require_subcommand(1);

    // point
    auto* point = app.add_subcommand("point", "Evaluate one model at one (E, angle) point");
    std::string point_model;
    double point_energy = 0.0, point_angle = 0.0, point_height = 0.0, point_width = 0.0;
    double point_mass = 1.0;
    point->add_option("--model", point_model, "Model name")->required();
    point->add_option("--energy", point_energy, "Particle energy [eV]")->required();
    point->add_option("--angle", point_angle, "Incidence angle [deg]")->required();
    point->add_option("--height", point_height, "Barrier height [eV]")->required();
    point->add_option("--width", point_width, "Barrier width [nm]")->required();
    point->add_option("--mass", point_mass, "Particle mass [electron masses]");

    // sweep
    auto* sweep = app.add_subcommand("sweep", "Run a (angle, energy, model) grid from a config file");
    std::string sweep_config_path, sweep_out;
    int sweep_threads = 1;
    sweep->add_option("--config", sweep_config_path, "Sweep config file")->required();
    sweep->add_option("--out", sweep_out, "Override the config's output CSV path");
    sweep->add_option("--threads", sweep_threads, "Worker threads (output is thread-invariant)");

    // crossover
    auto* crossover = app.add_subcommand("crossover", "Find the energy where two models cross");
    std::string cross_a, cross_b;
    double cross_angle = 0.0, cross_height = 0.0, cross_width = 0.0, cross_mass = 1.0;
    double cross_emin = 0.0, cross_emax = 0.0;
    crossover->add_option("--model-a", cross_a, "First model")->required();
    crossover->add_option("--model-b", cross_b, "Second model")->required();
    crossover->add_option("--angle", cross_angle, "Incidence angle [deg]")->required();
    crossover->add_option("--height", cross_height, "Barrier height [eV]")->required();
    crossover->add_option("--width", cross_width, "Barrier width [nm]")->required();
    crossover->add_option("--mass", cross_mass, "Particle mass [electron masses]");
    crossover->add_option("--emin", cross_emin, "Bracket lower edge [eV]")->required();
    crossover->add_option("--emax", cross_emax, "Bracket upper edge [eV]")->required();

    // validate
    auto* validate_cmd = app.add_subcommand("validate", "Cross-model deviation report");
    double val_height = 0.0, val_width = 0.0, val_mass = 1.0;
    double val_estart = 1.0, val_estop = 12.0;
    int val_ecount = 23;
    std::vector<double> val_angles = {0.0, 30.0, 45.0, 60.0};
    validate_cmd->add_option("--height", val_height, "Barrier height [eV]")->required();
    validate_cmd->add_option("--width", val_width, "Barrier width [nm]")->required();
    validate_cmd->add_option("--mass", val_mass, "Particle mass [electron masses]");
    validate_cmd->add_option("--estart", val_estart, "Grid start [eV]");
    validate_cmd->add_option("--estop", val_estop, "Grid stop [eV]");
    validate_cmd->add_option("--ecount", val_ecount, "Grid point count");
    validate_cmd->add_option("--angles", val_angles, "Angles [deg]")->delimiter(',');

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& error) {
        const int code = app.exit(error);
        return code == 0 ? 0 : 2;
    }

    try {
        if (*point) {
            print_result(angtun::compute_point(parse_model(point_model), point_energy,
                                               point_height, point_width,
                                               angtun::deg_to_rad(point_angle), point_mass));
        } else if (*sweep) {
            angtun::SweepConfig config = angtun::parse_config_file(sweep_config_path);
            if (!sweep_out.empty())
                config.output = sweep_out;
            const auto rows = angtun::run_sweep(config, sweep_threads);
            angtun::emit_csv(rows, config.models, config.output);
            std::printf("wrote %zu rows to %s\n", rows.size(), config.output.c_str());
            if (config.emit_plot_script) {
                std::string script = config.output;
                if (const auto dot = script.rfind(".csv"); dot != std::string::npos)
                    script.erase(dot);
                script += "_plot.py";
                angtun::emit_plot_script(config.models, config.output, script);
                std::printf("wrote plot script %s\n", script.c_str());
            }
        } else if (*crossover) {
            const double energy = angtun::find_crossover(
                parse_model(cross_a), parse_model(cross_b), angtun::deg_to_rad(cross_angle),
                cross_height, cross_width, cross_mass, {cross_emin, cross_emax});
            std::printf("crossover_eV : %.6f\n", energy);
        } else if (*validate_cmd) {
            const angtun::ValidationReport report = angtun::validate_models(
                val_height, val_width, val_mass, {val_estart, val_estop, val_ecount}, val_angles);
            std::fputs(report.to_table().c_str(), stdout);
        }
    } catch (const angtun::ConfigError& error) {
        std::cerr << "config error: " << error.what() << '\n';
        return 2;
    } catch (const angtun::IoError& error) {
        std::cerr << "io error: " << error.what() << '\n';
        return 2;
    } catch (const std::exception& error) {
        std::cerr << "error: " << error.what() << '\n';
        return 1;
    }
    return 0;
}
