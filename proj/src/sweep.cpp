#include "angtun/sweep.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <future>
#include <sstream>

#include "angtun/errors.hpp"

namespace angtun {

double EnergyGrid::at(int index) const
{
    return start + static_cast<double>(index) * (stop - start) / static_cast<double>(count - 1);
}

void validate(const SweepConfig& config)
{
    validate(config.barrier);
    if (!(config.mass > 0.0))
        throw ConfigError("sweep config: mass must be positive");
    if (config.models.empty())
        throw ConfigError("sweep config: at least one model is required");
    if (config.energy_grid.count < 2)
        throw ConfigError("sweep config: energy_grid count must be >= 2");
    if (!(config.energy_grid.start < config.energy_grid.stop))
        throw ConfigError("sweep config: energy_grid start must be below stop");
    if (!(config.energy_grid.start > 0.0))
        throw ConfigError("sweep config: energy_grid start must be positive");
    if (config.angle_list.empty())
        throw ConfigError("sweep config: angle_list must be nonempty");
    for (double angle : config.angle_list)
        if (angle < 0.0 || angle > 90.0)
            throw ConfigError("sweep config: angles must lie in [0, 90] degrees");
}

namespace {

std::string trim(const std::string& text)
{
    const auto begin = text.find_first_not_of(" \t\r\n");
    if (begin == std::string::npos)
        return {};
    const auto end = text.find_last_not_of(" \t\r\n");
    return text.substr(begin, end - begin + 1);
}

std::vector<std::string> split_tokens(const std::string& text)
{
    std::vector<std::string> tokens;
    std::string token;
    std::istringstream stream(text);
    while (stream >> token) {
        while (!token.empty() && token.back() == ',')
            token.pop_back();
        if (!token.empty())
            tokens.push_back(token);
    }
    return tokens;
}

double parse_double(const std::string& key, const std::string& value)
{
    try {
        std::size_t consumed = 0;
        const double parsed = std::stod(value, &consumed);
        if (consumed != value.size())
            throw ConfigError("config key '" + key + "': trailing junk in '" + value + "'");
        return parsed;
    } catch (const std::invalid_argument&) {
        throw ConfigError("config key '" + key + "': cannot parse number from '" + value + "'");
    } catch (const std::out_of_range&) {
        throw ConfigError("config key '" + key + "': number out of range: '" + value + "'");
    }
}

} // namespace

SweepConfig parse_config_file(const std::string& path)
{
    std::ifstream input(path);
    if (!input)
        throw IoError("cannot open config file: " + path);

    SweepConfig config{};
    config.barrier = {0.0, 0.0};
    config.energy_grid = {0.0, 0.0, 0};
    config.output = "sweep.csv";

    std::string line;
    int line_number = 0;
    while (std::getline(input, line)) {
        ++line_number;
        const auto comment = line.find('#');
        if (comment != std::string::npos)
            line.erase(comment);
        line = trim(line);
        if (line.empty())
            continue;
        const auto sep = line.find('=');
        if (sep == std::string::npos)
            throw ConfigError(path + ":" + std::to_string(line_number) + ": expected key = value");
        const std::string key = trim(line.substr(0, sep));
        const std::string value = trim(line.substr(sep + 1));

        if (key == "barrier.height") {
            config.barrier.height = parse_double(key, value);
        } else if (key == "barrier.width") {
            config.barrier.width = parse_double(key, value);
        } else if (key == "mass") {
            config.mass = parse_double(key, value);
        } else if (key == "models") {
            config.models.clear();
            for (const auto& token : split_tokens(value)) {
                const auto model = model_from_name(token);
                if (!model)
                    throw ConfigError(path + ":" + std::to_string(line_number)
                                      + ": unknown model '" + token + "'");
                config.models.push_back(*model);
            }
        } else if (key == "energy_grid") {
            const auto tokens = split_tokens(value);
            if (tokens.size() != 3)
                throw ConfigError("config key 'energy_grid': expected 'start stop count'");
            config.energy_grid.start = parse_double(key, tokens[0]);
            config.energy_grid.stop = parse_double(key, tokens[1]);
            config.energy_grid.count = static_cast<int>(parse_double(key, tokens[2]));
        } else if (key == "angle_list") {
            config.angle_list.clear();
            for (const auto& token : split_tokens(value))
                config.angle_list.push_back(parse_double(key, token));
        } else if (key == "output") {
            config.output = value;
        } else if (key == "emit_plot_script") {
            if (value == "true" || value == "1") {
                config.emit_plot_script = true;
            } else if (value == "false" || value == "0") {
                config.emit_plot_script = false;
            } else {
                throw ConfigError("config key 'emit_plot_script': expected true or false");
            }
        } else {
            throw ConfigError(path + ":" + std::to_string(line_number) + ": unknown key '" + key
                              + "'");
        }
    }
    validate(config);
    return config;
}

TransmissionResult compute_point(ModelKind model, double energy, double height, double width,
                                 double theta1, double mass)
{
    switch (model) {
    case ModelKind::UsualThick:
        return usual_thick_transmission(energy, height, width, mass);
    case ModelKind::AngularPaperLiteral:
        return angular_paper_literal_transmission(energy, height, width, theta1, mass);
    case ModelKind::AngularPaperBeta:
        return angular_paper_beta_transmission(energy, height, width, theta1, mass);
    case ModelKind::AngularConsistentThick:
        return angular_consistent_thick_transmission(energy, height, width, theta1, mass);
    case ModelKind::ExactClosedForm:
        return exact_barrier_transmission(energy, height, width, theta1, mass);
    case ModelKind::StepRegime:
        return step_regime_transmission(energy, height, width, theta1, mass);
    }
    throw DomainError("compute_point: unknown model kind");
}

std::vector<SweepRow> run_sweep(const SweepConfig& config, int threads)
{
    validate(config);
    if (threads < 1)
        throw ConfigError("run_sweep: thread count must be >= 1");

    std::vector<double> angles = config.angle_list;
    std::sort(angles.begin(), angles.end());

    const int n_energies = config.energy_grid.count;
    const auto n_rows = angles.size() * static_cast<std::size_t>(n_energies);
    std::vector<SweepRow> rows(n_rows);

    auto fill_row = [&](std::size_t row_index) {
        const std::size_t angle_index = row_index / static_cast<std::size_t>(n_energies);
        const int energy_index = static_cast<int>(row_index % static_cast<std::size_t>(n_energies));
        SweepRow& row = rows[row_index];
        row.angle = angles[angle_index];
        row.energy = config.energy_grid.at(energy_index);
        const double theta1 = deg_to_rad(row.angle);
        row.regime = classify_regime(row.energy, theta1, config.barrier.height);
        row.cells.resize(config.models.size());
        for (std::size_t m = 0; m < config.models.size(); ++m) {
            SweepCell& cell = row.cells[m];
            try {
                TransmissionResult result =
                    compute_point(config.models[m], row.energy, config.barrier.height,
                                  config.barrier.width, theta1, config.mass);
                cell.transmission = result.transmission;
                cell.warnings = std::move(result.warnings);
            } catch (const RegimeError&) {
                cell.transmission = std::nullopt;
                cell.warnings.emplace_back("out-of-regime");
            }
        }
    };

    if (threads == 1) {
        for (std::size_t i = 0; i < n_rows; ++i)
            fill_row(i);
    } else {
        // static row partitioning; every cell is a pure function of its
        // inputs, so the partitioning cannot change the assembled bytes
        std::vector<std::future<void>> futures;
        const std::size_t chunk = (n_rows + static_cast<std::size_t>(threads) - 1)
            / static_cast<std::size_t>(threads);
        for (int t = 0; t < threads; ++t) {
            const std::size_t begin = static_cast<std::size_t>(t) * chunk;
            const std::size_t end = std::min(n_rows, begin + chunk);
            if (begin >= end)
                break;
            futures.push_back(std::async(std::launch::async, [&fill_row, begin, end] {
                for (std::size_t i = begin; i < end; ++i)
                    fill_row(i);
            }));
        }
        for (auto& future : futures)
            future.get();
    }
    return rows;
}

double find_crossover(ModelKind model_a, ModelKind model_b, double theta1, double height,
                      double width, double mass, std::pair<double, double> bracket)
{
    auto difference = [&](double energy) {
        return compute_point(model_a, energy, height, width, theta1, mass).transmission
            - compute_point(model_b, energy, height, width, theta1, mass).transmission;
    };

    double lo = bracket.first;
    double hi = bracket.second;
    if (!(lo < hi))
        throw DomainError("find_crossover: bracket must satisfy lo < hi");

    // A bracket endpoint may sit just outside a model's validity range (for
    // example E = V for the thick-barrier forms); retreat such an endpoint
    // into the interior instead of failing.
    const auto clamp_endpoint = [&](double& endpoint, double toward) {
        double nudge = 1e-9 * (hi - lo);
        for (int attempt = 0; attempt < 64; ++attempt) {
            try {
                return difference(endpoint);
            } catch (const RegimeError&) {
                endpoint += endpoint < toward ? nudge : -nudge;
                nudge *= 2.0;
            }
        }
        return difference(endpoint); // let the final failure propagate
    };
    double f_lo = clamp_endpoint(lo, hi);
    const double f_hi = clamp_endpoint(hi, lo);
    // a strict sign change is required: identical models (difference zero
    // everywhere, e.g. the angular forms against the usual one at theta = 0)
    // have no crossover to report
    if (!((f_lo > 0.0 && f_hi < 0.0) || (f_lo < 0.0 && f_hi > 0.0)))
        throw NoCrossoverError("find_crossover: models do not change order over the bracket");

    // bisect to floating-point exhaustion; the 1e-6 eV requirement is met
    // long before the interval stops shrinking
    while (true) {
        const double mid = 0.5 * (lo + hi);
        if (mid == lo || mid == hi)
            return mid;
        const double f_mid = difference(mid);
        if (f_mid == 0.0)
            return mid;
        if ((f_mid > 0.0) == (f_lo > 0.0)) {
            lo = mid;
            f_lo = f_mid;
        } else {
            hi = mid;
        }
    }
}

namespace {

struct DeviationAccumulator {
    ModelDeviation stats;

    void add(double value, double reference)
    {
        const double abs_dev = std::abs(value - reference);
        stats.max_absolute = std::max(stats.max_absolute, abs_dev);
        stats.mean_absolute += abs_dev;
        if (reference != 0.0)
            stats.max_relative = std::max(stats.max_relative, abs_dev / std::abs(reference));
        if (value > 1.0)
            ++stats.cells_above_unity;
        ++stats.cells_compared;
    }

    ModelDeviation finish()
    {
        if (stats.cells_compared > 0)
            stats.mean_absolute /= stats.cells_compared;
        return stats;
    }
};

} // namespace

ValidationReport validate_models(double height, double width, double mass,
                                 const EnergyGrid& energies, const std::vector<double>& angles_deg)
{
    const std::vector<ModelKind> approximate = {
        ModelKind::UsualThick,
        ModelKind::AngularPaperLiteral,
        ModelKind::AngularPaperBeta,
        ModelKind::AngularConsistentThick,
        ModelKind::StepRegime,
    };

    std::vector<DeviationAccumulator> vs_exact(approximate.size());
    for (std::size_t m = 0; m < approximate.size(); ++m) {
        vs_exact[m].stats.model = model_name(approximate[m]);
        vs_exact[m].stats.reference = model_name(ModelKind::ExactClosedForm);
    }
    DeviationAccumulator exact_vs_tm;
    exact_vs_tm.stats.model = model_name(ModelKind::ExactClosedForm);
    exact_vs_tm.stats.reference = "transfer_matrix";
    DeviationAccumulator exact_vs_ode;
    exact_vs_ode.stats.model = model_name(ModelKind::ExactClosedForm);
    exact_vs_ode.stats.reference = "ode_oracle";
    DeviationAccumulator literal_vs_beta;
    literal_vs_beta.stats.model = model_name(ModelKind::AngularPaperLiteral);
    literal_vs_beta.stats.reference = model_name(ModelKind::AngularPaperBeta);

    const PotentialProfile profile{{{height, width}}};

    for (double angle : angles_deg) {
        const double theta1 = deg_to_rad(angle);
        for (int i = 0; i < energies.count; ++i) {
            const double energy = energies.at(i);
            const double exact =
                exact_barrier_transmission(energy, height, width, theta1, mass).transmission;

            for (std::size_t m = 0; m < approximate.size(); ++m) {
                try {
                    const double value =
                        compute_point(approximate[m], energy, height, width, theta1, mass)
                            .transmission;
                    vs_exact[m].add(value, exact);
                } catch (const RegimeError&) {
                    // skipped: model undefined at this grid cell
                }
            }
            exact_vs_tm.add(exact, solve_profile(profile, energy, theta1, mass).result.transmission);
            if (!is_grazing(theta1))
                exact_vs_ode.add(exact, integrate_transmission(profile, energy, theta1, mass));
            try {
                const double literal =
                    angular_paper_literal_transmission(energy, height, width, theta1, mass)
                        .transmission;
                const double beta =
                    angular_paper_beta_transmission(energy, height, width, theta1, mass)
                        .transmission;
                if (beta != 0.0 || literal != 0.0)
                    literal_vs_beta.add(literal, beta);
            } catch (const RegimeError&) {
            }
        }
    }

    ValidationReport report;
    for (auto& accumulator : vs_exact)
        report.deviations.push_back(accumulator.finish());
    report.deviations.push_back(literal_vs_beta.finish());
    report.deviations.push_back(exact_vs_tm.finish());
    report.deviations.push_back(exact_vs_ode.finish());
    return report;
}

const ModelDeviation* ValidationReport::find(const std::string& model,
                                             const std::string& reference) const
{
    for (const auto& deviation : deviations)
        if (deviation.model == model && deviation.reference == reference)
            return &deviation;
    return nullptr;
}

std::string format_number(double value)
{
    char buffer[64];
    std::snprintf(buffer, sizeof(buffer), "%.12g", value);
    return buffer;
}

std::string ValidationReport::to_table() const
{
    std::ostringstream out;
    out << "model                      reference        max_abs      mean_abs     max_rel      "
           "cells  above_unity\n";
    for (const auto& d : deviations) {
        char line[256];
        std::snprintf(line, sizeof(line), "%-26s %-16s %-12.5g %-12.5g %-12.5g %-6d %d\n",
                      d.model.c_str(), d.reference.c_str(), d.max_absolute, d.mean_absolute,
                      d.max_relative, d.cells_compared, d.cells_above_unity);
        out << line;
    }
    return out.str();
}

void emit_csv(const std::vector<SweepRow>& rows, const std::vector<ModelKind>& models,
              const std::string& path)
{
    if (rows.empty())
        throw DomainError("emit_csv: no rows to write");

    std::ofstream out(path, std::ios::binary); // binary keeps LF endings everywhere
    if (!out)
        throw IoError("emit_csv: cannot open for writing: " + path);

    out << "energy_eV,angle_deg";
    for (ModelKind model : models)
        out << ',' << model_name(model);
    out << ",regime,warnings\n";

    for (const auto& row : rows) {
        out << format_number(row.energy) << ',' << format_number(row.angle);
        std::string warnings;
        for (std::size_t m = 0; m < row.cells.size(); ++m) {
            out << ',';
            if (row.cells[m].transmission)
                out << format_number(*row.cells[m].transmission);
            for (const auto& warning : row.cells[m].warnings) {
                if (!warnings.empty())
                    warnings += ';';
                warnings += std::string(model_name(models[m])) + ":" + warning;
            }
        }
        out << ',' << regime_name(row.regime) << ',' << warnings << '\n';
    }
    if (!out)
        throw IoError("emit_csv: write failed: " + path);
}

void emit_plot_script(const std::vector<ModelKind>& models, const std::string& csv_path,
                      const std::string& script_path)
{
    // reference the CSV by basename: the script is meant to sit next to it
    std::string csv_name = csv_path;
    if (const auto slash = csv_name.find_last_of('/'); slash != std::string::npos)
        csv_name = csv_name.substr(slash + 1);

    std::ofstream out(script_path, std::ios::binary);
    if (!out)
        throw IoError("emit_plot_script: cannot open for writing: " + script_path);

    out << "#!/usr/bin/env python3\n"
        << "# Plots transmission vs energy, one panel per incidence angle.\n"
        << "import csv\n"
        << "import matplotlib\n"
        << "matplotlib.use(\"Agg\")\n"
        << "import matplotlib.pyplot as plt\n"
        << "\n"
        << "CSV = \"" << csv_name << "\"\n"
        << "MODELS = [";
    for (std::size_t m = 0; m < models.size(); ++m)
        out << (m ? ", " : "") << '"' << model_name(models[m]) << '"';
    out << "]\n"
        << "\n"
        << "rows = list(csv.DictReader(open(CSV, newline=\"\")))\n"
        << "angles = sorted({float(r[\"angle_deg\"]) for r in rows})\n"
        << "fig, axes = plt.subplots(1, len(angles), figsize=(4 * len(angles), 3.2),\n"
        << "                         sharey=True, squeeze=False)\n"
        << "for ax, angle in zip(axes[0], angles):\n"
        << "    at_angle = [r for r in rows if float(r[\"angle_deg\"]) == angle]\n"
        << "    for model in MODELS:\n"
        << "        pts = [(float(r[\"energy_eV\"]), float(r[model]))\n"
        << "               for r in at_angle if r[model] != \"\"]\n"
        << "        if pts:\n"
        << "            ax.plot([p[0] for p in pts], [p[1] for p in pts], label=model)\n"
        << "    ax.set_title(f\"theta1 = {angle:g} deg\")\n"
        << "    ax.set_xlabel(\"energy [eV]\")\n"
        << "axes[0][0].set_ylabel(\"transmission\")\n"
        << "axes[0][0].legend(fontsize=8)\n"
        << "fig.tight_layout()\n"
        << "fig.savefig(CSV.replace(\".csv\", \"\") + \".png\", dpi=150)\n"
        << "print(\"wrote\", CSV.replace(\".csv\", \"\") + \".png\")\n";
    if (!out)
        throw IoError("emit_plot_script: write failed: " + script_path);
}

} // namespace angtun
