#include "giantatom/runner.hpp"

#include <algorithm>
#include <filesystem>
#include <fstream>
#include <sstream>

#include "giantatom/csv.hpp"
#include "giantatom/errors.hpp"
#include "giantatom/svg_plot.hpp"

namespace giantatom {

namespace {

namespace fs = std::filesystem;

void open_output(std::ofstream& out, const std::string& path) {
    const fs::path p(path);
    std::error_code ec;
    if (p.has_parent_path() && !fs::exists(p.parent_path(), ec)) {
        fs::create_directories(p.parent_path(), ec);
        if (ec) throw IoError("cannot create directory " + p.parent_path().string());
    }
    out.open(path, std::ios::binary); // LF line endings everywhere
    if (!out) throw IoError("cannot open " + path + " for writing");
}

void finish_output(std::ofstream& out, const std::string& path) {
    out.flush();
    if (!out) throw IoError("write to " + path + " failed");
}

std::string population_plot(const Trajectory& traj, const std::string& title,
                            const std::string& x_label) {
    std::ostringstream svg;
    PlotSeries series;
    series.label = "population";
    series.x = traj.times;
    series.y = traj.populations;
    write_line_plot(svg, title, x_label, "|c_e|^2", {series});
    return svg.str();
}

} // namespace

int exit_code_for(const std::exception& error) {
    if (dynamic_cast<const ParseError*>(&error) || dynamic_cast<const ValidationError*>(&error)) {
        return kExitConfig;
    }
    if (dynamic_cast<const IoError*>(&error)) return kExitIo;
    if (dynamic_cast<const GridError*>(&error) || dynamic_cast<const StabilityError*>(&error) ||
        dynamic_cast<const BoundaryLeakError*>(&error) ||
        dynamic_cast<const DomainError*>(&error) || dynamic_cast<const RangeError*>(&error) ||
        dynamic_cast<const FitError*>(&error)) {
        return kExitNumerical;
    }
    return 1;
}

std::string error_kind_of(const std::exception& error) {
    if (dynamic_cast<const ParseError*>(&error)) return "ParseError";
    if (dynamic_cast<const ValidationError*>(&error)) return "ValidationError";
    if (dynamic_cast<const GridError*>(&error)) return "GridError";
    if (dynamic_cast<const StabilityError*>(&error)) return "StabilityError";
    if (dynamic_cast<const BoundaryLeakError*>(&error)) return "BoundaryLeakError";
    if (dynamic_cast<const DomainError*>(&error)) return "DomainError";
    if (dynamic_cast<const RangeError*>(&error)) return "RangeError";
    if (dynamic_cast<const FitError*>(&error)) return "FitError";
    if (dynamic_cast<const IoError*>(&error)) return "IoError";
    return "Error";
}

RunOutcome run(const RunSpec& spec, const RunOptions& options) {
    RunOutcome outcome;
    outcome.csv_path = !options.csv_override.empty() ? options.csv_override : spec.csv_path;
    outcome.svg_path = !options.svg_override.empty() ? options.svg_override : spec.svg_path;

    try {
        if (outcome.csv_path.empty()) {
            throw ValidationError("no CSV output path; set [output] csv or pass --csv");
        }

        std::string csv_text;
        std::string svg_text;
        std::size_t rows = 0;

        if (spec.mode == RunMode::Sweep) {
            if (!spec.sweep) throw ValidationError("sweep mode without a [sweep] section");
            const SimCase base = build_sim(spec);
            const SweepAxis axis = build_axis(*spec.sweep);
            const SweepTable table = run_sweep(base, axis, spec.sweep->reducer);

            // cells come back sorted; show the axis in config units, same order
            std::vector<double> display = spec.sweep->values;
            std::stable_sort(display.begin(), display.end());
            std::ostringstream csv;
            write_sweep_csv(csv, table, display);
            csv_text = csv.str();
            rows = table.cells.size();

            if (!outcome.svg_path.empty()) {
                PlotSeries series;
                series.label = table.reducer;
                for (std::size_t i = 0; i < table.cells.size(); ++i) {
                    if (!table.cells[i].ok) continue;
                    series.x.push_back(display[i]);
                    series.y.push_back(table.cells[i].metric);
                }
                std::ostringstream svg;
                write_line_plot(svg, "sweep over " + spec.sweep->param, spec.sweep->param,
                                table.reducer, {series});
                svg_text = svg.str();
            }
        } else if (spec.mode == RunMode::Continuum) {
            const auto sim = std::get<ContinuumCase>(build_sim(spec));
            const Trajectory traj = integrate(sim.params, sim.horizon, sim.steps_per_tau);
            std::ostringstream csv;
            write_continuum_csv(csv, traj, sim.params);
            csv_text = csv.str();
            rows = traj.size();
            if (!outcome.svg_path.empty()) {
                svg_text = population_plot(traj, "atomic population", "Gamma0 t");
            }
        } else {
            const auto sim = std::get<LatticeCase>(build_sim(spec));
            const LatticeRun lattice_run = integrate_lattice(sim.config);
            std::ostringstream csv;
            write_lattice_csv(csv, lattice_run, sim.config);
            csv_text = csv.str();
            rows = lattice_run.atom.size();
            if (!outcome.svg_path.empty()) {
                svg_text = population_plot(lattice_run.atom, "atomic population", "g0 t");
            }
        }

        std::ofstream csv_file;
        open_output(csv_file, outcome.csv_path);
        csv_file << csv_text;
        finish_output(csv_file, outcome.csv_path);

        if (!outcome.svg_path.empty()) {
            std::ofstream svg_file;
            open_output(svg_file, outcome.svg_path);
            svg_file << svg_text;
            finish_output(svg_file, outcome.svg_path);
        }

        std::ostringstream summary;
        summary << "wrote " << outcome.csv_path << " (" << rows << " rows)";
        if (!outcome.svg_path.empty()) summary << " and " << outcome.svg_path;
        outcome.message = summary.str();
    } catch (const std::exception& e) {
        outcome.exit_code = exit_code_for(e);
        outcome.error_kind = error_kind_of(e);
        outcome.message = e.what();
    }
    return outcome;
}

} // namespace giantatom
