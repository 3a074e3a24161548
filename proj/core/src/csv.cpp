#include "giantatom/csv.hpp"

#include <charconv>
#include <ostream>

#include "giantatom/errors.hpp"

namespace giantatom {

std::string format_value(double v) {
    // locale-independent, 12 significant digits
    char buf[40];
    auto res = std::to_chars(buf, buf + sizeof(buf), v, std::chars_format::general, 12);
    return std::string(buf, res.ptr);
}

void write_continuum_csv(std::ostream& os, const Trajectory& traj,
                         const ContinuumParams& params) {
    os << "t,re_ce,im_ce,population,u1,u2\n";
    for (std::size_t i = 0; i < traj.size(); ++i) {
        const double t = traj.times[i];
        os << format_value(t) << ',' << format_value(traj.amps[i].real()) << ','
           << format_value(traj.amps[i].imag()) << ',' << format_value(traj.populations[i])
           << ',' << format_value(eval_profile(params.profile1, t)) << ','
           << format_value(eval_profile(params.profile2, t)) << '\n';
    }
}

void write_lattice_csv(std::ostream& os, const LatticeRun& run, const LatticeConfig& cfg) {
    os << "t,re_ce,im_ce,population,g_over_g0,norm\n";
    const Trajectory& traj = run.atom;
    for (std::size_t i = 0; i < traj.size(); ++i) {
        const double t = traj.times[i];
        os << format_value(t) << ',' << format_value(traj.amps[i].real()) << ','
           << format_value(traj.amps[i].imag()) << ',' << format_value(traj.populations[i])
           << ',' << format_value(eval_profile(cfg.schedule, t)) << ','
           << format_value(run.norms[i]) << '\n';
    }
}

void write_sweep_csv(std::ostream& os, const SweepTable& table,
                     const std::vector<double>& display_values) {
    if (display_values.size() != table.cells.size()) {
        throw ValidationError("sweep display values do not match the table cells");
    }
    os << "# axis=" << table.param << ",reducer=" << table.reducer << "\n";
    os << "axis_value,metric\n";
    for (std::size_t i = 0; i < table.cells.size(); ++i) {
        os << format_value(display_values[i]) << ',' << format_value(table.cells[i].metric)
           << '\n';
    }
}

} // namespace giantatom
