// csv.hpp — deterministic CSV writers (12 significant digits, LF endings)

#pragma once

#include <iosfwd>
#include <string>
#include <vector>

#include "giantatom/continuum.hpp"
#include "giantatom/lattice.hpp"
#include "giantatom/sweep.hpp"

namespace giantatom {

std::string format_value(double v);

// columns: t,re_ce,im_ce,population,u1,u2
void write_continuum_csv(std::ostream& os, const Trajectory& traj,
                         const ContinuumParams& params);

// columns: t,re_ce,im_ce,population,g_over_g0,norm
void write_lattice_csv(std::ostream& os, const LatticeRun& run, const LatticeConfig& cfg);

// one '# axis=...,reducer=...' comment, then columns: axis_value,metric.
// display_values are the axis values in config units, aligned with the cells.
void write_sweep_csv(std::ostream& os, const SweepTable& table,
                     const std::vector<double>& display_values);

} // namespace giantatom
