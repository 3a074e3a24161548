// analysis.hpp — observables, plateau detection, and short-time fits

#pragma once

#include <utility>

#include "giantatom/trajectory.hpp"

namespace giantatom {

struct PlateauReport {
    double value{0.0};                        // mean population over the window
    std::pair<double, double> window{0.0, 0.0};
    bool converged{false};
    double max_slope{0.0};                    // max |d population / dt| over the window
};

// F_s = (dg/g0)(1 + dg/g0); its sign predicts a population revival (< 0) or
// reduction (> 0) at a sudden coupling step.
double fs_metric(double delta_rel);

// Examines the final tail_fraction of the trajectory. converged requires both
// max - min < tol and max_slope * window_length < tol over the window; the
// report carries the window mean either way.
PlateauReport detect_plateau(const Trajectory& traj, double tail_fraction = 0.2,
                             double tol = 1e-3);

// |c_e|^2 at the grid node nearest to t. Throws RangeError outside [0, horizon].
double population_at(const Trajectory& traj, double t);

// Least-squares coefficient a of population(t) ~ 1 - a t^2 over [0, t_max].
// Throws FitError when the residual RMS exceeds 1e-3 (the trajectory is not in
// a parabolic regime).
double short_time_quadratic(const Trajectory& traj, double t_max);

} // namespace giantatom
