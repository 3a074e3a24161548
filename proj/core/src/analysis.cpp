#include "giantatom/analysis.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "giantatom/errors.hpp"

namespace giantatom {

double fs_metric(double delta_rel) {
    return delta_rel * (1.0 + delta_rel);
}

PlateauReport detect_plateau(const Trajectory& traj, double tail_fraction, double tol) {
    if (traj.size() == 0) throw ValidationError("detect_plateau requires a non-empty trajectory");
    if (!(tail_fraction > 0.0) || tail_fraction > 0.5) {
        throw ValidationError("tail_fraction must lie in (0, 0.5]");
    }

    const double horizon = traj.horizon();
    const double t_start = horizon * (1.0 - tail_fraction);
    std::size_t i0 = 0;
    while (i0 + 1 < traj.size() && traj.times[i0] < t_start - 1e-12 * std::max(horizon, 1.0)) {
        ++i0;
    }

    double lo = traj.populations[i0];
    double hi = lo;
    double sum = 0.0;
    double max_slope = 0.0;
    for (std::size_t i = i0; i < traj.size(); ++i) {
        const double p = traj.populations[i];
        lo = std::min(lo, p);
        hi = std::max(hi, p);
        sum += p;
        // d|c|^2/dt = 2 Re(conj(c) dc/dt), exact on the stored samples
        const double slope =
            std::abs(2.0 * std::real(std::conj(traj.amps[i]) * traj.derivs[i]));
        max_slope = std::max(max_slope, slope);
    }

    PlateauReport report;
    report.window = {traj.times[i0], traj.times.back()};
    report.value = sum / static_cast<double>(traj.size() - i0);
    report.max_slope = max_slope;
    const double window_len = report.window.second - report.window.first;
    report.converged = (hi - lo < tol) && (max_slope * window_len < tol);
    return report;
}

double population_at(const Trajectory& traj, double t) {
    if (traj.size() == 0) throw RangeError("empty trajectory");
    const double horizon = traj.horizon();
    const double slack = 1e-9 * std::max(horizon, 1.0);
    if (t < -slack || t > horizon + slack) {
        throw RangeError("t=" + std::to_string(t) + " outside [0, " + std::to_string(horizon) +
                         "]");
    }
    auto i = static_cast<std::int64_t>(std::llround(t / traj.step));
    i = std::clamp<std::int64_t>(i, 0, static_cast<std::int64_t>(traj.size()) - 1);
    return traj.populations[static_cast<std::size_t>(i)];
}

double short_time_quadratic(const Trajectory& traj, double t_max) {
    if (!(t_max > 0.0)) throw ValidationError("t_max must be positive");
    std::size_t count = 0;
    while (count < traj.size() && traj.times[count] <= t_max * (1.0 + 1e-12)) ++count;
    if (count < 3) throw ValidationError("fit window holds fewer than 3 samples");

    double st4 = 0.0;
    double moment = 0.0;
    for (std::size_t i = 0; i < count; ++i) {
        const double t2 = traj.times[i] * traj.times[i];
        st4 += t2 * t2;
        moment += (1.0 - traj.populations[i]) * t2;
    }
    const double a = st4 > 0.0 ? moment / st4 : 0.0;

    double ss = 0.0;
    for (std::size_t i = 0; i < count; ++i) {
        const double t2 = traj.times[i] * traj.times[i];
        const double r = traj.populations[i] - (1.0 - a * t2);
        ss += r * r;
    }
    const double rms = std::sqrt(ss / static_cast<double>(count));
    if (rms > 1e-3) {
        throw FitError("population is not parabolic over [0, " + std::to_string(t_max) +
                       "]: residual RMS " + std::to_string(rms));
    }
    return a;
}

} // namespace giantatom
