// sweep.hpp — one-axis parameter scans over simulation runs

#pragma once

#include <string>
#include <variant>
#include <vector>

#include "giantatom/analysis.hpp"
#include "giantatom/continuum.hpp"
#include "giantatom/lattice.hpp"

namespace giantatom {

struct ContinuumCase {
    ContinuumParams params;
    double horizon{1.0};
    int steps_per_tau{64};
    bool operator==(const ContinuumCase&) const = default;
};

struct LatticeCase {
    LatticeConfig config;
    bool operator==(const LatticeCase&) const = default;
};

using SimCase = std::variant<ContinuumCase, LatticeCase>;

// Axis parameters: delta_rel, theta, omega, phi, t_on, t_off, t_switch, N, J.
// Angles are in radians here; the config layer converts from units of pi.
struct SweepAxis {
    std::string param;
    std::vector<double> values;
};

struct Reducer {
    enum class Kind { Plateau, PopulationAt };
    Kind kind{Kind::Plateau};
    double at_time{0.0};       // PopulationAt
    double tail_fraction{0.2}; // Plateau
    double tol{1e-3};          // Plateau
    bool operator==(const Reducer&) const = default;

    std::string name() const;
};

struct SweepCell {
    double axis_value{0.0};
    double metric{0.0};
    bool ok{false};
    std::string error; // empty when ok
};

struct SweepTable {
    std::string param;
    std::string reducer;
    std::vector<SweepCell> cells; // sorted by axis value
};

// Returns a copy of `base` with one named parameter replaced. Throws
// ValidationError for unknown names or incompatible profile kinds.
SimCase apply_axis_value(const SimCase& base, const std::string& param, double value);

// One simulation per axis value, dispatched over a worker pool; cells are
// merged in ascending axis order regardless of completion order. Per-cell
// failures land in the cell instead of aborting the sweep. max_threads <= 0
// picks the hardware concurrency; the GIANTATOM_THREADS environment variable
// overrides both.
SweepTable run_sweep(const SimCase& base, const SweepAxis& axis, const Reducer& reducer,
                     int max_threads = 0);

} // namespace giantatom
