// lattice.hpp — giant atom on a finite tight-binding resonator chain

#pragma once

#include <complex>
#include <vector>

#include "giantatom/modulation.hpp"
#include "giantatom/trajectory.hpp"

namespace giantatom {

// Atom resonant with the band center, coupled at two sites `span` apart,
// centered in a hard-wall chain of `chain_len` sites.
struct LatticeConfig {
    double hopping{1.0}; // J
    double g0{1.0};      // bare atom-chain coupling
    int span{1};         // N, site separation of the coupling pair
    int chain_len{0};    // M
    ModulationProfile schedule{ConstantProfile{}};
    double horizon{1.0};
    double step{0.01};
    bool operator==(const LatticeConfig&) const = default;
};

// Smallest chain that keeps the excitation front (speed 2J sites per unit
// time) away from the walls over the full horizon.
int min_chain_len(double hopping, double horizon, int span);

// min_chain_len plus an extra per-side margin covering the Airy transition
// width of the front, adjusted to the odd M - N parity that exact centering
// needs. Used when no chain_len is given.
int auto_chain_len(double hopping, double horizon, int span);

// Index of the left coupling site, (M - 1 - N) / 2.
int left_coupling_site(const LatticeConfig& cfg);

// Throws ValidationError on invariant violations: J, g0 > 0; N >= 1;
// M >= N + 2 and M >= min_chain_len; M - N odd (centering); step * J <= 0.05.
void validate(const LatticeConfig& cfg);

struct LatticeState {
    std::complex<double> c_e{0.0, 0.0};
    std::vector<std::complex<double>> field; // c_m, one amplitude per site

    double norm() const;
};

// Time derivative of (c_e, field) under hard-wall hopping and the scheduled
// coupling g(t) = g0 u(t) at the two coupling sites.
LatticeState lattice_rhs(const LatticeConfig& cfg, double t, const LatticeState& state);

struct LatticeRun {
    Trajectory atom;             // c_e samples
    std::vector<double> norms;   // |c_e|^2 + sum_m |c_m|^2 per node
    LatticeState final_state;
    double max_edge_occupancy{0.0}; // largest outer-4-site occupancy seen
};

// RK4 from c_e(0) = 1 and vacuum field, on a grid aligned with every schedule
// breakpoint. Records population and total norm each node. Throws
// BoundaryLeakError when the outer-4-site occupancy exceeds 1e-6, GridError /
// ValidationError as in the continuum integrator.
LatticeRun integrate_lattice(const LatticeConfig& cfg);

struct EffectiveContinuum {
    double phi{0.0};
    double tau{0.0};
};

// (N pi / 2, N / 2J): the continuum phase and delay a resonant lattice run
// maps onto, for cross-model comparisons.
EffectiveContinuum effective_phase_and_delay(const LatticeConfig& cfg);

} // namespace giantatom
