// grid.hpp — uniform grids aligned with the delay and profile breakpoints

#pragma once

#include <cstdint>
#include <vector>

namespace giantatom {

struct AlignedGrid {
    double step{0.0};
    std::int64_t n_steps{0};
    std::int64_t delay_steps{0}; // tau / step (0 when tau == 0)
};

// Largest step <= nominal_step such that horizon, tau (when > 0) and every
// time in `mandatory` is an integer multiple of the step, within a relative
// tolerance of 1e-12 * horizon. Throws GridError when the times admit no
// common grid coarser than horizon / 1e8.
AlignedGrid build_aligned_grid(double horizon, double nominal_step, double tau,
                               const std::vector<double>& mandatory);

} // namespace giantatom
