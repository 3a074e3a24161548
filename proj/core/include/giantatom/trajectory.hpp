// trajectory.hpp — uniformly sampled complex amplitude with derivative samples

#pragma once

#include <complex>
#include <cstddef>
#include <vector>

namespace giantatom {

struct Trajectory {
    double step{0.0};
    std::vector<double> times;                // t_i = i * step
    std::vector<std::complex<double>> amps;   // c_e(t_i)
    std::vector<std::complex<double>> derivs; // dc_e/dt at t_i (right-sided at breakpoints)
    std::vector<double> populations;          // |c_e(t_i)|^2

    std::size_t size() const { return times.size(); }
    double horizon() const { return times.empty() ? 0.0 : times.back(); }
};

} // namespace giantatom
