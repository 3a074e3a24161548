#include "giantatom/grid.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "giantatom/errors.hpp"

namespace giantatom {

namespace {

// Euclid cascade with a snap-to-zero threshold. fmod is exact, but each
// remainder multiplies the inputs' decimal-to-binary representation error by
// the partial quotient, so the raw result drifts off the rational gcd.
double fgcd_raw(double a, double b, double tol) {
    a = std::fabs(a);
    b = std::fabs(b);
    if (a < b) std::swap(a, b);
    while (b > tol) {
        double r = std::fmod(a, b);
        if (r < tol || b - r < tol) r = 0.0;
        a = b;
        b = r;
    }
    return a;
}

// Combine one more time into the running gcd, then re-anchor the result to
// the exactly-representable input x. This resets the accumulated remainder
// drift after every combine, so it never compounds across inputs or steps.
double gcd_with(double g, double x, double tol) {
    const double raw = fgcd_raw(g, x, tol);
    if (raw <= tol) return raw;
    const auto k = std::llround(x / raw);
    return k >= 1 ? x / static_cast<double>(k) : raw;
}

} // namespace

AlignedGrid build_aligned_grid(double horizon, double nominal_step, double tau,
                               const std::vector<double>& mandatory) {
    if (!(horizon > 0.0)) throw GridError("horizon must be positive");
    if (!(nominal_step > 0.0)) throw GridError("nominal step must be positive");

    const double tol = 1e-12 * horizon;
    const double min_step = horizon / 1e8;

    double g = horizon;
    if (tau > tol) g = gcd_with(g, tau, tol);
    for (double m : mandatory) {
        if (m > tol) g = gcd_with(g, m, tol);
    }
    if (g < min_step) {
        throw GridError("delay and breakpoints share no common grid above horizon/1e8");
    }
    // anchor to the horizon so the final node lands on it
    g = horizon / static_cast<double>(std::llround(horizon / g));

    auto refine = std::max<std::int64_t>(
        1, static_cast<std::int64_t>(std::ceil(g / nominal_step - 1e-9)));
    const double h = g / static_cast<double>(refine);

    AlignedGrid grid;
    grid.step = h;
    grid.n_steps = std::llround(horizon / h);
    if (grid.n_steps < 1 || grid.n_steps > 100'000'000) {
        throw GridError("aligned grid needs more than 1e8 steps");
    }
    if (std::fabs(static_cast<double>(grid.n_steps) * h - horizon) > tol) {
        throw GridError("horizon does not sit on the aligned grid");
    }
    if (tau > tol) {
        grid.delay_steps = std::llround(tau / h);
        if (grid.delay_steps < 1 ||
            std::fabs(static_cast<double>(grid.delay_steps) * h - tau) > tol) {
            throw GridError("delay does not sit on the aligned grid");
        }
    }
    for (double m : mandatory) {
        if (m <= tol || m > horizon + tol) continue;
        const double k = std::llround(m / h);
        if (std::fabs(k * h - m) > tol) {
            throw GridError("breakpoint at t=" + std::to_string(m) +
                            " does not sit on the aligned grid");
        }
    }
    return grid;
}

} // namespace giantatom
