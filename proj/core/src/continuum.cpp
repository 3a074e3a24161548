#include "giantatom/continuum.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "giantatom/errors.hpp"
#include "giantatom/grid.hpp"

namespace giantatom {

namespace {

using Complex = std::complex<double>;

// value/derivative Hermite interpolant at the interval midpoint
Complex hermite_midpoint(Complex y0, Complex d0, Complex y1, Complex d1, double h) {
    return 0.5 * (y0 + y1) + 0.125 * h * (d0 - d1);
}

} // namespace

void validate(const ContinuumParams& params) {
    if (!(params.gamma0 > 0.0) || !std::isfinite(params.gamma0)) {
        throw ValidationError("gamma0 must be positive");
    }
    if (!(params.tau >= 0.0) || !std::isfinite(params.tau)) {
        throw ValidationError("tau must be non-negative");
    }
    if (!std::isfinite(params.phi)) throw ValidationError("phi must be finite");
    validate_profile(params.profile1);
    validate_profile(params.profile2);
}

DecayRates rates(const ContinuumParams& params, double t) {
    const double u1 = eval_profile(params.profile1, t);
    const double u2 = eval_profile(params.profile2, t);
    double u1d = 0.0;
    double u2d = 0.0;
    if (t >= params.tau) {
        u1d = eval_profile(params.profile1, t - params.tau);
        u2d = eval_profile(params.profile2, t - params.tau);
    }
    DecayRates r;
    r.gamma1 = params.gamma0 * u1 * u1;
    r.gamma2 = params.gamma0 * u2 * u2;
    r.gamma12 = 0.5 * params.gamma0 * (u1 * u2d + u1d * u2);
    return r;
}

Complex rhs(const ContinuumParams& params, double t, Complex c_now, Complex c_delayed) {
    const DecayRates r = rates(params, t);
    Complex out = -0.5 * (r.gamma1 + r.gamma2) * c_now;
    if (t >= params.tau) {
        out -= r.gamma12 * std::polar(1.0, params.phi) * c_delayed;
    }
    return out;
}

Trajectory integrate(const ContinuumParams& params, double horizon, int steps_per_tau) {
    validate(params);
    if (!(horizon > 0.0) || !std::isfinite(horizon)) {
        throw ValidationError("horizon must be positive");
    }
    if (params.tau > 0.0 && steps_per_tau < 16) {
        throw ValidationError("steps_per_tau must be at least 16 when tau > 0");
    }
    if (steps_per_tau < 1) throw ValidationError("steps_per_tau must be positive");

    const double tau = params.tau;
    const bool zero_delay = tau <= 0.0;
    const double time_unit = zero_delay ? 1.0 / params.gamma0 : tau;
    const double nominal = time_unit / static_cast<double>(steps_per_tau);

    std::vector<double> mandatory = breakpoints(params.profile1, horizon);
    for (double b : breakpoints(params.profile2, horizon)) mandatory.push_back(b);
    if (!zero_delay) {
        const std::size_t n_bk = mandatory.size();
        for (std::size_t i = 0; i < n_bk; ++i) {
            if (mandatory[i] + tau <= horizon) mandatory.push_back(mandatory[i] + tau);
        }
    }
    const AlignedGrid grid = build_aligned_grid(horizon, nominal, tau, mandatory);

    const double h = grid.step;
    const auto n = static_cast<std::size_t>(grid.n_steps);
    const auto kd = static_cast<std::size_t>(grid.delay_steps);
    const Complex phase = std::polar(1.0, params.phi);
    const double gamma0 = params.gamma0;

    Trajectory traj;
    traj.step = h;
    traj.times.resize(n + 1);
    traj.amps.resize(n + 1);
    traj.populations.resize(n + 1);
    for (std::size_t i = 0; i <= n; ++i) traj.times[i] = static_cast<double>(i) * h;
    traj.amps[0] = Complex(1.0, 0.0);
    traj.populations[0] = 1.0;

    // one-sided derivatives per node: deriv_r uses the branch right of the
    // node, deriv_l the branch left of it. They differ only at breakpoints,
    // where Hermite history lookups need the side matching their interval.
    std::vector<Complex> deriv_r(n + 1), deriv_l(n + 1);

    // all four stages of the step [t_i, t_i + h] evaluate profiles and the
    // Theta gate on the branch of the interval interior (hinted by mid)
    auto stage = [&](double s, double mid, bool active, Complex c_stage,
                     Complex c_delayed) -> Complex {
        const double u1 = eval_profile_on_branch(params.profile1, s, mid);
        const double u2 = eval_profile_on_branch(params.profile2, s, mid);
        Complex out = -0.5 * gamma0 * (u1 * u1 + u2 * u2) * c_stage;
        if (active) {
            const double u1d = eval_profile_on_branch(params.profile1, s - tau, mid - tau);
            const double u2d = eval_profile_on_branch(params.profile2, s - tau, mid - tau);
            const double g12 = 0.5 * gamma0 * (u1 * u2d + u1d * u2);
            out -= g12 * phase * c_delayed;
        }
        return out;
    };

    for (std::size_t i = 0; i < n; ++i) {
        const double t = traj.times[i];
        const double mid = t + 0.5 * h;
        const bool active = zero_delay || i >= kd;

        Complex cd_begin, cd_mid, cd_end;
        if (active && !zero_delay) {
            const std::size_t j = i - kd;
            cd_begin = traj.amps[j];
            cd_end = traj.amps[j + 1];
            cd_mid = hermite_midpoint(traj.amps[j], deriv_r[j], traj.amps[j + 1],
                                      deriv_l[j + 1], h);
        }

        const Complex c0 = traj.amps[i];
        const Complex k1 = stage(t, mid, active, c0, zero_delay ? c0 : cd_begin);
        deriv_r[i] = k1;
        const Complex c2 = c0 + 0.5 * h * k1;
        const Complex k2 = stage(mid, mid, active, c2, zero_delay ? c2 : cd_mid);
        const Complex c3 = c0 + 0.5 * h * k2;
        const Complex k3 = stage(mid, mid, active, c3, zero_delay ? c3 : cd_mid);
        const Complex c4 = c0 + h * k3;
        const Complex k4 = stage(t + h, mid, active, c4, zero_delay ? c4 : cd_end);

        const Complex c1 = c0 + (h / 6.0) * (k1 + 2.0 * k2 + 2.0 * k3 + k4);
        traj.amps[i + 1] = c1;
        traj.populations[i + 1] = std::norm(c1);
        deriv_l[i + 1] = stage(t + h, mid, active, c1, zero_delay ? c1 : cd_end);

        if (std::abs(c1) > 1.0 + 1e-3) {
            throw StabilityError("|c_e| exceeded 1 + 1e-3 at t=" +
                                 std::to_string(traj.times[i + 1]) +
                                 "; increase steps_per_tau");
        }
    }
    deriv_r[n] = deriv_l[n];

    traj.derivs = std::move(deriv_r);
    return traj;
}

std::complex<double> conserved_charge(const Trajectory& traj, const ContinuumParams& params,
                                      double t) {
    const auto* p1 = std::get_if<ConstantProfile>(&params.profile1);
    const auto* p2 = std::get_if<ConstantProfile>(&params.profile2);
    if (!p1 || !p2) throw DomainError("conserved_charge requires constant profiles");
    if (t < params.tau) throw DomainError("conserved_charge requires t >= tau");
    if (traj.size() < 2) throw DomainError("conserved_charge requires a non-empty trajectory");

    const double h = traj.step;
    const auto i = static_cast<std::size_t>(std::llround(t / h));
    if (i >= traj.size()) throw RangeError("t outside the stored trajectory");
    const auto kd = static_cast<std::size_t>(std::llround(params.tau / h));
    if (kd > i) throw DomainError("conserved_charge requires t >= tau");

    // composite Simpson over [t - tau, t]; 3/8 rule absorbs an odd interval count
    Complex integral(0.0, 0.0);
    const std::size_t lo = i - kd;
    std::size_t m = kd;
    std::size_t a = lo;
    if (m % 2 == 1) {
        if (m >= 3) {
            integral += (3.0 * h / 8.0) *
                        (traj.amps[a] + 3.0 * traj.amps[a + 1] + 3.0 * traj.amps[a + 2] +
                         traj.amps[a + 3]);
            a += 3;
            m -= 3;
        } else {
            integral += 0.5 * h * (traj.amps[a] + traj.amps[a + 1]);
            a += 1;
            m -= 1;
        }
    }
    for (std::size_t k = a; k + 2 <= a + m; k += 2) {
        integral += (h / 3.0) * (traj.amps[k] + 4.0 * traj.amps[k + 1] + traj.amps[k + 2]);
    }

    const double gamma12 = params.gamma0 * p1->scale * p2->scale;
    return traj.amps[i] - gamma12 * std::polar(1.0, params.phi) * integral;
}

} // namespace giantatom
