// continuum.hpp — retarded-feedback decay of a two-point giant atom

#pragma once

#include <complex>

#include "giantatom/modulation.hpp"
#include "giantatom/trajectory.hpp"

namespace giantatom {

// The continuum waveguide enters only through the reference rate gamma0, the
// propagation delay tau between the coupling points, the propagation phase
// phi, and the two dimensionless coupling shapes.
struct ContinuumParams {
    double gamma0{1.0};
    double tau{0.0};
    double phi{0.0};
    ModulationProfile profile1{ConstantProfile{}};
    ModulationProfile profile2{ConstantProfile{}};
    bool operator==(const ContinuumParams&) const = default;
};

void validate(const ContinuumParams& params);

struct DecayRates {
    double gamma1{0.0};  // instantaneous rate at coupling point 1
    double gamma2{0.0};  // instantaneous rate at coupling point 2
    double gamma12{0.0}; // retarded cross-correlation rate
};

// Gamma_j(t) = gamma0 u_j(t)^2,
// Gamma_12(t) = (gamma0/2) [u1(t) u2(t-tau) + u1(t-tau) u2(t)].
// Delayed factors are taken as 0 for t < tau (the feedback they multiply is
// gated off there anyway).
DecayRates rates(const ContinuumParams& params, double t);

// -1/2 [Gamma_1 + Gamma_2] c_now - Gamma_12 e^{i phi} c_delayed Theta(t - tau).
// c_delayed is ignored for t < tau.
std::complex<double> rhs(const ContinuumParams& params, double t,
                         std::complex<double> c_now, std::complex<double> c_delayed);

// Integrates c_e from c_e(0) = 1 with fixed-step classical RK4. The step is
// refined so that tau, every profile breakpoint, and every breakpoint + tau
// sit on grid nodes; delayed half-step stage values come from cubic Hermite
// interpolation of the stored value/derivative history. For t < tau the
// equation is a pure ODE. steps_per_tau counts nodes per delay interval
// (per 1/gamma0 when tau == 0).
//
// Throws GridError when no aligned grid exists, StabilityError when |c_e|
// exceeds 1 + 1e-3, ValidationError on bad parameters.
Trajectory integrate(const ContinuumParams& params, double horizon, int steps_per_tau);

// First integral of the constant-coupling equation,
//   Q(t) = c_e(t) - Gamma_12 e^{i phi} \int_{t-tau}^{t} c_e(s) ds,
// evaluated with composite Simpson quadrature on the stored grid (t snapped to
// the nearest node). dQ/dt = -[ (Gamma_1+Gamma_2)/2 + Gamma_12 e^{i phi} ] c_e,
// so Q is conserved for equal couplings with e^{i phi} = -1; it is the oracle
// behind the plateau value 1/(1 + gamma0 tau). Throws DomainError unless both
// profiles are constant and t >= tau.
std::complex<double> conserved_charge(const Trajectory& traj, const ContinuumParams& params,
                                      double t);

} // namespace giantatom
