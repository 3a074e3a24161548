// modulation.hpp — time-dependent coupling profiles u(t) = g(t)/g0

#pragma once

#include <variant>
#include <vector>

namespace giantatom {

struct ConstantProfile {
    double scale{1.0};
    bool operator==(const ConstantProfile&) const = default;
};

// u(t) = scale * cos(omega t + theta)
struct CosineProfile {
    double omega{0.0};
    double theta{0.0};
    double scale{1.0};
    bool operator==(const CosineProfile&) const = default;
};

// u(t) = 1 for t < t_switch, 1 + delta_rel afterwards
struct StepProfile {
    double delta_rel{0.0};
    double t_switch{0.0};
    bool operator==(const StepProfile&) const = default;
};

// u(t) = 1 on [(n-1)(t_on+t_off), (n-1)(t_on+t_off)+t_on), 0 otherwise.
// Every period starts with an ON window.
struct PeriodicQuenchProfile {
    double t_on{0.0};
    double t_off{0.0};
    bool operator==(const PeriodicQuenchProfile&) const = default;
};

using ModulationProfile =
    std::variant<ConstantProfile, CosineProfile, StepProfile, PeriodicQuenchProfile>;

// Throws ValidationError on non-finite fields, t_switch < 0, t_on <= 0 or t_off < 0.
void validate_profile(const ModulationProfile& profile);

// u(t). Intervals are half-open: at a breakpoint the right-limit is returned.
double eval_profile(const ModulationProfile& profile, double t);

// Value at t of the piecewise branch active at `hint`. Smooth profiles ignore
// the hint; the discontinuous profiles are piecewise constant, so this is just
// u(hint). Integrators use it to keep all stages of one step on one branch.
double eval_profile_on_branch(const ModulationProfile& profile, double t, double hint);

// Discontinuity times of u in [0, horizon], sorted, without duplicates.
// Constant and Cosine profiles return an empty list.
std::vector<double> breakpoints(const ModulationProfile& profile, double horizon);

bool is_discontinuous(const ModulationProfile& profile);

} // namespace giantatom
