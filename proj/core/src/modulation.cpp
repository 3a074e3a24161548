#include "giantatom/modulation.hpp"

#include <cmath>
#include <string>

#include "giantatom/errors.hpp"

namespace giantatom {

namespace {

void require_finite(double v, const char* name) {
    if (!std::isfinite(v)) {
        throw ValidationError(std::string("profile parameter '") + name + "' must be finite");
    }
}

} // namespace

void validate_profile(const ModulationProfile& profile) {
    std::visit(
        [](const auto& p) {
            using T = std::decay_t<decltype(p)>;
            if constexpr (std::is_same_v<T, ConstantProfile>) {
                require_finite(p.scale, "scale");
            } else if constexpr (std::is_same_v<T, CosineProfile>) {
                require_finite(p.omega, "omega");
                require_finite(p.theta, "theta");
                require_finite(p.scale, "scale");
            } else if constexpr (std::is_same_v<T, StepProfile>) {
                require_finite(p.delta_rel, "delta_rel");
                require_finite(p.t_switch, "t_switch");
                if (p.t_switch < 0.0) throw ValidationError("step profile requires t_switch >= 0");
            } else {
                require_finite(p.t_on, "t_on");
                require_finite(p.t_off, "t_off");
                if (!(p.t_on > 0.0)) throw ValidationError("quench profile requires t_on > 0");
                if (p.t_off < 0.0) throw ValidationError("quench profile requires t_off >= 0");
            }
        },
        profile);
}

double eval_profile(const ModulationProfile& profile, double t) {
    return std::visit(
        [t](const auto& p) -> double {
            using T = std::decay_t<decltype(p)>;
            if constexpr (std::is_same_v<T, ConstantProfile>) {
                return p.scale;
            } else if constexpr (std::is_same_v<T, CosineProfile>) {
                return p.scale * std::cos(p.omega * t + p.theta);
            } else if constexpr (std::is_same_v<T, StepProfile>) {
                return t < p.t_switch ? 1.0 : 1.0 + p.delta_rel;
            } else {
                if (p.t_off <= 0.0) return 1.0;
                const double period = p.t_on + p.t_off;
                double local = t - std::floor(t / period) * period;
                if (local >= period) local -= period;
                return local < p.t_on ? 1.0 : 0.0;
            }
        },
        profile);
}

double eval_profile_on_branch(const ModulationProfile& profile, double t, double hint) {
    return is_discontinuous(profile) ? eval_profile(profile, hint) : eval_profile(profile, t);
}

bool is_discontinuous(const ModulationProfile& profile) {
    if (std::holds_alternative<StepProfile>(profile)) return true;
    if (const auto* q = std::get_if<PeriodicQuenchProfile>(&profile)) return q->t_off > 0.0;
    return false;
}

std::vector<double> breakpoints(const ModulationProfile& profile, double horizon) {
    std::vector<double> out;
    if (const auto* s = std::get_if<StepProfile>(&profile)) {
        // t_switch == 0 produces no jump inside [0, horizon): u is 1 + delta throughout
        if (s->t_switch > 0.0 && s->t_switch <= horizon) out.push_back(s->t_switch);
        return out;
    }
    if (const auto* q = std::get_if<PeriodicQuenchProfile>(&profile)) {
        if (q->t_off <= 0.0) return out;
        for (long n = 1;; ++n) {
            const double off_edge = static_cast<double>(n) * q->t_on
                                    + static_cast<double>(n - 1) * q->t_off;
            if (off_edge > horizon) break;
            out.push_back(off_edge);
            const double on_edge = static_cast<double>(n) * (q->t_on + q->t_off);
            if (on_edge > horizon) break;
            out.push_back(on_edge);
        }
    }
    return out;
}

} // namespace giantatom
