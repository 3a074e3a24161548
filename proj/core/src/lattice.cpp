#include "giantatom/lattice.hpp"

#include <cmath>
#include <numbers>
#include <string>

#include "giantatom/errors.hpp"
#include "giantatom/grid.hpp"

namespace giantatom {

namespace {

using Complex = std::complex<double>;

constexpr double kEdgeLeakTol = 1e-6;
constexpr int kMaxChainLen = 2'000'000;

double edge_occupancy(const std::vector<Complex>& field) {
    const std::size_t m = field.size();
    return std::norm(field[0]) + std::norm(field[1]) + std::norm(field[m - 2]) +
           std::norm(field[m - 1]);
}

} // namespace

int min_chain_len(double hopping, double horizon, int span) {
    const double reach = std::ceil(2.0 * hopping * horizon);
    return span + 2 * static_cast<int>(reach) + 16;
}

int auto_chain_len(double hopping, double horizon, int span) {
    const double reach = 2.0 * hopping * horizon;
    const auto airy = static_cast<int>(std::ceil(4.0 * std::cbrt(std::max(reach, 1.0)) + 8.0));
    int m = span + 2 * (static_cast<int>(std::ceil(reach)) + airy) + 17;
    if ((m - span) % 2 == 0) ++m;
    return m;
}

int left_coupling_site(const LatticeConfig& cfg) {
    return (cfg.chain_len - 1 - cfg.span) / 2;
}

void validate(const LatticeConfig& cfg) {
    if (!(cfg.hopping > 0.0) || !std::isfinite(cfg.hopping)) {
        throw ValidationError("hopping J must be positive");
    }
    if (!(cfg.g0 > 0.0) || !std::isfinite(cfg.g0)) {
        throw ValidationError("g0 must be positive");
    }
    if (cfg.span < 1) throw ValidationError("span N must be at least 1");
    if (!(cfg.horizon > 0.0) || !std::isfinite(cfg.horizon)) {
        throw ValidationError("horizon must be positive");
    }
    if (cfg.chain_len < cfg.span + 2) {
        throw ValidationError("chain length M must be at least N + 2");
    }
    const int min_len = min_chain_len(cfg.hopping, cfg.horizon, cfg.span);
    if (cfg.chain_len < min_len) {
        throw ValidationError("chain length " + std::to_string(cfg.chain_len) +
                              " is inside the light cone; need at least " +
                              std::to_string(min_len) + " sites for this horizon");
    }
    if (cfg.chain_len > kMaxChainLen) {
        throw ValidationError("chain length " + std::to_string(cfg.chain_len) +
                              " exceeds the supported maximum of " +
                              std::to_string(kMaxChainLen));
    }
    if ((cfg.chain_len - cfg.span) % 2 == 0) {
        throw ValidationError("M - N must be odd so the coupling pair sits centered");
    }
    if (!(cfg.step > 0.0) || cfg.step * cfg.hopping > 0.05 + 1e-12) {
        throw ValidationError("step must satisfy step * J <= 0.05");
    }
    validate_profile(cfg.schedule);
}

double LatticeState::norm() const {
    double total = std::norm(c_e);
    for (const auto& c : field) total += std::norm(c);
    return total;
}

LatticeState lattice_rhs(const LatticeConfig& cfg, double t, const LatticeState& state) {
    if (cfg.span < 1 || cfg.chain_len < cfg.span + 2) {
        throw ValidationError("chain length M must be at least N + 2");
    }
    if (state.field.size() != static_cast<std::size_t>(cfg.chain_len)) {
        throw ValidationError("state field length does not match the chain length");
    }
    const auto m = static_cast<std::size_t>(cfg.chain_len);
    const auto pl = static_cast<std::size_t>(left_coupling_site(cfg));
    const std::size_t pr = pl + static_cast<std::size_t>(cfg.span);
    const double g = cfg.g0 * eval_profile(cfg.schedule, t);
    const Complex mi_j(0.0, -cfg.hopping);
    const Complex mi_g(0.0, -g);

    LatticeState d;
    d.field.assign(m, Complex(0.0, 0.0));
    d.c_e = mi_g * (state.field[pl] + state.field[pr]);
    d.field[0] = mi_j * state.field[1];
    d.field[m - 1] = mi_j * state.field[m - 2];
    for (std::size_t k = 1; k + 1 < m; ++k) {
        d.field[k] = mi_j * (state.field[k - 1] + state.field[k + 1]);
    }
    d.field[pl] += mi_g * state.c_e;
    d.field[pr] += mi_g * state.c_e;
    return d;
}

LatticeRun integrate_lattice(const LatticeConfig& cfg) {
    validate(cfg);

    const AlignedGrid grid =
        build_aligned_grid(cfg.horizon, cfg.step, 0.0, breakpoints(cfg.schedule, cfg.horizon));
    const double h = grid.step;
    const auto n = static_cast<std::size_t>(grid.n_steps);
    const auto m = static_cast<std::size_t>(cfg.chain_len);
    const auto pl = static_cast<std::size_t>(left_coupling_site(cfg));
    const std::size_t pr = pl + static_cast<std::size_t>(cfg.span);
    const Complex mi_j(0.0, -cfg.hopping);

    LatticeRun run;
    run.atom.step = h;
    run.atom.times.resize(n + 1);
    run.atom.amps.resize(n + 1);
    run.atom.derivs.resize(n + 1);
    run.atom.populations.resize(n + 1);
    run.norms.resize(n + 1);
    for (std::size_t i = 0; i <= n; ++i) run.atom.times[i] = static_cast<double>(i) * h;

    std::vector<Complex> field(m, Complex(0.0, 0.0));
    std::vector<Complex> df(m), work(m);
    std::vector<Complex> acc(m); // accumulated weighted stage sum
    Complex ce(1.0, 0.0);

    run.atom.amps[0] = ce;
    run.atom.populations[0] = 1.0;
    run.norms[0] = 1.0;

    auto rhs_into = [&](const std::vector<Complex>& f, Complex ce_in, double g,
                        std::vector<Complex>& out, Complex& dce) {
        const Complex mi_g(0.0, -g);
        out[0] = mi_j * f[1];
        out[m - 1] = mi_j * f[m - 2];
        for (std::size_t k = 1; k + 1 < m; ++k) out[k] = mi_j * (f[k - 1] + f[k + 1]);
        dce = mi_g * (f[pl] + f[pr]);
        out[pl] += mi_g * ce_in;
        out[pr] += mi_g * ce_in;
    };

    Complex dce_k;
    for (std::size_t i = 0; i < n; ++i) {
        const double t = run.atom.times[i];
        const double mid = t + 0.5 * h;
        // all four stages stay on the branch active inside (t, t + h)
        const double g_begin = cfg.g0 * eval_profile_on_branch(cfg.schedule, t, mid);
        const double g_mid = cfg.g0 * eval_profile_on_branch(cfg.schedule, mid, mid);
        const double g_end = cfg.g0 * eval_profile_on_branch(cfg.schedule, t + h, mid);

        // k1
        rhs_into(field, ce, g_begin, df, dce_k);
        run.atom.derivs[i] = dce_k;
        Complex ce_acc = dce_k;
        for (std::size_t k = 0; k < m; ++k) {
            acc[k] = df[k];
            work[k] = field[k] + 0.5 * h * df[k];
        }
        Complex ce_stage = ce + 0.5 * h * dce_k;
        // k2
        rhs_into(work, ce_stage, g_mid, df, dce_k);
        ce_acc += 2.0 * dce_k;
        for (std::size_t k = 0; k < m; ++k) {
            acc[k] += 2.0 * df[k];
            work[k] = field[k] + 0.5 * h * df[k];
        }
        ce_stage = ce + 0.5 * h * dce_k;
        // k3
        rhs_into(work, ce_stage, g_mid, df, dce_k);
        ce_acc += 2.0 * dce_k;
        for (std::size_t k = 0; k < m; ++k) {
            acc[k] += 2.0 * df[k];
            work[k] = field[k] + h * df[k];
        }
        ce_stage = ce + h * dce_k;
        // k4
        rhs_into(work, ce_stage, g_end, df, dce_k);
        ce_acc += dce_k;
        const double w = h / 6.0;
        double norm_total;
        ce += w * ce_acc;
        norm_total = std::norm(ce);
        for (std::size_t k = 0; k < m; ++k) {
            field[k] += w * (acc[k] + df[k]);
            norm_total += std::norm(field[k]);
        }

        run.atom.amps[i + 1] = ce;
        run.atom.populations[i + 1] = std::norm(ce);
        run.norms[i + 1] = norm_total;

        const double edge = edge_occupancy(field);
        if (edge > run.max_edge_occupancy) run.max_edge_occupancy = edge;
        if (edge > kEdgeLeakTol) {
            throw BoundaryLeakError("outer-site occupancy " + std::to_string(edge) +
                                    " at t=" + std::to_string(run.atom.times[i + 1]) +
                                    "; enlarge the chain");
        }
    }

    // final-node derivative, on the branch of the last step
    {
        const double t_end = run.atom.times[n];
        const double mid = t_end - 0.5 * h;
        const double g_end = cfg.g0 * eval_profile_on_branch(cfg.schedule, t_end, mid);
        rhs_into(field, ce, g_end, df, dce_k);
        run.atom.derivs[n] = dce_k;
    }

    run.final_state.c_e = ce;
    run.final_state.field = std::move(field);
    return run;
}

EffectiveContinuum effective_phase_and_delay(const LatticeConfig& cfg) {
    EffectiveContinuum eff;
    eff.phi = static_cast<double>(cfg.span) * std::numbers::pi / 2.0;
    eff.tau = static_cast<double>(cfg.span) / (2.0 * cfg.hopping);
    return eff;
}

} // namespace giantatom
