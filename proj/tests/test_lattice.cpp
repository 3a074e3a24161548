#include <cmath>
#include <complex>
#include <numbers>

#include "doctest.h"
#include "giantatom/analysis.hpp"
#include "giantatom/continuum.hpp"
#include "giantatom/errors.hpp"
#include "giantatom/lattice.hpp"

using namespace giantatom;
using std::numbers::pi;
using Complex = std::complex<double>;

namespace {

LatticeConfig base_config(double hopping, int span, double horizon) {
    LatticeConfig cfg;
    cfg.hopping = hopping;
    cfg.g0 = 1.0;
    cfg.span = span;
    cfg.horizon = horizon;
    cfg.step = std::min(0.004, 0.05 / hopping);
    cfg.chain_len = auto_chain_len(hopping, horizon, span);
    return cfg;
}

double mirror_defect(const LatticeConfig& cfg, const LatticeState& state) {
    const int p = left_coupling_site(cfg);
    const int pr = p + cfg.span;
    double worst = 0.0;
    for (int k = 0; p - k >= 0 && pr + k < cfg.chain_len; ++k) {
        worst = std::max(worst, std::abs(state.field[pr + k] - state.field[p - k]));
    }
    return worst;
}

double fit_log_slope(const Trajectory& traj, double t0, double t1) {
    double sx = 0, sy = 0, sxx = 0, sxy = 0;
    int n = 0;
    for (std::size_t i = 0; i < traj.size(); ++i) {
        const double t = traj.times[i];
        if (t < t0 || t > t1) continue;
        const double y = std::log(traj.populations[i]);
        sx += t;
        sy += y;
        sxx += t * t;
        sxy += t * y;
        ++n;
    }
    return (n * sxy - sx * sy) / (n * sxx - sx * sx);
}

} // namespace

TEST_CASE("lattice derivative in the single-excitation basis") {
    LatticeConfig cfg = base_config(5.0, 4, 1.0);
    cfg.schedule = PeriodicQuenchProfile{0.1, 0.4};
    const int p = left_coupling_site(cfg);

    LatticeState vacuum;
    vacuum.c_e = Complex(1.0, 0.0);
    vacuum.field.assign(cfg.chain_len, Complex(0.0, 0.0));

    // inside an ON window only the coupling sites pick up amplitude
    const LatticeState d_on = lattice_rhs(cfg, 0.05, vacuum);
    CHECK(std::abs(d_on.c_e) == 0.0);
    CHECK(std::abs(d_on.field[p] - Complex(0.0, -1.0)) < 1e-15);
    CHECK(std::abs(d_on.field[p + 4] - Complex(0.0, -1.0)) < 1e-15);
    for (int m = 0; m < cfg.chain_len; ++m) {
        if (m == p || m == p + 4) continue;
        CHECK(std::abs(d_on.field[m]) == 0.0);
    }

    // inside an OFF window the coupling is dead
    const LatticeState d_off = lattice_rhs(cfg, 0.25, vacuum);
    CHECK(std::abs(d_off.c_e) == 0.0);
    CHECK(std::abs(d_off.field[p]) == 0.0);

    // free hopping from a single occupied site
    LatticeState single;
    single.c_e = Complex(0.0, 0.0);
    single.field.assign(cfg.chain_len, Complex(0.0, 0.0));
    const int mid = cfg.chain_len / 2;
    single.field[mid] = Complex(1.0, 0.0);
    const LatticeState d_hop = lattice_rhs(cfg, 0.25, single);
    CHECK(std::abs(d_hop.field[mid - 1] - Complex(0.0, -5.0)) < 1e-15);
    CHECK(std::abs(d_hop.field[mid + 1] - Complex(0.0, -5.0)) < 1e-15);
    CHECK(std::abs(d_hop.field[mid]) == 0.0);

    LatticeState short_state;
    short_state.field.assign(3, Complex(0.0, 0.0));
    CHECK_THROWS_AS(lattice_rhs(cfg, 0.0, short_state), ValidationError);

    LatticeConfig empty_cfg;
    empty_cfg.chain_len = 0;
    CHECK_THROWS_AS(lattice_rhs(empty_cfg, 0.0, LatticeState{}), ValidationError);
}

TEST_CASE("unitarity and reflection guard on the quench configuration") {
    LatticeConfig cfg = base_config(5.0, 4, 5.0);
    cfg.schedule = PeriodicQuenchProfile{0.1, 0.4};
    const LatticeRun run = integrate_lattice(cfg);
    for (std::size_t i = 0; i < run.norms.size(); ++i) {
        const double t = run.atom.times[i];
        CHECK(std::fabs(run.norms[i] - 1.0) < 1e-8 * (1.0 + t * cfg.hopping));
    }
    CHECK(run.max_edge_occupancy < 1e-6);
    CHECK(run.atom.populations.front() == 1.0);
    CHECK(run.final_state.norm() == doctest::Approx(run.norms.back()).epsilon(1e-12));
}

TEST_CASE("field stays mirror symmetric for every schedule") {
    const std::vector<ModulationProfile> schedules = {
        ConstantProfile{1.0}, PeriodicQuenchProfile{0.1, 0.4}, StepProfile{-0.5, 0.5},
        CosineProfile{2.0 * pi, 0.3, 1.0}};
    for (const auto& schedule : schedules) {
        for (double horizon : {1.5, 3.0}) {
            LatticeConfig cfg = base_config(5.0, 4, horizon);
            cfg.schedule = schedule;
            const LatticeRun run = integrate_lattice(cfg);
            CHECK(mirror_defect(cfg, run.final_state) < 1e-10);
        }
    }
}

TEST_CASE("the atomic amplitude is frozen across OFF windows") {
    LatticeConfig cfg = base_config(5.0, 4, 2.0);
    cfg.schedule = PeriodicQuenchProfile{0.1, 0.4};
    const LatticeRun run = integrate_lattice(cfg);
    const double h = run.atom.step;
    for (int n = 1; n <= 4; ++n) {
        const double off_begin = n * 0.1 + (n - 1) * 0.4;
        const double off_end = n * 0.5;
        const auto i0 = static_cast<std::size_t>(std::llround(off_begin / h));
        const auto i1 = static_cast<std::size_t>(std::llround(off_end / h));
        for (std::size_t i = i0; i <= i1; ++i) {
            CHECK(std::abs(run.atom.amps[i] - run.atom.amps[i0]) < 1e-14);
        }
    }
}

TEST_CASE("short-time decay is parabolic with the expected curvature") {
    LatticeConfig cfg = base_config(5.0, 4, 0.05);
    cfg.step = 0.0005;
    const LatticeRun run = integrate_lattice(cfg);
    const double a = short_time_quadratic(run.atom, 0.05);
    CHECK(a == doctest::Approx(2.0).epsilon(0.02));
}

TEST_CASE("effective continuum parameters") {
    LatticeConfig cfg = base_config(5.0, 4, 1.0);
    auto eff = effective_phase_and_delay(cfg);
    CHECK(eff.phi == doctest::Approx(2.0 * pi));
    CHECK(eff.tau == doctest::Approx(0.4));

    cfg.span = 2;
    eff = effective_phase_and_delay(cfg);
    CHECK(eff.phi == doctest::Approx(pi));
    CHECK(eff.tau == doctest::Approx(0.2));

    cfg.hopping = 40.0;
    eff = effective_phase_and_delay(cfg);
    CHECK(eff.phi == doctest::Approx(pi));
    CHECK(eff.tau == doctest::Approx(0.025));
}

TEST_CASE("config validation") {
    LatticeConfig cfg = base_config(5.0, 4, 5.0);
    validate(cfg);

    LatticeConfig small = cfg;
    small.chain_len = min_chain_len(5.0, 5.0, 4) - 2;
    CHECK_THROWS_AS(validate(small), ValidationError);

    LatticeConfig parity = cfg;
    parity.chain_len += 1; // even M - N cannot center the coupling pair
    CHECK_THROWS_AS(validate(parity), ValidationError);

    LatticeConfig coarse = cfg;
    coarse.step = 0.05; // step * J = 0.25
    CHECK_THROWS_AS(validate(coarse), ValidationError);

    LatticeConfig bad_span = cfg;
    bad_span.span = 0;
    CHECK_THROWS_AS(validate(bad_span), ValidationError);

    LatticeConfig bad_j = cfg;
    bad_j.hopping = -1.0;
    CHECK_THROWS_AS(validate(bad_j), ValidationError);
}

TEST_CASE("a chain at the bare light-cone minimum trips the leak guard") {
    // the front's Airy transition zone reaches the outer sites when the
    // margin beyond 2 J t is only the 8 per-side sites of the minimum bound
    LatticeConfig cfg = base_config(5.0, 4, 5.0);
    int m = min_chain_len(cfg.hopping, cfg.horizon, cfg.span);
    if ((m - cfg.span) % 2 == 0) ++m;
    cfg.chain_len = m;
    CHECK_THROWS_AS(integrate_lattice(cfg), BoundaryLeakError);

    // the auto-sized chain keeps the edges clean by many orders of magnitude
    cfg.chain_len = auto_chain_len(cfg.hopping, cfg.horizon, cfg.span);
    const LatticeRun run = integrate_lattice(cfg);
    CHECK(run.max_edge_occupancy < 1e-12);
}

TEST_CASE("weak-coupling lattice run matches the continuum model") {
    const double hopping = 20.0;

    // the decay rate is measured, not assumed: push the second coupling point
    // far enough away that no feedback arrives, then fit the exponential slope
    // past the short-time transient
    LatticeConfig free_cfg = base_config(hopping, 2001, 10.0);
    const LatticeRun free_run = integrate_lattice(free_cfg);
    const double gamma0 = -fit_log_slope(free_run.atom, 2.0, 10.0) / 2.0;
    CHECK(gamma0 == doctest::Approx(1.0 / hopping).epsilon(0.01));

    const double tau_eff = 4.0 / (2.0 * hopping);
    const double horizon = std::ceil(3.0 / gamma0 / tau_eff) * tau_eff;
    LatticeConfig cfg = base_config(hopping, 4, horizon);
    const LatticeRun run = integrate_lattice(cfg);

    ContinuumParams params;
    params.gamma0 = gamma0;
    params.tau = tau_eff;
    params.phi = 2.0 * pi;
    const Trajectory cont = integrate(params, horizon, 64);

    for (double gt = 0.1; gt <= 3.0 + 1e-9; gt += 0.1) {
        const double t = gt / gamma0;
        if (t > run.atom.horizon()) break;
        const double lat = population_at(run.atom, t);
        const double ref = population_at(cont, t);
        CHECK(std::fabs(lat - ref) <= 0.05 * ref);
    }
}

TEST_CASE("quench ordering: longer OFF windows slow the decay") {
    // equal accumulated ON time of 1.0/g0 (ten windows of 0.1)
    double pops[3];
    const double offs[3] = {0.0, 0.1, 0.4};
    for (int i = 0; i < 3; ++i) {
        const double horizon = offs[i] == 0.0 ? 1.0 : 10 * 0.1 + 9 * offs[i];
        LatticeConfig cfg = base_config(5.0, 4, horizon);
        if (offs[i] > 0.0) cfg.schedule = PeriodicQuenchProfile{0.1, offs[i]};
        pops[i] = population_at(integrate_lattice(cfg).atom, horizon);
    }
    CHECK(pops[0] < pops[1]);
    CHECK(pops[1] < pops[2]);
    // regression pins from a validated run
    CHECK(pops[0] == doctest::Approx(0.4924).epsilon(1e-3));
    CHECK(pops[1] == doctest::Approx(0.6945).epsilon(1e-3));
    CHECK(pops[2] == doctest::Approx(0.8507).epsilon(1e-3));
}
