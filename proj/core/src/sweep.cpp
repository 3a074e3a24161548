#include "giantatom/sweep.hpp"

#include <algorithm>
#include <atomic>
#include <cmath>
#include <cstdlib>
#include <limits>
#include <thread>

#include "giantatom/errors.hpp"

namespace giantatom {

namespace {

int round_count(double value, const std::string& param) {
    const double r = std::round(value);
    if (std::fabs(value - r) > 1e-9 || r < 0.0) {
        throw ValidationError("axis '" + param + "' needs a non-negative integer, got " +
                              std::to_string(value));
    }
    return static_cast<int>(r);
}

void set_step_field(ModulationProfile& profile, const std::string& param, double value) {
    auto* s = std::get_if<StepProfile>(&profile);
    if (!s) throw ValidationError("axis '" + param + "' requires a step profile");
    if (param == "delta_rel") {
        s->delta_rel = value;
    } else {
        s->t_switch = value;
    }
}

void set_quench_field(ModulationProfile& profile, const std::string& param, double value) {
    auto* q = std::get_if<PeriodicQuenchProfile>(&profile);
    if (!q) throw ValidationError("axis '" + param + "' requires a quench profile");
    if (param == "t_on") {
        q->t_on = value;
    } else {
        q->t_off = value;
    }
}

void set_cosine_field(ModulationProfile& profile, const std::string& param, double value) {
    auto* c = std::get_if<CosineProfile>(&profile);
    if (!c) throw ValidationError("axis '" + param + "' requires a cosine profile");
    if (param == "omega") {
        c->omega = value;
    } else {
        c->theta = value;
    }
}

int thread_count(int max_threads, std::size_t cells) {
    int n = max_threads;
    if (const char* env = std::getenv("GIANTATOM_THREADS")) {
        const int parsed = std::atoi(env);
        if (parsed > 0) n = parsed;
    }
    if (n <= 0) n = static_cast<int>(std::thread::hardware_concurrency());
    if (n <= 0) n = 1;
    return static_cast<int>(std::min<std::size_t>(static_cast<std::size_t>(n), cells));
}

} // namespace

std::string Reducer::name() const {
    return kind == Kind::Plateau ? "plateau" : "population_at";
}

SimCase apply_axis_value(const SimCase& base, const std::string& param, double value) {
    SimCase out = base;
    if (auto* cont = std::get_if<ContinuumCase>(&out)) {
        auto& p = cont->params;
        if (param == "phi") {
            p.phi = value;
        } else if (param == "delta_rel" || param == "t_switch") {
            set_step_field(p.profile1, param, value);
            set_step_field(p.profile2, param, value);
        } else if (param == "t_on" || param == "t_off") {
            set_quench_field(p.profile1, param, value);
            set_quench_field(p.profile2, param, value);
        } else if (param == "omega") {
            set_cosine_field(p.profile1, param, value);
            set_cosine_field(p.profile2, param, value);
        } else if (param == "theta") {
            // the phase difference lives on the second leg
            set_cosine_field(p.profile2, param, value);
        } else {
            throw ValidationError("unknown continuum axis '" + param + "'");
        }
        return out;
    }
    auto& lat = std::get<LatticeCase>(out);
    if (param == "J") {
        if (!(value > 0.0)) throw ValidationError("axis 'J' needs a positive value");
        lat.config.hopping = value;
    } else if (param == "N") {
        lat.config.span = round_count(value, param);
    } else if (param == "delta_rel" || param == "t_switch") {
        set_step_field(lat.config.schedule, param, value);
    } else if (param == "t_on" || param == "t_off") {
        set_quench_field(lat.config.schedule, param, value);
    } else if (param == "omega" || param == "theta") {
        set_cosine_field(lat.config.schedule, param, value);
    } else {
        throw ValidationError("unknown lattice axis '" + param + "'");
    }
    return out;
}

SweepTable run_sweep(const SimCase& base, const SweepAxis& axis, const Reducer& reducer,
                     int max_threads) {
    SweepTable table;
    table.param = axis.param;
    table.reducer = reducer.name();

    std::vector<double> values = axis.values;
    std::stable_sort(values.begin(), values.end());
    table.cells.resize(values.size());
    if (values.empty()) return table;

    auto run_cell = [&](std::size_t i) {
        SweepCell cell;
        cell.axis_value = values[i];
        cell.metric = std::numeric_limits<double>::quiet_NaN();
        try {
            const SimCase sim = apply_axis_value(base, axis.param, values[i]);
            Trajectory traj;
            if (const auto* cont = std::get_if<ContinuumCase>(&sim)) {
                traj = integrate(cont->params, cont->horizon, cont->steps_per_tau);
            } else {
                traj = integrate_lattice(std::get<LatticeCase>(sim).config).atom;
            }
            if (reducer.kind == Reducer::Kind::Plateau) {
                cell.metric = detect_plateau(traj, reducer.tail_fraction, reducer.tol).value;
            } else {
                cell.metric = population_at(traj, reducer.at_time);
            }
            cell.ok = true;
        } catch (const std::exception& e) {
            cell.ok = false;
            cell.error = e.what();
        }
        table.cells[i] = std::move(cell);
    };

    const int workers = thread_count(max_threads, values.size());
    if (workers <= 1) {
        for (std::size_t i = 0; i < values.size(); ++i) run_cell(i);
        return table;
    }

    std::atomic<std::size_t> next{0};
    std::vector<std::thread> pool;
    pool.reserve(static_cast<std::size_t>(workers));
    for (int w = 0; w < workers; ++w) {
        pool.emplace_back([&] {
            for (std::size_t i = next.fetch_add(1); i < values.size(); i = next.fetch_add(1)) {
                run_cell(i);
            }
        });
    }
    for (auto& t : pool) t.join();
    return table;
}

} // namespace giantatom
