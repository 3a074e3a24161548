// config.hpp — run specifications parsed from INI-style config files

#pragma once

#include <optional>
#include <string>
#include <variant>
#include <vector>

#include "giantatom/sweep.hpp"

namespace giantatom {

// Quantities keep the units of the config file: times in 1/Gamma0 (continuum)
// or 1/g0 (lattice), rates in Gamma0 or g0, angles in units of pi. Conversion
// to core parameters happens in build_sim / build_axis.
struct ModulationSpec {
    enum class Type { Constant, Cosine, Step, Quench };
    Type type{Type::Constant};
    double scale{1.0};        // constant, cosine
    double omega{0.0};        // cosine
    double theta_over_pi{0.0}; // cosine, phase of the second leg
    double delta_rel{0.0};    // step
    double t_switch{0.0};     // step
    double t_on{0.0};         // quench
    double t_off{0.0};        // quench
    bool operator==(const ModulationSpec&) const = default;
};

struct ContinuumSpec {
    double gamma0_tau{0.0};
    double phi_over_pi{0.0};
    ModulationSpec modulation;
    double horizon{0.0};
    int steps_per_tau{64};
    bool operator==(const ContinuumSpec&) const = default;
};

struct LatticeSpec {
    double J_over_g0{0.0};
    int span{0};      // N
    int chain_len{0}; // M; 0 picks auto_chain_len
    ModulationSpec modulation;
    double horizon{0.0};
    double step{0.0}; // 0 picks 0.02 / J
    bool operator==(const LatticeSpec&) const = default;
};

struct SweepSection {
    std::string param; // delta_rel, theta_over_pi, omega, phi_over_pi, t_on, t_off, t_switch, N, J
    std::vector<double> values; // config units
    Reducer reducer;
    bool operator==(const SweepSection&) const = default;
};

enum class RunMode { Continuum, Lattice, Sweep };

struct RunSpec {
    RunMode mode{RunMode::Continuum};
    std::variant<ContinuumSpec, LatticeSpec> model{ContinuumSpec{}};
    std::optional<SweepSection> sweep;
    std::string csv_path; // may stay empty until the command line supplies one
    std::string svg_path; // optional
    bool operator==(const RunSpec&) const = default;
};

// Parses the documented schema (sections [model], [modulation], [numerics],
// [output], [sweep]). Unknown sections or keys are ParseErrors with line
// context; violated invariants are ValidationErrors. Mode is Sweep iff a
// [sweep] section is present. The returned spec is fully validated.
RunSpec parse_config(const std::string& text);

// Inverse of parse_config, covering every supported field.
std::string render_config(const RunSpec& spec);

// Core simulation case in natural units (Gamma0 = 1 or g0 = 1), with the
// lattice chain auto-sized when the spec leaves it open.
SimCase build_sim(const RunSpec& spec);

// Sweep axis in core units (angles multiplied by pi).
SweepAxis build_axis(const SweepSection& sweep);

// Schema dump for --print-schema.
std::string config_schema();

} // namespace giantatom
