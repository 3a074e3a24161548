#include "giantatom/config.hpp"

#include <algorithm>
#include <charconv>
#include <cmath>
#include <cstdlib>
#include <map>
#include <numbers>
#include <sstream>

#include "giantatom/errors.hpp"

namespace giantatom {

namespace {

std::string fmt_full(double v) {
    // shortest round-trip form, locale-independent
    char buf[40];
    auto res = std::to_chars(buf, buf + sizeof(buf), v);
    return std::string(buf, res.ptr);
}

std::string trim(const std::string& s) {
    const auto b = s.find_first_not_of(" \t\r");
    if (b == std::string::npos) return {};
    const auto e = s.find_last_not_of(" \t\r");
    return s.substr(b, e - b + 1);
}

// cut an inline comment: '#' or ';' at start or after whitespace
std::string strip_comment(const std::string& s) {
    for (std::size_t i = 0; i < s.size(); ++i) {
        if ((s[i] == '#' || s[i] == ';') && (i == 0 || s[i - 1] == ' ' || s[i - 1] == '\t')) {
            return s.substr(0, i);
        }
    }
    return s;
}

struct Entry {
    std::string value;
    int line{0};
    bool used{false};
};

using Section = std::map<std::string, Entry>;

struct Document {
    std::map<std::string, Section> sections;
    std::map<std::string, int> section_lines;
};

// every key a section can ever hold; misspellings fail before any other check
bool key_in_section(const std::string& section, const std::string& key) {
    static const std::map<std::string, std::vector<std::string>> allowed = {
        {"model", {"kind", "gamma0_tau", "phi_over_pi", "J_over_g0", "N", "M"}},
        {"modulation",
         {"type", "scale", "omega", "theta_over_pi", "delta_rel", "t_switch", "t_on", "t_off"}},
        {"numerics", {"horizon", "steps_per_tau", "step"}},
        {"output", {"csv", "svg"}},
        {"sweep", {"param", "values", "reducer", "at_time", "tail_fraction", "tol"}},
    };
    const auto& keys = allowed.at(section);
    return std::find(keys.begin(), keys.end(), key) != keys.end();
}

Document tokenize(const std::string& text) {
    static const char* known_sections[] = {"model", "modulation", "numerics", "output", "sweep"};
    Document doc;
    std::istringstream in(text);
    std::string raw;
    std::string current;
    int line_no = 0;
    while (std::getline(in, raw)) {
        ++line_no;
        const std::string line = trim(strip_comment(raw));
        if (line.empty()) continue;
        if (line.front() == '[') {
            if (line.back() != ']') {
                throw ParseError("unterminated section header (line " + std::to_string(line_no) +
                                 ")");
            }
            current = trim(line.substr(1, line.size() - 2));
            const bool known = std::any_of(std::begin(known_sections), std::end(known_sections),
                                           [&](const char* s) { return current == s; });
            if (!known) {
                throw ParseError("unknown section [" + current + "] (line " +
                                 std::to_string(line_no) + ")");
            }
            if (doc.sections.count(current)) {
                throw ParseError("duplicate section [" + current + "] (line " +
                                 std::to_string(line_no) + ")");
            }
            doc.sections[current];
            doc.section_lines[current] = line_no;
            continue;
        }
        const auto eq = line.find('=');
        if (eq == std::string::npos) {
            throw ParseError("expected 'key = value' (line " + std::to_string(line_no) + ")");
        }
        if (current.empty()) {
            throw ParseError("key outside any section (line " + std::to_string(line_no) + ")");
        }
        const std::string key = trim(line.substr(0, eq));
        const std::string value = trim(line.substr(eq + 1));
        if (key.empty()) {
            throw ParseError("empty key (line " + std::to_string(line_no) + ")");
        }
        if (!key_in_section(current, key)) {
            throw ParseError("unknown key '" + key + "' in [" + current + "] (line " +
                             std::to_string(line_no) + ")");
        }
        auto& section = doc.sections[current];
        if (section.count(key)) {
            throw ParseError("duplicate key '" + key + "' in [" + current + "] (line " +
                             std::to_string(line_no) + ")");
        }
        section[key] = Entry{value, line_no, false};
    }
    return doc;
}

class Reader {
public:
    Reader(Document& doc, std::string section) : doc_(doc), name_(std::move(section)) {}

    bool present() const { return doc_.sections.count(name_) > 0; }

    Entry* find(const std::string& key) {
        auto sec = doc_.sections.find(name_);
        if (sec == doc_.sections.end()) return nullptr;
        auto it = sec->second.find(key);
        if (it == sec->second.end()) return nullptr;
        it->second.used = true;
        return &it->second;
    }

    std::string require_string(const std::string& key) {
        Entry* e = find(key);
        if (!e) {
            throw ValidationError("missing required key '" + key + "' in [" + name_ + "]");
        }
        return e->value;
    }

    double require_double(const std::string& key) { return to_double(key, require_string(key)); }

    double optional_double(const std::string& key, double fallback) {
        Entry* e = find(key);
        return e ? to_double(key, e->value) : fallback;
    }

    int require_int(const std::string& key) { return to_int(key, require_string(key)); }

    int optional_int(const std::string& key, int fallback) {
        Entry* e = find(key);
        return e ? to_int(key, e->value) : fallback;
    }

    std::string optional_string(const std::string& key, std::string fallback) {
        Entry* e = find(key);
        return e ? e->value : std::move(fallback);
    }

    std::vector<double> require_list(const std::string& key) {
        Entry* e = find(key);
        if (!e) {
            throw ValidationError("missing required key '" + key + "' in [" + name_ + "]");
        }
        std::vector<double> out;
        std::string item;
        std::istringstream in(e->value);
        while (std::getline(in, item, ',')) {
            item = trim(item);
            if (item.empty()) continue;
            out.push_back(to_double(key, item));
        }
        return out;
    }

    // every key must have been consumed by now
    void finish() {
        auto sec = doc_.sections.find(name_);
        if (sec == doc_.sections.end()) return;
        for (const auto& [key, entry] : sec->second) {
            if (!entry.used) {
                throw ParseError("key '" + key + "' in [" + name_ +
                                 "] is not valid for this kind/type (line " +
                                 std::to_string(entry.line) + ")");
            }
        }
    }

private:
    double to_double(const std::string& key, const std::string& text) const {
        char* end = nullptr;
        const double v = std::strtod(text.c_str(), &end);
        if (end == text.c_str() || *end != '\0' || !std::isfinite(v)) {
            throw ParseError("invalid number '" + text + "' for '" + key + "' in [" + name_ +
                             "]");
        }
        return v;
    }

    int to_int(const std::string& key, const std::string& text) const {
        char* end = nullptr;
        const long v = std::strtol(text.c_str(), &end, 10);
        if (end == text.c_str() || *end != '\0') {
            throw ParseError("invalid integer '" + text + "' for '" + key + "' in [" + name_ +
                             "]");
        }
        return static_cast<int>(v);
    }

    Document& doc_;
    std::string name_;
};

ModulationSpec read_modulation(Reader& mod) {
    ModulationSpec spec;
    const std::string type = mod.require_string("type");
    if (type == "constant") {
        spec.type = ModulationSpec::Type::Constant;
        spec.scale = mod.optional_double("scale", 1.0);
    } else if (type == "cosine") {
        spec.type = ModulationSpec::Type::Cosine;
        spec.omega = mod.require_double("omega");
        spec.theta_over_pi = mod.optional_double("theta_over_pi", 0.0);
        spec.scale = mod.optional_double("scale", 1.0);
    } else if (type == "step") {
        spec.type = ModulationSpec::Type::Step;
        spec.delta_rel = mod.require_double("delta_rel");
        spec.t_switch = mod.require_double("t_switch");
    } else if (type == "quench") {
        spec.type = ModulationSpec::Type::Quench;
        spec.t_on = mod.require_double("t_on");
        spec.t_off = mod.require_double("t_off");
    } else {
        throw ValidationError("unknown modulation type '" + type +
                              "' (expected constant, cosine, step or quench)");
    }
    return spec;
}

ModulationProfile make_profile(const ModulationSpec& spec, double theta) {
    switch (spec.type) {
    case ModulationSpec::Type::Constant:
        return ConstantProfile{spec.scale};
    case ModulationSpec::Type::Cosine:
        return CosineProfile{spec.omega, theta, spec.scale};
    case ModulationSpec::Type::Step:
        return StepProfile{spec.delta_rel, spec.t_switch};
    case ModulationSpec::Type::Quench:
    default:
        return PeriodicQuenchProfile{spec.t_on, spec.t_off};
    }
}

const char* type_name(ModulationSpec::Type type) {
    switch (type) {
    case ModulationSpec::Type::Constant: return "constant";
    case ModulationSpec::Type::Cosine: return "cosine";
    case ModulationSpec::Type::Step: return "step";
    case ModulationSpec::Type::Quench:
    default: return "quench";
    }
}

} // namespace

RunSpec parse_config(const std::string& text) {
    Document doc = tokenize(text);
    RunSpec spec;

    if (!doc.sections.count("model")) throw ValidationError("missing [model] section");
    if (!doc.sections.count("modulation")) throw ValidationError("missing [modulation] section");
    if (!doc.sections.count("numerics")) throw ValidationError("missing [numerics] section");

    Reader model(doc, "model");
    Reader mod(doc, "modulation");
    Reader num(doc, "numerics");
    Reader out(doc, "output");
    Reader sweep(doc, "sweep");

    const ModulationSpec modulation = read_modulation(mod);

    const std::string kind = model.require_string("kind");
    if (kind == "continuum") {
        ContinuumSpec c;
        c.gamma0_tau = model.require_double("gamma0_tau");
        c.phi_over_pi = model.require_double("phi_over_pi");
        c.modulation = modulation;
        c.horizon = num.require_double("horizon");
        c.steps_per_tau = num.optional_int("steps_per_tau", 64);
        spec.model = c;
        spec.mode = RunMode::Continuum;
    } else if (kind == "lattice") {
        LatticeSpec l;
        l.J_over_g0 = model.require_double("J_over_g0");
        l.span = model.require_int("N");
        l.chain_len = model.optional_int("M", 0);
        l.modulation = modulation;
        l.horizon = num.require_double("horizon");
        l.step = num.optional_double("step", 0.0);
        spec.model = l;
        spec.mode = RunMode::Lattice;
    } else {
        throw ValidationError("model kind must be 'continuum' or 'lattice', got '" + kind + "'");
    }

    spec.csv_path = out.optional_string("csv", "");
    spec.svg_path = out.optional_string("svg", "");

    if (sweep.present()) {
        SweepSection s;
        s.param = sweep.require_string("param");
        s.values = sweep.require_list("values");
        const std::string reducer = sweep.require_string("reducer");
        if (reducer == "plateau") {
            s.reducer.kind = Reducer::Kind::Plateau;
            s.reducer.tail_fraction = sweep.optional_double("tail_fraction", 0.2);
            s.reducer.tol = sweep.optional_double("tol", 1e-3);
        } else if (reducer == "population_at") {
            s.reducer.kind = Reducer::Kind::PopulationAt;
            s.reducer.at_time = sweep.require_double("at_time");
        } else {
            throw ValidationError("reducer must be 'plateau' or 'population_at', got '" +
                                  reducer + "'");
        }
        spec.sweep = std::move(s);
        spec.mode = RunMode::Sweep;
    }

    model.finish();
    mod.finish();
    num.finish();
    out.finish();
    sweep.finish();

    // surface invariant violations now, before any run starts
    build_sim(spec);
    if (spec.sweep) build_axis(*spec.sweep);
    return spec;
}

SimCase build_sim(const RunSpec& spec) {
    if (const auto* c = std::get_if<ContinuumSpec>(&spec.model)) {
        ContinuumCase out;
        out.params.gamma0 = 1.0;
        out.params.tau = c->gamma0_tau;
        out.params.phi = c->phi_over_pi * std::numbers::pi;
        out.params.profile1 = make_profile(c->modulation, 0.0);
        out.params.profile2 =
            make_profile(c->modulation, c->modulation.theta_over_pi * std::numbers::pi);
        out.horizon = c->horizon;
        out.steps_per_tau = c->steps_per_tau;
        validate(out.params);
        if (!(out.horizon > 0.0)) throw ValidationError("horizon must be positive");
        if (out.params.tau > 0.0 && out.steps_per_tau < 16) {
            throw ValidationError("steps_per_tau must be at least 16 when tau > 0");
        }
        return out;
    }

    const auto& l = std::get<LatticeSpec>(spec.model);
    LatticeCase out;
    out.config.g0 = 1.0;
    out.config.hopping = l.J_over_g0;
    out.config.span = l.span;
    out.config.horizon = l.horizon;
    if (!(l.J_over_g0 > 0.0)) throw ValidationError("J_over_g0 must be positive");
    if (!(l.horizon > 0.0)) throw ValidationError("horizon must be positive");
    out.config.step = l.step > 0.0 ? l.step : 0.02 / l.J_over_g0;
    out.config.chain_len =
        l.chain_len > 0 ? l.chain_len : auto_chain_len(l.J_over_g0, l.horizon, l.span);
    out.config.schedule =
        make_profile(l.modulation, l.modulation.theta_over_pi * std::numbers::pi);
    validate(out.config);
    return out;
}

SweepAxis build_axis(const SweepSection& sweep) {
    static const char* plain[] = {"delta_rel", "omega", "t_on", "t_off", "t_switch", "N", "J"};
    SweepAxis axis;
    if (sweep.param == "phi_over_pi" || sweep.param == "theta_over_pi") {
        axis.param = sweep.param == "phi_over_pi" ? "phi" : "theta";
        for (double v : sweep.values) axis.values.push_back(v * std::numbers::pi);
        return axis;
    }
    const bool known = std::any_of(std::begin(plain), std::end(plain),
                                   [&](const char* p) { return sweep.param == p; });
    if (!known) {
        throw ValidationError("unknown sweep param '" + sweep.param + "'");
    }
    axis.param = sweep.param;
    axis.values = sweep.values;
    return axis;
}

std::string render_config(const RunSpec& spec) {
    std::ostringstream out;
    out << "[model]\n";
    const ModulationSpec* modulation = nullptr;
    if (const auto* c = std::get_if<ContinuumSpec>(&spec.model)) {
        out << "kind = continuum\n";
        out << "gamma0_tau = " << fmt_full(c->gamma0_tau) << "\n";
        out << "phi_over_pi = " << fmt_full(c->phi_over_pi) << "\n";
        modulation = &c->modulation;
    } else {
        const auto& l = std::get<LatticeSpec>(spec.model);
        out << "kind = lattice\n";
        out << "J_over_g0 = " << fmt_full(l.J_over_g0) << "\n";
        out << "N = " << l.span << "\n";
        if (l.chain_len > 0) out << "M = " << l.chain_len << "\n";
        modulation = &l.modulation;
    }

    out << "\n[modulation]\n";
    out << "type = " << type_name(modulation->type) << "\n";
    switch (modulation->type) {
    case ModulationSpec::Type::Constant:
        out << "scale = " << fmt_full(modulation->scale) << "\n";
        break;
    case ModulationSpec::Type::Cosine:
        out << "omega = " << fmt_full(modulation->omega) << "\n";
        out << "theta_over_pi = " << fmt_full(modulation->theta_over_pi) << "\n";
        out << "scale = " << fmt_full(modulation->scale) << "\n";
        break;
    case ModulationSpec::Type::Step:
        out << "delta_rel = " << fmt_full(modulation->delta_rel) << "\n";
        out << "t_switch = " << fmt_full(modulation->t_switch) << "\n";
        break;
    case ModulationSpec::Type::Quench:
        out << "t_on = " << fmt_full(modulation->t_on) << "\n";
        out << "t_off = " << fmt_full(modulation->t_off) << "\n";
        break;
    }

    out << "\n[numerics]\n";
    if (const auto* c = std::get_if<ContinuumSpec>(&spec.model)) {
        out << "horizon = " << fmt_full(c->horizon) << "\n";
        out << "steps_per_tau = " << c->steps_per_tau << "\n";
    } else {
        const auto& l = std::get<LatticeSpec>(spec.model);
        out << "horizon = " << fmt_full(l.horizon) << "\n";
        if (l.step > 0.0) out << "step = " << fmt_full(l.step) << "\n";
    }

    if (!spec.csv_path.empty() || !spec.svg_path.empty()) {
        out << "\n[output]\n";
        if (!spec.csv_path.empty()) out << "csv = " << spec.csv_path << "\n";
        if (!spec.svg_path.empty()) out << "svg = " << spec.svg_path << "\n";
    }

    if (spec.sweep) {
        out << "\n[sweep]\n";
        out << "param = " << spec.sweep->param << "\n";
        out << "values = ";
        for (std::size_t i = 0; i < spec.sweep->values.size(); ++i) {
            if (i) out << ", ";
            out << fmt_full(spec.sweep->values[i]);
        }
        out << "\n";
        out << "reducer = " << spec.sweep->reducer.name() << "\n";
        if (spec.sweep->reducer.kind == Reducer::Kind::PopulationAt) {
            out << "at_time = " << fmt_full(spec.sweep->reducer.at_time) << "\n";
        } else {
            out << "tail_fraction = " << fmt_full(spec.sweep->reducer.tail_fraction) << "\n";
            out << "tol = " << fmt_full(spec.sweep->reducer.tol) << "\n";
        }
    }
    return out.str();
}

std::string config_schema() {
    return R"(# config schema (INI; '#' or ';' start comments; unknown keys are errors)
#
# Times are in 1/Gamma0 (continuum) or 1/g0 (lattice); rates in Gamma0 or g0;
# angles in units of pi.

[model]
kind = continuum | lattice
# kind = continuum:
gamma0_tau = <float >= 0>        # delay between the coupling points
phi_over_pi = <float>            # propagation phase
# kind = lattice:
J_over_g0 = <float > 0>          # hopping rate
N = <int >= 1>                   # site separation of the coupling pair
M = <int>                        # optional chain length; auto-sized when absent
                                 # (must keep M - N odd and clear the light cone)

[modulation]
type = constant | cosine | step | quench
scale = <float>                  # constant/cosine; default 1
omega = <float>                  # cosine modulation frequency
theta_over_pi = <float>          # cosine; phase of the second leg; default 0
delta_rel = <float>              # step jump (g_after - g_before)/g0
t_switch = <float >= 0>          # step switch time
t_on = <float > 0>               # quench ON duration
t_off = <float >= 0>             # quench OFF duration

[numerics]
horizon = <float > 0>
steps_per_tau = <int >= 16>      # continuum; default 64 (per 1/Gamma0 when tau = 0)
step = <float>                   # lattice; default 0.02/J; must keep step*J <= 0.05

[output]
csv = <path>                     # required here or via --csv
svg = <path>                     # optional plot

[sweep]                          # presence selects sweep mode
param = delta_rel | theta_over_pi | omega | phi_over_pi | t_on | t_off | t_switch | N | J
values = <comma-separated floats>
reducer = plateau | population_at
at_time = <float>                # population_at
tail_fraction = <float>          # plateau; default 0.2
tol = <float>                    # plateau; default 1e-3

# Sweeps run cells on a worker pool; GIANTATOM_THREADS overrides the pool size.
)";
}

} // namespace giantatom
