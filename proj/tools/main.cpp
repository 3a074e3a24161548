// main.cpp — command-line front end: simulate / sweep / schema dump

#include <fstream>
#include <iostream>
#include <sstream>
#include <string>

#include "CLI11.hpp"

#include "giantatom/config.hpp"
#include "giantatom/errors.hpp"
#include "giantatom/runner.hpp"
#include "giantatom/version.hpp"

namespace {

std::string json_escape(const std::string& s) {
    std::string out;
    out.reserve(s.size() + 8);
    for (char c : s) {
        switch (c) {
        case '"': out += "\\\""; break;
        case '\\': out += "\\\\"; break;
        case '\n': out += "\\n"; break;
        case '\t': out += "\\t"; break;
        default: out += c;
        }
    }
    return out;
}

void report_error(const std::string& kind, const std::string& message) {
    std::cerr << "{\"error\":\"" << json_escape(kind) << "\",\"message\":\""
              << json_escape(message) << "\"}\n";
}

std::string read_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw giantatom::IoError("cannot read config file " + path);
    std::ostringstream buf;
    buf << in.rdbuf();
    return buf.str();
}

struct CmdArgs {
    std::string config_path;
    std::string csv;
    std::string svg;
    bool quiet{false};
};

int run_command(const CmdArgs& args, bool want_sweep) {
    using namespace giantatom;
    RunSpec spec;
    try {
        spec = parse_config(read_file(args.config_path));
        if (want_sweep && spec.mode != RunMode::Sweep) {
            throw ValidationError("config has no [sweep] section; use the simulate subcommand");
        }
        if (!want_sweep && spec.mode == RunMode::Sweep) {
            throw ValidationError("config has a [sweep] section; use the sweep subcommand");
        }
    } catch (const std::exception& e) {
        report_error(error_kind_of(e), e.what());
        return exit_code_for(e);
    }

    RunOptions options;
    options.csv_override = args.csv;
    options.svg_override = args.svg;
    options.quiet = args.quiet;
    const RunOutcome outcome = run(spec, options);
    if (outcome.exit_code != 0) {
        report_error(outcome.error_kind, outcome.message);
    } else if (!args.quiet) {
        std::cout << outcome.message << "\n";
    }
    return outcome.exit_code;
}

void add_common(CLI::App* cmd, CmdArgs& args) {
    cmd->add_option("config", args.config_path, "config file (see --print-schema)")
        ->required();
    cmd->add_option("--csv", args.csv, "override the CSV output path");
    cmd->add_option("--svg", args.svg, "override the SVG output path");
    cmd->add_flag("--quiet", args.quiet, "suppress the summary line");
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"giant-atom decay dynamics: retarded-feedback and lattice simulations"};
    app.set_version_flag("--version", std::string("giantatom ") + giantatom::kVersion);
    bool print_schema = false;
    app.add_flag("--print-schema", print_schema, "print the config file schema and exit");

    CmdArgs sim_args;
    CmdArgs sweep_args;
    CLI::App* simulate = app.add_subcommand("simulate", "run one trajectory from a config file");
    add_common(simulate, sim_args);
    CLI::App* sweep = app.add_subcommand("sweep", "run a one-axis parameter scan");
    add_common(sweep, sweep_args);
    app.require_subcommand(0, 1);

    CLI11_PARSE(app, argc, argv);

    if (print_schema) {
        std::cout << giantatom::config_schema();
        return 0;
    }
    if (simulate->parsed()) return run_command(sim_args, false);
    if (sweep->parsed()) return run_command(sweep_args, true);

    std::cout << app.help();
    return 0;
}
