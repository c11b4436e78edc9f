// qheat: steady states and heat currents of qubits between two thermal reservoirs.
//
//   qheat single  --w0 1 --ga 1 --gb 1 --ta 2 --tb 1
//   qheat coupled --mode redfield --w1 1 --w2 2 --lambda 0.5 --g 1 --ta 10 --tb 0.5
//   qheat sweep   --model coupled --mode lindblad --var t --range 0.1:8:80 --out t.csv
//   qheat preset  fig5 --out fig5.csv
//
// Exit status: 0 ok, 1 usage or configuration error, 2 numeric failure, or a
// physics-check failure under --strict-positivity.

#include <CLI11.hpp>

#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>

#include "qheat/errors.hpp"
#include "qheat/sweep.hpp"

namespace {

using namespace qheat;
using namespace qheat::cli;

constexpr int kExitOk = 0;
constexpr int kExitUsage = 1;
constexpr int kExitNumeric = 2;

struct Globals {
    std::string out;
    bool strict{false};
    bool no_header{false};
};

struct ParamOptions {
    PointParams p;
    std::optional<double> g;
};

void add_single_params(CLI::App* cmd, ParamOptions& o) {
    cmd->add_option("--w0", o.p.w0, "Qubit frequency")->capture_default_str();
    cmd->add_option("--g", o.g, "Spectral density of both reservoirs");
    cmd->add_option("--ga", o.p.ga, "Spectral density of reservoir A")->capture_default_str();
    cmd->add_option("--gb", o.p.gb, "Spectral density of reservoir B")->capture_default_str();
    cmd->add_option("--ta", o.p.ta, "Temperature of reservoir A")->capture_default_str();
    cmd->add_option("--tb", o.p.tb, "Temperature of reservoir B")->capture_default_str();
}

void add_coupled_params(CLI::App* cmd, ParamOptions& o) {
    cmd->add_option("--w1", o.p.w1, "Frequency of qubit 1")->capture_default_str();
    cmd->add_option("--w2", o.p.w2, "Frequency of qubit 2")->capture_default_str();
    cmd->add_option("--lambda", o.p.lambda, "Flip-flop coupling")->capture_default_str();
    cmd->add_option("--g", o.g, "Spectral density of both reservoirs");
    cmd->add_option("--ga", o.p.ga, "Spectral density of reservoir A")->capture_default_str();
    cmd->add_option("--gb", o.p.gb, "Spectral density of reservoir B")->capture_default_str();
    cmd->add_option("--ta", o.p.ta, "Temperature of reservoir A")->capture_default_str();
    cmd->add_option("--tb", o.p.tb, "Temperature of reservoir B")->capture_default_str();
}

PointParams resolved(const ParamOptions& o) {
    PointParams p = o.p;
    if (o.g) p.ga = p.gb = *o.g;
    return p;
}

// Parses start:stop:count.
void parse_range(const std::string& text, SweepConfig& cfg) {
    std::istringstream is(text);
    std::string a, b, c;
    if (!std::getline(is, a, ':') || !std::getline(is, b, ':') || !std::getline(is, c) ||
        a.empty() || b.empty() || c.empty()) {
        throw ConfigError("--range expects start:stop:count, got '" + text + "'");
    }
    try {
        std::size_t used = 0;
        cfg.start = std::stod(a, &used);
        if (used != a.size()) throw std::invalid_argument(a);
        cfg.stop = std::stod(b, &used);
        if (used != b.size()) throw std::invalid_argument(b);
        cfg.count = std::stoi(c, &used);
        if (used != c.size()) throw std::invalid_argument(c);
    } catch (const std::logic_error&) {
        throw ConfigError("--range expects start:stop:count, got '" + text + "'");
    }
}

// Writes to --out when given, stdout otherwise.
void emit(const Globals& g, const std::string& text) {
    if (g.out.empty()) {
        std::cout << text;
        return;
    }
    std::ofstream f(g.out, std::ios::binary);
    if (!f) throw ConfigError("cannot open output file '" + g.out + "'");
    f << text;
    if (!f.flush()) throw ConfigError("cannot write output file '" + g.out + "'");
}

bool physics_failure(const PointResult& r) {
    return violates_positivity(r) || r.second_law == SecondLaw::Fail;
}

int run_point(const Globals& g, Model model, KernelMode mode, const PointParams& p) {
    const PointResult r = compute_point(model, mode, p);
    emit(g, format_point_report(model, mode, p, r));
    if (g.strict && physics_failure(r)) {
        std::cerr << "qheat: physics check failed (min population "
                  << r.positivity.min_population << ", min eigenvalue "
                  << r.positivity.min_eigenvalue << ", second law "
                  << to_string(r.second_law) << ")\n";
        return kExitNumeric;
    }
    return kExitOk;
}

int run_csv(const Globals& g, SweepConfig cfg) {
    cfg.header = !g.no_header;
    validate(cfg);
    const auto rows = run_sweep(cfg);
    std::ostringstream os;
    write_csv(os, cfg, rows);
    emit(g, os.str());

    int errors = 0;
    int violations = 0;
    for (const auto& row : rows) {
        if (!row.result) {
            ++errors;
            std::cerr << "qheat: " << cfg.var << "=" << row.value << ": " << row.error << "\n";
        } else if (physics_failure(*row.result)) {
            ++violations;
        }
    }
    if (g.strict && violations > 0) {
        std::cerr << "qheat: " << violations << " of " << rows.size()
                  << " points fail the positivity or second-law check\n";
        return kExitNumeric;
    }
    return kExitOk;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"Steady states and heat currents of qubits coupled to two thermal reservoirs"};
    app.set_version_flag("--version", std::string(kVersion));
    app.require_subcommand(1);
    app.set_config("--config", "", "Read options from a TOML/INI file (flags take precedence)");

    Globals g;
    app.add_option("--out", g.out, "Write output to this file instead of stdout");
    app.add_flag("--strict-positivity", g.strict,
                 "Exit with status 2 when a state has negative populations or eigenvalues, "
                 "or breaks the second law");
    app.add_flag("--no-header", g.no_header, "Omit the # comment line from CSV output");

    std::string mode_name = "lindblad";
    auto mode_check = CLI::IsMember({"lindblad", "redfield", "partial-secular"});

    ParamOptions single_opts;
    auto* single = app.add_subcommand("single", "Steady state of one qubit between reservoirs A and B");
    single->fallthrough();
    single->add_option("--mode", mode_name, "Kernel: lindblad, redfield or partial-secular")
        ->check(mode_check)
        ->capture_default_str();
    add_single_params(single, single_opts);

    ParamOptions coupled_opts;
    std::string coupled_mode = "lindblad";
    auto* coupled = app.add_subcommand("coupled", "Steady state of two flip-flop coupled qubits");
    coupled->fallthrough();
    coupled->add_option("--mode", coupled_mode, "Kernel: lindblad, redfield or partial-secular")
        ->check(mode_check)
        ->capture_default_str();
    add_coupled_params(coupled, coupled_opts);

    ParamOptions sweep_opts;
    std::string sweep_model = "coupled";
    std::string sweep_mode = "lindblad";
    std::string range;
    SweepConfig sweep_cfg;
    auto* sweep = app.add_subcommand("sweep", "Sweep one parameter on a linear grid, CSV output");
    sweep->fallthrough();
    sweep->add_option("--model", sweep_model, "single or coupled")
        ->check(CLI::IsMember({"single", "coupled"}))
        ->capture_default_str();
    sweep->add_option("--mode", sweep_mode, "Kernel: lindblad, redfield or partial-secular")
        ->check(mode_check)
        ->capture_default_str();
    sweep->add_option("--var", sweep_cfg.var,
                      "Swept parameter: w0 | w1 w2 lambda, g ga gb ta tb, or t (T_A = t + bias, "
                      "T_B = t - bias)")
        ->required();
    sweep->add_option("--range", range, "start:stop:count (inclusive)")->required();
    sweep->add_option("--bias", sweep_cfg.bias, "Half temperature difference when --var t")
        ->capture_default_str();
    sweep->add_option("--threads", sweep_cfg.threads, "Worker threads (0: all cores)")
        ->capture_default_str();
    sweep->add_option("--w0", sweep_opts.p.w0, "Qubit frequency (single)")->capture_default_str();
    add_coupled_params(sweep, sweep_opts);

    std::string preset_name;
    auto* preset_cmd = app.add_subcommand("preset", "Regenerate a figure data set as CSV");
    preset_cmd->fallthrough();
    preset_cmd->add_option("name", preset_name, "fig3, fig4 or fig5")
        ->required()
        ->check(CLI::IsMember({"fig3", "fig4", "fig5"}));

    try {
        app.parse(argc, argv);
    } catch (const CLI::Success& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return kExitUsage;
    }

    try {
        if (single->parsed()) {
            return run_point(g, Model::Single, parse_kernel_mode(mode_name), resolved(single_opts));
        }
        if (coupled->parsed()) {
            return run_point(g, Model::Coupled, parse_kernel_mode(coupled_mode),
                             resolved(coupled_opts));
        }
        if (sweep->parsed()) {
            sweep_cfg.model = parse_model(sweep_model);
            sweep_cfg.mode = parse_kernel_mode(sweep_mode);
            sweep_cfg.fixed = resolved(sweep_opts);
            parse_range(range, sweep_cfg);
            return run_csv(g, sweep_cfg);
        }
        return run_csv(g, preset(preset_name));
    } catch (const DomainError& e) {
        std::cerr << "qheat: invalid parameter: " << e.what() << "\n";
        return kExitUsage;
    } catch (const ConfigError& e) {
        std::cerr << "qheat: " << e.what() << "\n";
        return kExitUsage;
    } catch (const LookupError& e) {
        std::cerr << "qheat: " << e.what() << "\n";
        return kExitUsage;
    } catch (const std::exception& e) {
        std::cerr << "qheat: numeric failure: " << e.what() << "\n";
        return kExitNumeric;
    }
}
