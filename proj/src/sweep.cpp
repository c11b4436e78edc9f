// sweep.cpp: sweeps, presets, CSV and report formatting

#include "qheat/sweep.hpp"

#include <algorithm>
#include <atomic>
#include <cmath>
#include <cstdio>
#include <limits>
#include <ostream>
#include <sstream>
#include <thread>

#include "qheat/errors.hpp"
#include "qheat/pipeline.hpp"

namespace qheat::cli {

namespace {

std::string fmt(double x) {
    if (std::isnan(x)) return "nan";
    char buf[32];
    std::snprintf(buf, sizeof buf, "%.12g", x);
    return buf;
}

const std::vector<std::string>& variables(Model m) {
    static const std::vector<std::string> single{"w0", "g", "ga", "gb", "ta", "tb", "t"};
    static const std::vector<std::string> coupled{"w1", "w2", "lambda", "g", "ga",
                                                  "gb", "ta", "tb",     "t"};
    return m == Model::Single ? single : coupled;
}

std::string sanitize(std::string s) {
    std::replace(s.begin(), s.end(), ',', ';');
    std::replace(s.begin(), s.end(), '\n', ' ');
    return s;
}

std::string params_echo(Model model, const PointParams& p) {
    std::ostringstream os;
    if (model == Model::Single) {
        os << "w0=" << fmt(p.w0);
    } else {
        os << "w1=" << fmt(p.w1) << " w2=" << fmt(p.w2) << " lambda=" << fmt(p.lambda);
    }
    os << " ga=" << fmt(p.ga) << " gb=" << fmt(p.gb) << " ta=" << fmt(p.ta)
       << " tb=" << fmt(p.tb);
    return os.str();
}

// Currents below round-off of the O(1) steady-state solve are shown as 0.
double report_current(double q) {
    return std::abs(q) < kReportCurrentFloor ? 0.0 : q;
}

} // namespace

std::string_view to_string(Model m) noexcept {
    return m == Model::Single ? "single" : "coupled";
}

Model parse_model(std::string_view name) {
    if (name == "single") return Model::Single;
    if (name == "coupled") return Model::Coupled;
    throw ConfigError("unknown model '" + std::string(name) + "'");
}

void validate(const SweepConfig& cfg) {
    if (cfg.count < 2) throw ConfigError("sweep: count must be at least 2");
    if (!(cfg.start < cfg.stop)) throw ConfigError("sweep: start must be below stop");
    const auto& vars = variables(cfg.model);
    if (std::find(vars.begin(), vars.end(), cfg.var) == vars.end()) {
        std::string msg = "sweep: variable '" + cfg.var + "' is not a parameter of the " +
                          std::string(to_string(cfg.model)) + " model (one of:";
        for (const auto& v : vars) msg += " " + v;
        throw ConfigError(msg + ")");
    }
}

std::vector<double> sweep_grid(const SweepConfig& cfg) {
    validate(cfg);
    std::vector<double> grid(static_cast<std::size_t>(cfg.count));
    const double span = cfg.stop - cfg.start;
    for (int i = 0; i < cfg.count; ++i) {
        grid[i] = cfg.start + span * static_cast<double>(i) / static_cast<double>(cfg.count - 1);
    }
    grid.back() = cfg.stop;
    return grid;
}

PointParams point_at(const SweepConfig& cfg, double value) {
    PointParams p = cfg.fixed;
    const std::string& v = cfg.var;
    if (v == "w0") p.w0 = value;
    else if (v == "w1") p.w1 = value;
    else if (v == "w2") p.w2 = value;
    else if (v == "lambda") p.lambda = value;
    else if (v == "g") p.ga = p.gb = value;
    else if (v == "ga") p.ga = value;
    else if (v == "gb") p.gb = value;
    else if (v == "ta") p.ta = value;
    else if (v == "tb") p.tb = value;
    else if (v == "t") {
        p.ta = value + cfg.bias;
        p.tb = value - cfg.bias;
    } else {
        throw ConfigError("sweep: unknown variable '" + v + "'");
    }
    return p;
}

PointResult compute_point(Model model, KernelMode mode, const PointParams& p) {
    PipelineResult run = [&] {
        if (model == Model::Single) {
            return run_single_qubit({p.w0, p.ga, p.gb, p.ta, p.tb}, mode);
        }
        models::CoupledQubitParams cp;
        cp.omega1 = p.w1;
        cp.omega2 = p.w2;
        cp.lambda = p.lambda;
        cp.g_a = SpectralDensity::constant(p.ga);
        cp.g_b = SpectralDensity::constant(p.gb);
        cp.t_a = p.ta;
        cp.t_b = p.tb;
        return run_coupled_qubits(cp, mode);
    }();

    PointResult r;
    r.populations = run.rho().populations();
    r.coherence = model == Model::Single ? run.rho().entries(0, 1) : run.rho().entries(1, 2);
    r.q_a = run.q_a;
    r.q_b = run.q_b;
    r.conservation_residual = run.report.conservation_residual;
    r.solver_residual = run.steady.residual;
    r.second_law = run.report.second_law;
    r.positivity = run.positivity;
    if (!(r.conservation_residual < kRowConservationTol)) {
        std::ostringstream msg;
        msg << "conservation residual " << r.conservation_residual << " exceeds "
            << kRowConservationTol;
        throw ConsistencyError(msg.str());
    }
    return r;
}

std::vector<SweepRow> run_sweep(const SweepConfig& cfg) {
    const std::vector<double> grid = sweep_grid(cfg);
    std::vector<SweepRow> rows(grid.size());

    std::atomic<std::size_t> next{0};
    auto worker = [&] {
        for (std::size_t i = next++; i < grid.size(); i = next++) {
            SweepRow& row = rows[i];
            row.value = grid[i];
            try {
                row.result = compute_point(cfg.model, cfg.mode, point_at(cfg, grid[i]));
            } catch (const std::exception& e) {
                row.error = e.what();
            }
        }
    };
    unsigned n = cfg.threads ? cfg.threads : std::max(1u, std::thread::hardware_concurrency());
    n = std::min<unsigned>(n, static_cast<unsigned>(grid.size()));
    std::vector<std::thread> pool;
    for (unsigned t = 1; t < n; ++t) pool.emplace_back(worker);
    worker();
    for (auto& t : pool) t.join();
    return rows;
}

std::vector<std::string> csv_columns(const SweepConfig& cfg) {
    std::vector<std::string> cols{cfg.var};
    const int levels = cfg.model == Model::Single ? 2 : 4;
    for (int n = 1; n <= levels; ++n) cols.push_back("rho" + std::to_string(n) + std::to_string(n));
    if (cfg.model == Model::Single) {
        cols.insert(cols.end(), {"rho12_re", "rho12_im"});
    } else {
        cols.insert(cols.end(), {"rho23_re", "rho23_im"});
    }
    cols.insert(cols.end(), {"q_a", "q_b", "conservation_residual", "min_population",
                             "second_law", "status"});
    return cols;
}

void write_csv(std::ostream& out, const SweepConfig& cfg, const std::vector<SweepRow>& rows) {
    if (cfg.header) {
        out << "# qheat " << kVersion << " model=" << to_string(cfg.model)
            << " mode=" << to_string(cfg.mode) << " var=" << cfg.var << " range=" << fmt(cfg.start)
            << ":" << fmt(cfg.stop) << ":" << cfg.count << " bias=" << fmt(cfg.bias) << " "
            << params_echo(cfg.model, cfg.fixed) << "\n";
    }
    const auto cols = csv_columns(cfg);
    for (std::size_t i = 0; i < cols.size(); ++i) out << (i ? "," : "") << cols[i];
    out << "\n";

    const int levels = cfg.model == Model::Single ? 2 : 4;
    const double nan = std::numeric_limits<double>::quiet_NaN();
    for (const auto& row : rows) {
        out << fmt(row.value);
        if (row.result) {
            const PointResult& r = *row.result;
            for (int n = 0; n < levels; ++n) out << "," << fmt(r.populations(n));
            out << "," << fmt(r.coherence.real()) << "," << fmt(r.coherence.imag()) << ","
                << fmt(r.q_a) << "," << fmt(r.q_b) << "," << fmt(r.conservation_residual) << ","
                << fmt(r.positivity.min_population) << "," << to_string(r.second_law) << ",ok";
        } else {
            for (int n = 0; n < levels + 6; ++n) out << "," << fmt(nan);
            out << ",not-applicable,error: " << sanitize(row.error);
        }
        out << "\n";
    }
}

SweepConfig preset(std::string_view name) {
    SweepConfig cfg;
    cfg.model = Model::Coupled;
    cfg.fixed = PointParams{};
    cfg.fixed.w1 = 1.0;
    cfg.fixed.w2 = 2.0;
    cfg.fixed.lambda = 0.5;
    cfg.fixed.ga = cfg.fixed.gb = 1.0;
    if (name == "fig3") {
        cfg.mode = KernelMode::Lindblad;
        cfg.var = "t";
        cfg.bias = 0.0;
        cfg.start = 0.05;
        cfg.stop = 8.0;
        cfg.count = 161;
    } else if (name == "fig4") {
        cfg.mode = KernelMode::Lindblad;
        cfg.var = "ta";
        cfg.fixed.tb = 1.0;
        cfg.start = 0.5;
        cfg.stop = 1.5;
        cfg.count = 101;
    } else if (name == "fig5") {
        cfg.mode = KernelMode::Redfield;
        cfg.var = "t";
        cfg.bias = 5.0;
        cfg.start = 5.02;
        cfg.stop = 8.0;
        cfg.count = 161;
    } else {
        throw ConfigError("unknown preset '" + std::string(name) + "' (fig3, fig4, fig5)");
    }
    return cfg;
}

std::string format_point_report(Model model, KernelMode mode, const PointParams& p,
                                const PointResult& r) {
    std::ostringstream os;
    os << "model: " << to_string(model) << "\n";
    os << "mode: " << to_string(mode) << "\n";
    os << "parameters: " << params_echo(model, p) << "\n";
    os << "populations:";
    for (Eigen::Index n = 0; n < r.populations.size(); ++n) {
        os << " rho" << n + 1 << n + 1 << "=" << fmt(r.populations(n));
    }
    os << "\n";
    os << (model == Model::Single ? "coherence: rho12=" : "coherence: rho23=")
       << fmt(r.coherence.real()) << (r.coherence.imag() < 0 ? "-" : "+")
       << fmt(std::abs(r.coherence.imag())) << "i\n";
    os << "currents: q_a=" << fmt(report_current(r.q_a)) << " q_b=" << fmt(report_current(r.q_b))
       << "\n";
    os << "conservation_residual: " << fmt(r.conservation_residual) << "\n";
    os << "second_law: " << to_string(r.second_law) << "\n";
    os << "solver_residual: " << fmt(r.solver_residual) << "\n";
    os << "positivity: min_population=" << fmt(r.positivity.min_population)
       << " min_eigenvalue=" << fmt(r.positivity.min_eigenvalue)
       << " hermiticity_residual=" << fmt(r.positivity.hermiticity_residual) << "\n";
    return os.str();
}

bool violates_positivity(const PointResult& r, double tol) {
    return r.positivity.min_population < -tol || r.positivity.min_eigenvalue < -tol;
}

} // namespace qheat::cli
