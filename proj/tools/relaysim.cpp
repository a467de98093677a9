// relaysim: Monte Carlo simulator and bound calculator for a two-hop
// relay protocol with top-k candidate selection and cooperative jamming.

#include <cmath>
#include <cstdint>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "relaysec/bounds.hpp"
#include "relaysec/montecarlo.hpp"
#include "relaysec/params.hpp"
#include "relaysec/report.hpp"

namespace {

constexpr int kExitOk = 0;
constexpr int kExitConfig = 2;
constexpr int kExitIo = 3;

struct CliState {
    relaysec::SystemParams params;
    relaysec::SimConfig sim;
    std::string out_path;
    std::string svg_path;
    std::string sweep_text;
    bool print_config = false;
};

void print_resolved_config(const CliState& st) {
    const auto& p = st.params;
    std::cout << "n=" << p.n << "\nm=" << p.m << "\nk=" << p.k
              << "\ntau=" << relaysec::format_number(p.tau)
              << "\ngamma_r=" << relaysec::format_number(p.gamma_r)
              << "\ngamma_e=" << relaysec::format_number(p.gamma_e)
              << "\nes=" << relaysec::format_number(p.es)
              << "\nn0=" << relaysec::format_number(p.n0)
              << "\nepsilon_t=" << relaysec::format_number(p.epsilon_t)
              << "\nepsilon_s=" << relaysec::format_number(p.epsilon_s)
              << "\ntrials=" << st.sim.trials
              << "\nblock_length=" << st.sim.block_length
              << "\nseed=" << st.sim.seed << "\nworkers=" << st.sim.workers << '\n';
    if (!st.out_path.empty()) std::cout << "out=" << st.out_path << '\n';
    if (!st.svg_path.empty()) std::cout << "svg=" << st.svg_path << '\n';
    if (!st.sweep_text.empty()) std::cout << "sweep=" << st.sweep_text << '\n';
}

void print_bounds_summary(const relaysec::BoundsReport& rep) {
    using relaysec::format_number;
    auto opt = [](const std::optional<double>& v) {
        return v ? relaysec::format_number(*v) : std::string("undefined");
    };
    std::cout << "psi            = " << format_number(rep.psi) << '\n'
              << "p_out_t_bound  = " << format_number(rep.p_out_t_bound) << '\n'
              << "p_out_s_bound  = " << format_number(rep.p_out_s_bound)
              << (rep.s_bound_vacuous ? " (vacuous)" : "") << '\n'
              << "tau_min        = " << opt(rep.tau_min) << '\n'
              << "tau_max        = " << opt(rep.tau_max) << '\n'
              << "m_max          = " << opt(rep.m_max) << '\n'
              << "feasible       = " << (rep.feasible ? "true" : "false") << '\n';
    if (rep.tau_in_window) {
        std::cout << "tau_in_window  = " << (*rep.tau_in_window ? "true" : "false")
                  << '\n';
    }
    const std::string diag = rep.diagnostics_joined();
    if (!diag.empty()) std::cout << "diagnostics    = " << diag << '\n';
}

void emit_rows(const CliState& st, const std::vector<std::string>& rows) {
    if (st.out_path.empty()) {
        std::cout << relaysec::csv_header() << '\n';
        for (const auto& r : rows) std::cout << r << '\n';
    } else {
        relaysec::append_csv_rows(st.out_path, rows);
    }
}

int cmd_simulate(const CliState& st) {
    relaysec::validate(st.params);
    relaysec::validate(st.sim);
    const auto result = relaysec::run_simulation(st.params, st.sim);
    const auto report = relaysec::feasibility(st.params);

    using relaysec::format_number;
    std::cout << "p_out_t_hat    = " << format_number(result.p_out_t_hat) << "  ["
              << format_number(result.ci_t.lo) << ", " << format_number(result.ci_t.hi)
              << "]\n"
              << "p_out_s_hat    = " << format_number(result.p_out_s_hat) << "  ["
              << format_number(result.ci_s.lo) << ", " << format_number(result.ci_s.hi)
              << "]\n"
              << "jain_index     = " << format_number(result.jain_index) << '\n'
              << "mean_jam1      = " << format_number(result.mean_jam1) << '\n'
              << "mean_jam2      = " << format_number(result.mean_jam2) << '\n';
    print_bounds_summary(report);

    emit_rows(st, {relaysec::format_csv_row(st.params, st.sim, &result, report)});
    return kExitOk;
}

int cmd_bounds(const CliState& st) {
    relaysec::validate(st.params);
    const auto report = relaysec::feasibility(st.params);
    print_bounds_summary(report);
    emit_rows(st, {relaysec::format_csv_row(st.params, st.sim, nullptr, report)});
    return kExitOk;
}

int cmd_sweep(const CliState& st) {
    if (st.sweep_text.empty()) {
        throw std::invalid_argument("sweep: --sweep PARAM:START:STOP:STEP is required");
    }
    const auto spec = relaysec::parse_sweep(st.sweep_text);

    std::vector<std::string> rows;
    std::vector<double> xs;
    relaysec::SvgSeries s_t{"p_out_t_hat", "#1f77b4", {}};
    relaysec::SvgSeries s_tb{"p_out_t_bound", "#aec7e8", {}};
    relaysec::SvgSeries s_s{"p_out_s_hat", "#d62728", {}};
    relaysec::SvgSeries s_sb{"p_out_s_bound", "#ff9896", {}};
    relaysec::SvgSeries s_j{"jain_index", "#2ca02c", {}};

    for (std::size_t i = 0; i < spec.values.size(); ++i) {
        const double v = spec.values[i];
        relaysec::SystemParams p = st.params;
        if (spec.param == "tau") {
            p.tau = v;
        } else {
            if (v != std::floor(v)) {
                throw std::invalid_argument(spec.param + ": sweep values must be integers");
            }
            if (spec.param == "k") p.k = static_cast<int>(v);
            if (spec.param == "n") p.n = static_cast<int>(v);
            if (spec.param == "m") p.m = static_cast<int>(v);
        }
        relaysec::validate(p);
        relaysec::SimConfig cfg = st.sim;
        cfg.seed = relaysec::substream_seed(st.sim.seed, i);  // per-point substream
        const auto result = relaysec::run_simulation(p, cfg);
        const auto report = relaysec::feasibility(p);
        rows.push_back(relaysec::format_csv_row(p, cfg, &result, report));
        xs.push_back(v);
        s_t.y.push_back(result.p_out_t_hat);
        s_tb.y.push_back(report.p_out_t_bound);
        s_s.y.push_back(result.p_out_s_hat);
        s_sb.y.push_back(report.p_out_s_bound);
        s_j.y.push_back(result.jain_index);
    }

    emit_rows(st, rows);
    if (!st.svg_path.empty()) {
        relaysec::write_svg_chart(st.svg_path, spec.param, xs,
                                  {s_t, s_tb, s_s, s_sb, s_j});
    }
    std::cout << "sweep: " << spec.values.size() << " points over " << spec.param
              << '\n';
    return kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Two-hop secure relay simulator with top-k selection and cooperative jamming"};
    CliState st;

    app.set_config("--config", "", "Flat key=value config file (# comments)");
    app.add_option("--n", st.params.n, "Number of relay nodes");
    app.add_option("--m", st.params.m, "Number of eavesdroppers");
    app.add_option("--k", st.params.k, "Candidate relay set size");
    app.add_option("--tau", st.params.tau, "Jammer-selection gain threshold");
    app.add_option("--gamma_r", st.params.gamma_r, "Legitimate SINR threshold");
    app.add_option("--gamma_e", st.params.gamma_e, "Eavesdropper SINR threshold");
    app.add_option("--es", st.params.es, "Common transmit power");
    app.add_option("--n0", st.params.n0, "Noise parameter (denominator constant N0/2)");
    app.add_option("--epsilon_t", st.params.epsilon_t, "Transmission-outage target");
    app.add_option("--epsilon_s", st.params.epsilon_s, "Secrecy-outage target");
    app.add_option("--trials", st.sim.trials, "Number of simulated transmissions");
    app.add_option("--block_length,--block-length", st.sim.block_length,
                   "Trials sharing one legitimate-channel draw");
    app.add_option("--seed", st.sim.seed, "Master RNG seed");
    app.add_option("--workers", st.sim.workers, "Worker threads (does not affect results)");
    app.add_option("--out", st.out_path, "CSV output path (appended)");
    app.add_option("--svg", st.svg_path, "SVG chart output path (sweep only)");
    app.add_option("--sweep", st.sweep_text, "Sweep descriptor PARAM:START:STOP:STEP or PARAM:V1,V2,...");
    app.add_flag("--print-config", st.print_config, "Echo the fully resolved configuration");

    auto* sub_sim = app.add_subcommand("simulate", "Run a Monte Carlo simulation");
    auto* sub_bounds = app.add_subcommand("bounds", "Evaluate closed-form bounds only");
    auto* sub_sweep = app.add_subcommand("sweep", "Sweep one parameter, simulating each point");
    for (auto* sub : {sub_sim, sub_bounds, sub_sweep}) sub->fallthrough();
    app.require_subcommand(1);

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? kExitOk : kExitConfig;
    }

    if (st.print_config) print_resolved_config(st);

    try {
        if (sub_sim->parsed()) return cmd_simulate(st);
        if (sub_bounds->parsed()) return cmd_bounds(st);
        return cmd_sweep(st);
    } catch (const relaysec::IoError& e) {
        std::cerr << "error: " << e.what() << '\n';
        return kExitIo;
    } catch (const std::invalid_argument& e) {
        std::cerr << "error: " << e.what() << '\n';
        return kExitConfig;
    }
}
