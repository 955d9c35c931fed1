// vodsim: policy-based admission control simulator for a partitioned
// video-on-demand server, plus the analytic cross-checks.

#include <CLI11.hpp>
#include <filesystem>
#include <iostream>

#include "vodsim/analytics.hpp"
#include "vodsim/config.hpp"
#include "vodsim/engine.hpp"
#include "vodsim/reporting.hpp"
#include "vodsim/util.hpp"

namespace fs = std::filesystem;
using namespace vodsim;

namespace {

struct CommonOpts {
    std::string config_path;
    std::string matrix_path;
    std::string out_dir = "out";
    std::uint64_t seed = 0;
    bool seed_set = false;
    int policy_column = -1;
    bool no_policy = false;
};

void add_common(CLI::App* cmd, CommonOpts& opts) {
    cmd->add_option("--config", opts.config_path, "configuration file (key = value lines)");
    cmd->add_option("--matrix", opts.matrix_path, "control matrix CSV");
    cmd->add_option("--out", opts.out_dir, "output directory");
    cmd->add_option("--seed", opts.seed, "RNG seed")->each([&](const std::string&) {
        opts.seed_set = true;
    });
    cmd->add_option("--policy-column", opts.policy_column, "1-based policy column");
    cmd->add_flag("--no-policy", opts.no_policy, "disable policy (pure loss)");
}

Scenario build_scenario(const CommonOpts& opts) {
    Scenario s;  // defaults mirror the published parameter table
    if (!opts.config_path.empty()) s = load_scenario_config(opts.config_path, s);
    if (!opts.matrix_path.empty()) s.matrix = ControlMatrix::load(opts.matrix_path);
    if (opts.seed_set) s.seed = opts.seed;
    if (opts.policy_column >= 0) s.policy_column = opts.policy_column;
    if (opts.no_policy) {
        s.policy_column = 0;
        s.policy.reset();
    }
    return s;
}

void print_summary(const MetricsReport& report) {
    auto blocking = blocking_probability(report);
    auto tp = throughput(report);
    std::cout << "scenario=" << report.scenario_id << '\n'
              << "arrivals=" << report.total_arrivals() << '\n'
              << "admissions=" << report.total_admissions() << '\n'
              << "blocks_full=" << report.total_blocks_full() << '\n'
              << "blocks_policy=" << report.total_blocks() - report.total_blocks_full() << '\n'
              << "blocking_prob="
              << (blocking.overall ? format_double(*blocking.overall) : "na") << '\n'
              << "throughput_fraction=" << (tp.fraction ? format_double(*tp.fraction) : "na")
              << '\n'
              << "throughput_rate=" << format_double(tp.rate) << '\n'
              << "intensity="
              << format_double(traffic_intensity(report, report.capacities,
                                                 report.holding_time))
              << '\n';
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"partitioned VoD admission-control simulator"};
    app.require_subcommand(1);

    CommonOpts run_opts;
    auto* run_cmd = app.add_subcommand("run", "single scenario -> results CSV + summary");
    add_common(run_cmd, run_opts);

    CommonOpts sweep_opts;
    std::string axis_name;
    std::string values_csv;
    unsigned jobs = 1;
    auto* sweep_cmd = app.add_subcommand("sweep", "axis sweep -> results CSV + plot series");
    add_common(sweep_cmd, sweep_opts);
    sweep_cmd->add_option("--axis", axis_name,
                          "rate-scale | population-multiplier | policy-column | seed")
        ->required();
    sweep_cmd->add_option("--values", values_csv, "comma-separated values")->required();
    sweep_cmd->add_option("--jobs", jobs, "parallel runs");

    std::size_t gen_rows = 20, gen_cols = 10;
    std::uint64_t gen_seed = 1;
    std::string gen_out = "matrix.csv";
    auto* gen_cmd = app.add_subcommand("gen-matrix", "generate a random control matrix");
    gen_cmd->add_option("--rows", gen_rows, "sections (k)");
    gen_cmd->add_option("--cols", gen_cols, "policy columns (n)");
    gen_cmd->add_option("--seed", gen_seed, "RNG seed");
    gen_cmd->add_option("--out", gen_out, "output CSV path");

    std::string validate_path;
    double tolerance = 0.05;
    auto* validate_cmd = app.add_subcommand("validate-matrix", "check a control matrix CSV");
    validate_cmd->add_option("file", validate_path, "matrix CSV path")->required();
    validate_cmd->add_option("--tolerance", tolerance, "column-sum tolerance");

    auto* analytic_cmd = app.add_subcommand("analytic", "closed-form calculators");
    analytic_cmd->require_subcommand(1);

    long eb_servers = 0;
    double eb_load = 0.0;
    auto* eb_cmd = analytic_cmd->add_subcommand("erlang-b", "loss-system blocking");
    eb_cmd->add_option("--servers", eb_servers)->required();
    eb_cmd->add_option("--load", eb_load, "offered load, erlangs")->required();

    std::string casc_avail, casc_policy;
    std::size_t casc_start = 1;
    std::string casc_scan = "wraparound", casc_reject = "continue";
    auto* casc_cmd = analytic_cmd->add_subcommand("cascade", "cascade admission probability");
    casc_cmd->add_option("--availability", casc_avail, "comma list of p(A_j)")->required();
    casc_cmd->add_option("--policy", casc_policy, "comma list of probabilities")->required();
    casc_cmd->add_option("--start", casc_start, "starting class, 1-based");
    casc_cmd->add_option("--scan", casc_scan, "wraparound | forward");
    casc_cmd->add_option("--reject", casc_reject, "continue | drop");

    ReservedBandwidthParams rb;
    std::string rb_bandwidths;
    auto* rb_cmd = analytic_cmd->add_subcommand("reserved-bw", "reserved bandwidth rate");
    rb_cmd->add_option("--links", rb.total_links, "total links J")->required();
    rb_cmd->add_option("--session-links", rb.session_links, "links in session K")->required();
    rb_cmd->add_option("--max-session-data", rb.max_session_data, "B_r, Mb")->required();
    rb_cmd->add_option("--per-link-data", rb.per_link_data, "M, Mb")->required();
    rb_cmd->add_option("--duration", rb.playback_duration, "gamma, seconds")->required();
    rb_cmd->add_option("--bandwidths", rb_bandwidths, "comma list of A_j, Mb/s");

    std::string ctmc_caps, ctmc_policy, ctmc_lambda;
    double ctmc_mu = 1.0 / 140.0;
    std::string ctmc_scan = "wraparound", ctmc_reject = "continue";
    auto* ctmc_cmd = analytic_cmd->add_subcommand("ctmc", "exact stationary blocking");
    ctmc_cmd->add_option("--capacities", ctmc_caps, "comma list of C_j")->required();
    ctmc_cmd->add_option("--policy", ctmc_policy, "comma list of probabilities")->required();
    ctmc_cmd->add_option("--lambda", ctmc_lambda, "comma list of arrival rates")->required();
    ctmc_cmd->add_option("--mu", ctmc_mu, "service rate");
    ctmc_cmd->add_option("--scan", ctmc_scan, "wraparound | forward");
    ctmc_cmd->add_option("--reject", ctmc_reject, "continue | drop");

    CommonOpts cmp_opts;
    auto* cmp_cmd = app.add_subcommand("compare", "simulator vs CTMC oracle blocking gap");
    add_common(cmp_cmd, cmp_opts);

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        if (e.get_exit_code() == 0) return app.exit(e);  // --help
        app.exit(e);
        return 2;
    }

    auto parse_cascade = [](const std::string& scan, const std::string& reject) {
        CascadeMode mode;
        if (scan == "wraparound") mode.scan = ScanMode::WrapAround;
        else if (scan == "forward") mode.scan = ScanMode::ForwardOnly;
        else throw ConfigError("scan must be wraparound or forward");
        if (reject == "continue") mode.on_policy_reject = RejectMode::Continue;
        else if (reject == "drop") mode.on_policy_reject = RejectMode::Drop;
        else throw ConfigError("reject must be continue or drop");
        return mode;
    };

    try {
        if (*run_cmd) {
            Scenario s = build_scenario(run_opts);
            MetricsReport report = run(s);
            fs::create_directories(run_opts.out_dir);
            write_results_csv({report}, run_opts.out_dir + "/results.csv");
            if (report.policy_column > 0)
                emit_plot_series({report}, FigureId::PolicyBlocking,
                                 run_opts.out_dir + "/fig5_8.dat");
            print_summary(report);
        } else if (*sweep_cmd) {
            Scenario base = build_scenario(sweep_opts);
            base.id = "sweep";
            SweepAxis axis = parse_sweep_axis(axis_name);
            auto values = parse_double_list(values_csv);
            auto reports = sweep(base, axis, values, jobs);
            fs::create_directories(sweep_opts.out_dir);
            write_results_csv(reports, sweep_opts.out_dir + "/results.csv");
            if (axis == SweepAxis::PopulationMultiplier && !reports.empty())
                emit_plot_series(reports, FigureId::ThroughputPopulation,
                                 sweep_opts.out_dir + "/fig11.dat");
            if (axis == SweepAxis::RateScale && !reports.empty())
                emit_plot_series(reports, FigureId::Intensity, sweep_opts.out_dir + "/fig12.dat");
            std::cout << "runs=" << reports.size() << '\n';
        } else if (*gen_cmd) {
            ControlMatrix m = generate_matrix(gen_rows, gen_cols, gen_seed);
            m.save(gen_out);
            std::cout << "rows=" << m.rows() << "\ncols=" << m.cols() << "\nout=" << gen_out
                      << '\n';
        } else if (*validate_cmd) {
            ControlMatrix m = ControlMatrix::load(validate_path);
            auto violations = validate_control_matrix(m, tolerance);
            for (const auto& v : violations) std::cout << v.describe() << '\n';
            if (!violations.empty()) {
                std::cout << "violations=" << violations.size() << '\n';
                return 1;
            }
            std::cout << "ok rows=" << m.rows() << " cols=" << m.cols() << '\n';
        } else if (*eb_cmd) {
            std::cout << "blocking=" << format_double(erlang_b(eb_servers, eb_load)) << '\n';
        } else if (*casc_cmd) {
            CascadeInputs inputs;
            inputs.availability = parse_double_list(casc_avail);
            inputs.policy.probs = parse_double_list(casc_policy);
            inputs.start_class = casc_start;
            inputs.mode = parse_cascade(casc_scan, casc_reject);
            auto result = cascade_admit_probability(inputs);
            for (std::size_t i = 0; i < result.partitions.size(); ++i)
                std::cout << "step_" << result.partitions[i] << '='
                          << format_double(result.step_probability[i]) << '\n';
            std::cout << "total=" << format_double(result.total) << '\n';
        } else if (*rb_cmd) {
            if (!rb_bandwidths.empty()) rb.link_bandwidths = parse_double_list(rb_bandwidths);
            auto result = reserved_bandwidth(rb);
            std::cout << "reserved_rate=" << format_double(result.rate) << '\n';
            for (std::size_t j = 0; j < result.link_feasible.size(); ++j)
                std::cout << "link_" << j + 1 << "_feasible="
                          << (result.link_feasible[j] ? "yes" : "no") << '\n';
            if (!result.link_feasible.empty())
                std::cout << "feasible=" << (result.all_feasible() ? "yes" : "no") << '\n';
        } else if (*ctmc_cmd) {
            std::vector<int> caps;
            for (double c : parse_double_list(ctmc_caps)) caps.push_back(static_cast<int>(c));
            PolicyVector policy{parse_double_list(ctmc_policy)};
            auto rates = parse_double_list(ctmc_lambda);
            auto result = ctmc_blocking(caps, policy, rates, ctmc_mu,
                                        parse_cascade(ctmc_scan, ctmc_reject));
            std::cout << "states=" << result.state_count << '\n';
            for (std::size_t i = 0; i < result.per_class_blocking.size(); ++i)
                std::cout << "blocking_class_" << i + 1 << '='
                          << format_double(result.per_class_blocking[i]) << '\n';
            std::cout << "blocking_overall=" << format_double(result.overall_blocking) << '\n';
        } else if (*cmp_cmd) {
            Scenario s = build_scenario(cmp_opts);
            s.holding_distribution = HoldingDistribution::Exponential;
            MetricsReport report = run(s);
            auto policy = s.resolved_policy();
            PolicyVector pv;
            if (policy) pv = *policy;
            else pv.probs.assign(s.capacities.size(), 1.0);
            std::vector<double> rates(s.capacities.size());
            for (std::size_t i = 0; i < rates.size(); ++i) rates[i] = s.effective_rate(i);
            auto oracle = ctmc_blocking(s.capacities, pv, rates, 1.0 / s.holding_time,
                                        s.cascade);
            auto sim = blocking_probability(report);
            double sim_overall = sim.overall.value_or(0.0);
            std::cout << "sim_blocking=" << format_double(sim_overall) << '\n'
                      << "ctmc_blocking=" << format_double(oracle.overall_blocking) << '\n'
                      << "abs_gap="
                      << format_double(std::abs(sim_overall - oracle.overall_blocking)) << '\n';
        }
    } catch (const ConfigError& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 1;
    }
    return 0;
}
