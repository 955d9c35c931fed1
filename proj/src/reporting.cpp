#include "vodsim/reporting.hpp"

#include <algorithm>
#include <charconv>
#include <fstream>
#include <sstream>

#include "vodsim/util.hpp"

namespace vodsim {

std::string results_csv(const std::vector<MetricsReport>& reports) {
    std::string out = kResultsCsvHeader;
    out += '\n';
    for (const auto& r : reports) {
        if (!r.conservation_holds())
            throw SimulationFault("report '" + r.scenario_id + "' fails conservation");
        auto blocking = blocking_probability(r);
        auto tp = throughput(r);
        double intensity = traffic_intensity(r, r.capacities, r.holding_time);
        out += r.scenario_id;
        out += ',' + std::to_string(r.policy_column);
        out += ',' + format_double(r.rate_scale);
        out += ',' + format_double(r.population_multiplier);
        out += ',' + std::to_string(r.seed);
        out += ',' + std::to_string(r.total_arrivals());
        out += ',' + std::to_string(r.total_admissions());
        out += ',' + std::to_string(r.total_blocks_full());
        out += ',' + std::to_string(r.total_blocks() - r.total_blocks_full());
        out += ',' + (blocking.overall ? format_double(*blocking.overall) : std::string("na"));
        out += ',' + (tp.fraction ? format_double(*tp.fraction) : std::string("na"));
        out += ',' + format_double(tp.rate);
        out += ',' + format_double(intensity);
        out += '\n';
    }
    return out;
}

std::size_t write_results_csv(const std::vector<MetricsReport>& reports,
                              const std::string& destination) {
    std::ofstream out(destination, std::ios::binary);
    if (!out) throw ConfigError("cannot write results file: " + destination);
    out << results_csv(reports);
    if (!out) throw ConfigError("write failed: " + destination);
    return reports.size();
}

FigureId parse_figure_id(const std::string& name) {
    if (name == "F5_F8_policy_blocking") return FigureId::PolicyBlocking;
    if (name == "F9_F10_policy_vs_nopolicy") return FigureId::PolicyVsNoPolicy;
    if (name == "F11_throughput_population") return FigureId::ThroughputPopulation;
    if (name == "F12_intensity") return FigureId::Intensity;
    throw ConfigError("unknown figure id: " + name);
}

std::string figure_name(FigureId id) {
    switch (id) {
        case FigureId::PolicyBlocking: return "F5_F8_policy_blocking";
        case FigureId::PolicyVsNoPolicy: return "F9_F10_policy_vs_nopolicy";
        case FigureId::ThroughputPopulation: return "F11_throughput_population";
        case FigureId::Intensity: return "F12_intensity";
    }
    throw ConfigError("unknown figure id");
}

std::string plot_series_text(const PlotSeries& series) {
    std::string out;
    out += "# figure: " + series.figure_id + '\n';
    out += "# x: " + series.x_label + '\n';
    out += "# y: " + series.y_label + '\n';
    for (const auto& [x, y] : series.points)
        out += format_double(x) + ' ' + format_double(y) + '\n';
    return out;
}

PlotSeries parse_plot_series(const std::string& text) {
    PlotSeries series;
    std::istringstream in(text);
    std::string line;
    auto header_value = [](const std::string& l) {
        std::size_t colon = l.find(':');
        return colon == std::string::npos ? std::string() : l.substr(colon + 2);
    };
    while (std::getline(in, line)) {
        if (line.empty()) continue;
        if (line[0] == '#') {
            if (line.rfind("# figure:", 0) == 0) series.figure_id = header_value(line);
            else if (line.rfind("# x:", 0) == 0) series.x_label = header_value(line);
            else if (line.rfind("# y:", 0) == 0) series.y_label = header_value(line);
            continue;
        }
        std::size_t space = line.find(' ');
        if (space == std::string::npos) throw ConfigError("bad plot line: " + line);
        double x, y;
        auto r1 = std::from_chars(line.data(), line.data() + space, x);
        auto r2 = std::from_chars(line.data() + space + 1, line.data() + line.size(), y);
        if (r1.ec != std::errc() || r2.ec != std::errc())
            throw ConfigError("bad plot line: " + line);
        series.points.emplace_back(x, y);
    }
    return series;
}

namespace {

void write_series(const PlotSeries& series, const std::string& path) {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw ConfigError("cannot write plot file: " + path);
    out << plot_series_text(series);
}

// Per-class series over the cluster rate ladder. Capacity-only blocking is
// used for the policy/no-policy comparison so that policy thinning itself is
// not counted as loss.
PlotSeries ladder_blocking_series(const MetricsReport& report, FigureId fig,
                                  bool capacity_only, const std::string& y_label) {
    auto blocking = capacity_only ? capacity_blocking_probability(report)
                                  : blocking_probability(report);
    PlotSeries series;
    series.figure_id = figure_name(fig);
    series.x_label = "cluster arrival rate [Mb/s]";
    series.y_label = y_label;
    for (std::size_t i = 0; i < report.cluster_rates.size(); ++i)
        if (blocking.per_class[i])
            series.points.emplace_back(report.cluster_rates[i], *blocking.per_class[i]);
    std::sort(series.points.begin(), series.points.end());
    if (series.points.empty()) throw ConfigError("report has no arrivals to plot");
    return series;
}

}  // namespace

std::vector<PlotSeries> emit_plot_series(const std::vector<MetricsReport>& reports,
                                         FigureId figure, const std::string& destination) {
    if (reports.empty()) throw ConfigError("no reports to plot");
    std::vector<PlotSeries> out;

    switch (figure) {
        case FigureId::PolicyBlocking: {
            const MetricsReport* with_policy = nullptr;
            for (const auto& r : reports)
                if (r.policy_column > 0) { with_policy = &r; break; }
            if (!with_policy)
                throw ConfigError("figure F5-F8 needs a run with a policy column");
            out.push_back(ladder_blocking_series(*with_policy, figure, false,
                                                 "blocking probability"));
            write_series(out.back(), destination);
            break;
        }
        case FigureId::PolicyVsNoPolicy: {
            const MetricsReport* with_policy = nullptr;
            const MetricsReport* no_policy = nullptr;
            for (const auto& r : reports) {
                if (r.policy_column > 0 && !with_policy) with_policy = &r;
                if (r.policy_column == 0 && !no_policy) no_policy = &r;
            }
            if (!with_policy) throw ConfigError("figure F9-F10 needs a policy run");
            if (!no_policy) throw ConfigError("figure F9-F10 needs a no-policy run");
            out.push_back(ladder_blocking_series(*with_policy, figure, true,
                                                 "capacity blocking probability"));
            out.push_back(ladder_blocking_series(*no_policy, figure, true,
                                                 "capacity blocking probability"));
            write_series(out[0], destination + ".policy");
            write_series(out[1], destination + ".nopolicy");
            break;
        }
        case FigureId::ThroughputPopulation: {
            PlotSeries series;
            series.figure_id = figure_name(figure);
            series.x_label = "population multiplier";
            series.y_label = "throughput fraction";
            for (const auto& r : reports) {
                auto tp = throughput(r);
                if (!tp.fraction)
                    throw ConfigError("figure F11 needs runs with arrivals (population " +
                                      format_double(r.population_multiplier) + " has none)");
                series.points.emplace_back(r.population_multiplier, *tp.fraction);
            }
            std::sort(series.points.begin(), series.points.end());
            out.push_back(std::move(series));
            write_series(out.back(), destination);
            break;
        }
        case FigureId::Intensity: {
            PlotSeries series;
            series.figure_id = figure_name(figure);
            series.x_label = "rate scale";
            series.y_label = "traffic intensity [erlang/port]";
            for (const auto& r : reports)
                series.points.emplace_back(
                    r.rate_scale, traffic_intensity(r, r.capacities, r.holding_time));
            std::sort(series.points.begin(), series.points.end());
            out.push_back(std::move(series));
            write_series(out.back(), destination);
            break;
        }
    }
    return out;
}

}  // namespace vodsim
