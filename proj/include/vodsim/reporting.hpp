#ifndef VODSIM_REPORTING_HPP
#define VODSIM_REPORTING_HPP

#include <string>
#include <utility>
#include <vector>

#include "vodsim/metrics.hpp"

namespace vodsim {

inline constexpr const char* kResultsCsvHeader =
    "scenario_id,policy_column,rate_scale,population_multiplier,seed,"
    "arrivals,admissions,blocks_full,blocks_policy,"
    "blocking_prob,throughput_fraction,throughput_rate,intensity";

std::string results_csv(const std::vector<MetricsReport>& reports);

// Writes the results CSV; returns the number of data rows.
std::size_t write_results_csv(const std::vector<MetricsReport>& reports,
                              const std::string& destination);

enum class FigureId {
    PolicyBlocking,       // F5-F8: x = cluster rate, y = per-class blocking
    PolicyVsNoPolicy,     // F9-F10: two series, capacity blocking over the ladder
    ThroughputPopulation, // F11: x = population multiplier, y = throughput fraction
    Intensity,            // F12: x = rate scale, y = traffic intensity
};

FigureId parse_figure_id(const std::string& name);
std::string figure_name(FigureId id);

struct PlotSeries {
    std::string figure_id;
    std::string x_label;
    std::string y_label;
    std::vector<std::pair<double, double>> points;  // ordered by x ascending
};

// Emits one two-column plot file per series ('#'-prefixed header lines).
// Single-series figures write exactly `destination`; PolicyVsNoPolicy writes
// destination + ".policy" / ".nopolicy".
std::vector<PlotSeries> emit_plot_series(const std::vector<MetricsReport>& reports,
                                         FigureId figure, const std::string& destination);

std::string plot_series_text(const PlotSeries& series);
PlotSeries parse_plot_series(const std::string& text);

}  // namespace vodsim

#endif
