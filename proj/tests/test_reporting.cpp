#include <doctest.h>

#include <filesystem>
#include <fstream>
#include <sstream>

#include "vodsim/engine.hpp"
#include "vodsim/reporting.hpp"
#include "vodsim/util.hpp"

using namespace vodsim;
namespace fs = std::filesystem;

namespace {

std::string read_file(const fs::path& path) {
    std::ifstream in(path, std::ios::binary);
    REQUIRE(in.good());
    std::ostringstream buf;
    buf << in.rdbuf();
    return buf.str();
}

fs::path temp_dir() {
    auto dir = fs::temp_directory_path() / "vodsim_reporting_test";
    fs::create_directories(dir);
    return dir;
}

Scenario tiny() {
    Scenario s;
    s.capacities = {3, 3};
    s.ladder = cluster_rates(2.0, 6.0, 2);
    s.holding_time = 5.0;
    s.sim_time = 500.0;
    s.seed = 4;
    return s;
}

}  // namespace

TEST_CASE("empty report list writes a header-only file") {
    auto path = temp_dir() / "empty.csv";
    CHECK(write_results_csv({}, path.string()) == 0);
    CHECK(read_file(path) == std::string(kResultsCsvHeader) + "\n");
}

TEST_CASE("results csv has one row per report, in order") {
    auto reports = sweep(tiny(), SweepAxis::RateScale, {0.5, 1.0, 2.0});
    auto path = temp_dir() / "sweep.csv";
    CHECK(write_results_csv(reports, path.string()) == 3);
    std::string text = read_file(path);
    CHECK(std::count(text.begin(), text.end(), '\n') == 4);
    CHECK(text.find("sweep") == std::string::npos);  // ids are run-1..run-3
    CHECK(text.find("run-1") < text.find("run-2"));
    CHECK(text.find("run-2") < text.find("run-3"));
}

TEST_CASE("identical reports serialize to identical bytes") {
    auto report = run(tiny());
    auto p1 = temp_dir() / "a.csv";
    auto p2 = temp_dir() / "b.csv";
    write_results_csv({report}, p1.string());
    write_results_csv({report}, p2.string());
    CHECK(read_file(p1) == read_file(p2));
}

TEST_CASE("unwritable destination reports the path") {
    CHECK_THROWS_WITH_AS(write_results_csv({}, "/nonexistent-dir/x.csv"),
                         doctest::Contains("/nonexistent-dir/x.csv"), ConfigError);
}

TEST_CASE("plot series round-trips through its text form") {
    PlotSeries series;
    series.figure_id = figure_name(FigureId::Intensity);
    series.x_label = "rate scale";
    series.y_label = "intensity";
    series.points = {{0.5, 0.125}, {1.0, 0.25}, {2.0, 0.5}};
    auto parsed = parse_plot_series(plot_series_text(series));
    CHECK(parsed.figure_id == series.figure_id);
    CHECK(parsed.x_label == series.x_label);
    CHECK(parsed.y_label == series.y_label);
    CHECK(parsed.points == series.points);
}

TEST_CASE("intensity figure is strictly increasing over a rate sweep") {
    auto reports = sweep(tiny(), SweepAxis::RateScale, {0.5, 1.0, 1.5, 2.0});
    auto path = temp_dir() / "fig12.dat";
    auto series = emit_plot_series(reports, FigureId::Intensity, path.string());
    REQUIRE(series.size() == 1);
    REQUIRE(series[0].points.size() == 4);
    for (std::size_t i = 1; i < series[0].points.size(); ++i)
        CHECK(series[0].points[i].second > series[0].points[i - 1].second);
    // File round-trip reproduces the in-memory points.
    CHECK(parse_plot_series(read_file(path)).points == series[0].points);
}

TEST_CASE("throughput-vs-population figure uses one point per report") {
    auto reports = sweep(tiny(), SweepAxis::PopulationMultiplier, {1.0, 4.0});
    auto path = temp_dir() / "fig11.dat";
    auto series = emit_plot_series(reports, FigureId::ThroughputPopulation, path.string());
    REQUIRE(series.size() == 1);
    REQUIRE(series[0].points.size() == 2);
    CHECK(series[0].points[0].first == 1.0);
    CHECK(series[0].points[1].first == 4.0);
}

TEST_CASE("policy comparison figure needs both runs") {
    Scenario s = tiny();
    auto no_policy = run(s);
    s.policy = PolicyVector{{0.5, 0.5}};
    s.policy_column = 1;
    s.matrix = ControlMatrix(2, 1, {0.5, 0.5});
    s.policy.reset();
    auto with_policy = run(s);

    auto base = (temp_dir() / "fig9.dat").string();
    auto series = emit_plot_series({with_policy, no_policy},
                                   FigureId::PolicyVsNoPolicy, base);
    REQUIRE(series.size() == 2);
    CHECK(fs::exists(base + ".policy"));
    CHECK(fs::exists(base + ".nopolicy"));

    CHECK_THROWS_AS(emit_plot_series({no_policy}, FigureId::PolicyVsNoPolicy, base),
                    ConfigError);
    CHECK_THROWS_AS(emit_plot_series({}, FigureId::PolicyVsNoPolicy, base), ConfigError);
}

TEST_CASE("plot files contain no timestamps: same reports, same bytes") {
    auto reports = sweep(tiny(), SweepAxis::RateScale, {1.0, 2.0});
    auto p1 = temp_dir() / "d1.dat";
    auto p2 = temp_dir() / "d2.dat";
    emit_plot_series(reports, FigureId::Intensity, p1.string());
    emit_plot_series(reports, FigureId::Intensity, p2.string());
    CHECK(read_file(p1) == read_file(p2));
}

TEST_CASE("figure id names parse back") {
    for (auto id : {FigureId::PolicyBlocking, FigureId::PolicyVsNoPolicy,
                    FigureId::ThroughputPopulation, FigureId::Intensity})
        CHECK(parse_figure_id(figure_name(id)) == id);
    CHECK_THROWS_AS(parse_figure_id("F99"), ConfigError);
}
