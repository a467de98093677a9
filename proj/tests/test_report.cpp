#include <catch2/catch_amalgamated.hpp>

#include <cstdio>
#include <fstream>
#include <sstream>
#include <string>
#include <vector>

#include "relaysec/report.hpp"

using namespace relaysec;

namespace {

int count_fields(const std::string& line) {
    int fields = 1;
    for (char c : line) fields += c == ',';
    return fields;
}

}  // namespace

TEST_CASE("csv header has the fixed 30-column schema") {
    CHECK(count_fields(csv_header()) == 30);
    CHECK(csv_header().rfind("n,m,k,tau,", 0) == 0);
    CHECK(csv_header().find("feasible,diagnostics") != std::string::npos);
}

TEST_CASE("csv rows align with the header") {
    SystemParams p;
    SimConfig cfg;
    const BoundsReport bounds = feasibility(p);
    const std::string bounds_row = format_csv_row(p, cfg, nullptr, bounds);
    CHECK(count_fields(bounds_row) == 30);

    SimResult sim;
    sim.selection_counts.assign(p.n, 1);
    sim.p_out_t_hat = 0.123456789123;
    const std::string sim_row = format_csv_row(p, cfg, &sim, bounds);
    CHECK(count_fields(sim_row) == 30);
    CHECK(sim_row.find("0.123456789") != std::string::npos);
    CHECK(sim_row.find("0.1234567891") == std::string::npos);  // 9 significant digits
}

TEST_CASE("number format uses 9 significant digits") {
    CHECK(format_number(1.0) == "1");
    CHECK(format_number(0.25) == "0.25");
    CHECK(format_number(1.0 / 3.0) == "0.333333333");
}

TEST_CASE("sweep descriptor parsing") {
    const SweepSpec range = parse_sweep("k:1:5:1");
    CHECK(range.param == "k");
    CHECK(range.values == std::vector<double>{1, 2, 3, 4, 5});

    const SweepSpec list = parse_sweep("tau:0,0.5,1.25");
    CHECK(list.param == "tau");
    CHECK(list.values == std::vector<double>{0, 0.5, 1.25});

    CHECK_THROWS_AS(parse_sweep("q:1:2:1"), std::invalid_argument);
    CHECK_THROWS_AS(parse_sweep("k:1:5"), std::invalid_argument);
    CHECK_THROWS_AS(parse_sweep("k:5:1:1"), std::invalid_argument);  // zero points
}

TEST_CASE("csv append writes header once") {
    const std::string path = "test_report_append.csv";
    std::remove(path.c_str());
    SystemParams p;
    SimConfig cfg;
    const BoundsReport bounds = feasibility(p);
    const std::string row = format_csv_row(p, cfg, nullptr, bounds);
    append_csv_rows(path, {row});
    append_csv_rows(path, {row});
    std::ifstream in(path);
    std::string line;
    std::vector<std::string> lines;
    while (std::getline(in, line)) lines.push_back(line);
    REQUIRE(lines.size() == 3);
    CHECK(lines[0] == csv_header());
    CHECK(lines[1] == lines[2]);
    std::remove(path.c_str());
}

TEST_CASE("svg chart writes polylines for each series") {
    const std::string path = "test_report_chart.svg";
    std::remove(path.c_str());
    const std::vector<double> xs{1, 2, 3};
    write_svg_chart(path, "k", xs,
                    {{"p_out_t_hat", "#1f77b4", {0.1, 0.2, 0.3}},
                     {"jain_index", "#2ca02c", {0.5, 0.7, 0.9}}});
    std::ifstream in(path);
    std::stringstream ss;
    ss << in.rdbuf();
    const std::string svg = ss.str();
    CHECK(svg.find("<svg") != std::string::npos);
    CHECK(svg.find("version=\"1.1\"") != std::string::npos);
    CHECK(svg.find("p_out_t_hat") != std::string::npos);
    CHECK(svg.find("jain_index") != std::string::npos);
    int polylines = 0;
    for (std::size_t pos = svg.find("<polyline"); pos != std::string::npos;
         pos = svg.find("<polyline", pos + 1)) {
        ++polylines;
    }
    CHECK(polylines == 2);
    std::remove(path.c_str());
}

TEST_CASE("svg writer rejects unwritable paths") {
    CHECK_THROWS_AS(write_svg_chart("/nonexistent-dir/x.svg", "k", {1.0}, {}),
                    IoError);
}
