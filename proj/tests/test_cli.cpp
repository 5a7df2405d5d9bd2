// Drives the edgecli binary end to end: exit codes, output formats,
// determinism, and the bench CSV.

#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <filesystem>
#include <map>
#include <sstream>
#include <string>
#include <vector>

#include "pgm.hpp"
#include "subprocess.hpp"
#include "test_support.hpp"

namespace fs = std::filesystem;
using testsupport::run_command;

namespace {

const std::string cli = EDGECLI_PATH;

struct Workspace {
    fs::path dir;
    fs::path four_band;
    fs::path constant;
    fs::path junk;

    Workspace() {
        dir = testsupport::make_temp_dir("entroedge_cli");
        four_band = dir / "four_band.pgm";
        entroedge::write_pgm_file(testsupport::make_four_band_image({40, 90, 160, 220}),
                                  four_band);
        constant = dir / "constant.pgm";
        entroedge::write_pgm_file(entroedge::make_gray(16, 16, 77), constant);
        junk = dir / "junk.pgm";
        testsupport::spit(junk, "P5\n4 4\n255\nxx");
    }
};

Workspace& ws() {
    static Workspace w;
    return w;
}

std::map<std::string, std::string> parse_key_values(const std::string& text) {
    std::map<std::string, std::string> out;
    std::istringstream lines(text);
    std::string line;
    while (std::getline(lines, line)) {
        const auto eq = line.find('=');
        if (eq != std::string::npos)
            out[line.substr(0, eq)] = line.substr(eq + 1);
    }
    return out;
}

std::vector<std::vector<std::string>> parse_csv(const fs::path& path) {
    std::vector<std::vector<std::string>> rows;
    const auto bytes = testsupport::slurp(path);
    std::istringstream lines(std::string(bytes.begin(), bytes.end()));
    std::string line;
    while (std::getline(lines, line)) {
        if (line.empty() || line[0] == '#')
            continue;
        std::vector<std::string> fields;
        std::istringstream cells(line);
        std::string cell;
        while (std::getline(cells, cell, ','))
            fields.push_back(cell);
        rows.push_back(fields);
    }
    return rows;
}

} // namespace

TEST_CASE("usage errors exit 1") {
    CHECK(run_command(cli).exit_code == 1);
    CHECK(run_command(cli + " nonsense").exit_code == 1);
    const auto out = ws().dir / "unused.pgm";
    CHECK(run_command(cli + " baseline " + ws().four_band.string() + " " + out.string() +
                      " --method canny")
              .exit_code == 1);
    CHECK(run_command(cli + " threshold " + ws().four_band.string() + " --q 1.5")
              .exit_code == 1);
    CHECK(run_command(cli + " threshold " + ws().four_band.string() + " --q 0")
              .exit_code == 1);
    CHECK(run_command(cli + " --help").exit_code == 0);
}

TEST_CASE("missing input exits 2, malformed input exits 3, degenerate exits 4") {
    CHECK(run_command(cli + " threshold " + (ws().dir / "missing.pgm").string())
              .exit_code == 2);
    CHECK(run_command(cli + " threshold " + ws().junk.string()).exit_code == 3);
    CHECK(run_command(cli + " threshold " + ws().constant.string()).exit_code == 4);
}

TEST_CASE("unwritable output exits 5") {
    const std::string out = (ws().dir / "no_such_dir" / "out.pgm").string();
    CHECK(run_command(cli + " edges " + ws().four_band.string() + " " + out).exit_code == 5);
    CHECK(run_command(cli + " bench " + ws().four_band.string() + " --runs 1 --csv " + out)
              .exit_code == 5);
}

TEST_CASE("threshold prints the triple as key=value lines") {
    const auto result = run_command(cli + " threshold " + ws().four_band.string());
    REQUIRE(result.exit_code == 0);
    const auto kv = parse_key_values(result.output);
    CHECK(kv.at("t1") == "90");
    CHECK(kv.at("t2") == "40");
    CHECK(kv.at("t3") == "160");
    CHECK(kv.at("q") == "0.5");
    CHECK(kv.count("crit1") == 1);
    CHECK(kv.count("crit2") == 1);
    CHECK(kv.count("crit3") == 1);
}

TEST_CASE("q above one needs the escape hatch") {
    const std::string cmd = cli + " threshold " + ws().four_band.string() + " --q 2.0";
    CHECK(run_command(cmd).exit_code == 1);
    CHECK(run_command(cmd + " --allow-any-q").exit_code == 0);
}

TEST_CASE("edges writes a deterministic same-size map") {
    const auto out1 = ws().dir / "edges1.pgm";
    const auto out2 = ws().dir / "edges2.pgm";
    REQUIRE(run_command(cli + " edges " + ws().four_band.string() + " " + out1.string())
                .exit_code == 0);
    REQUIRE(run_command(cli + " edges " + ws().four_band.string() + " " + out2.string())
                .exit_code == 0);
    CHECK(testsupport::slurp(out1) == testsupport::slurp(out2));

    const entroedge::GrayImage img = entroedge::read_pgm_file(out1);
    CHECK(img.width == 64);
    CHECK(img.height == 64);
    int whites = 0;
    for (auto px : img.pixels) {
        CHECK((px == 0 || px == 255));
        whites += px == 255;
    }
    CHECK(whites > 0);
    for (int col = 0; col < img.width; ++col) {
        CHECK(img.at(0, col) == 0);
        CHECK(img.at(img.height - 1, col) == 0);
    }
}

TEST_CASE("baseline subcommand writes maps for both methods") {
    const auto sobel_out = ws().dir / "sobel.pgm";
    REQUIRE(run_command(cli + " baseline " + ws().constant.string() + " " +
                        sobel_out.string() + " --method sobel")
                .exit_code == 0);
    const entroedge::GrayImage sobel = entroedge::read_pgm_file(sobel_out);
    for (auto px : sobel.pixels)
        CHECK(px == 0);

    const auto log_out = ws().dir / "log.pgm";
    REQUIRE(run_command(cli + " baseline " + ws().four_band.string() + " " +
                        log_out.string() + " --method log --sigma 1.0")
                .exit_code == 0);
    const entroedge::GrayImage log_img = entroedge::read_pgm_file(log_out);
    int whites = 0;
    for (auto px : log_img.pixels)
        whites += px == 255;
    CHECK(whites > 0);
}

TEST_CASE("bench emits one row per image and method") {
    const auto csv = ws().dir / "bench.csv";
    const auto result = run_command(cli + " bench " + ws().four_band.string() +
                                    " --runs 2 --csv " + csv.string());
    REQUIRE(result.exit_code == 0);
    CHECK(result.output.find("mean_seconds") != std::string::npos);

    const auto rows = parse_csv(csv);
    REQUIRE(rows.size() == 4); // header + hybrid + sobel + log
    CHECK(rows[0] == std::vector<std::string>{"method", "image_id", "width", "height",
                                              "runs", "mean_seconds"});
    CHECK(rows[1][0] == "hybrid");
    CHECK(rows[2][0] == "sobel");
    CHECK(rows[3][0] == "log");
    for (std::size_t i = 1; i < rows.size(); ++i) {
        CHECK(rows[i][1] == "four_band_1");
        CHECK(rows[i][2] == "64");
        CHECK(rows[i][3] == "64");
        CHECK(rows[i][4] == "2");
        CHECK(std::stod(rows[i][5]) > 0.0);
    }

    const auto bytes = testsupport::slurp(csv);
    const std::string text(bytes.begin(), bytes.end());
    CHECK(text.rfind("# boundary=compute-only\n", 0) == 0);
}

TEST_CASE("bench gives duplicated inputs distinct ids") {
    const auto csv = ws().dir / "bench_dup.csv";
    REQUIRE(run_command(cli + " bench " + ws().four_band.string() + " " +
                        ws().four_band.string() + " --runs 1 --csv " + csv.string())
                .exit_code == 0);
    const auto rows = parse_csv(csv);
    REQUIRE(rows.size() == 7); // header + 2 images x 3 methods
    CHECK(rows[1][1] == "four_band_1");
    CHECK(rows[4][1] == "four_band_2");
}

TEST_CASE("bench records failures as error rows and exits nonzero") {
    const auto csv = ws().dir / "bench_err.csv";
    const auto result = run_command(cli + " bench " + ws().constant.string() + " " +
                                    ws().four_band.string() + " --runs 1 --csv " +
                                    csv.string());
    CHECK(result.exit_code == 4); // hybrid cannot threshold a constant image
    const auto rows = parse_csv(csv);
    REQUIRE(rows.size() == 7);
    CHECK(rows[1][0] == "error"); // hybrid on the constant image
    CHECK(rows[2][0] == "sobel"); // baselines still run
    CHECK(rows[3][0] == "log");
    CHECK(rows[4][0] == "hybrid");
}

TEST_CASE("bench phase columns sum to the mean") {
    const auto csv = ws().dir / "bench_phases.csv";
    REQUIRE(run_command(cli + " bench " + ws().four_band.string() +
                        " --runs 3 --phases --csv " + csv.string())
                .exit_code == 0);
    const auto rows = parse_csv(csv);
    REQUIRE(rows.size() == 4);
    REQUIRE(rows[0].size() == 10);
    CHECK(rows[0][6] == "histogram_seconds");
    CHECK(rows[0][9] == "detect_seconds");
    const double mean = std::stod(rows[1][5]);
    const double phases = std::stod(rows[1][6]) + std::stod(rows[1][7]) +
                          std::stod(rows[1][8]) + std::stod(rows[1][9]);
    CHECK(phases <= mean * 1.05 + 1e-9);
}
