// edgecli — command-line front end of the entroedge shared library.
//
// Subcommands: threshold, edges, baseline, bench. Exit codes:
//   0 success, 1 usage error, 2 I/O failure on input, 3 PGM parse failure,
//   4 degenerate input (too few distinct gray levels), 5 unwritable output.

#include "entroedge.h"

#include "CLI11.hpp"

#include <chrono>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <memory>
#include <string>
#include <vector>

namespace {

constexpr int kExitUsage = 1;
constexpr int kExitIo = 2;
constexpr int kExitParse = 3;
constexpr int kExitDegenerate = 4;
constexpr int kExitUnwritable = 5;

using ImagePtr = std::unique_ptr<ee_image, decltype(&ee_image_destroy)>;
using BitmapPtr = std::unique_ptr<ee_bitmap, decltype(&ee_bitmap_destroy)>;
using HistogramPtr = std::unique_ptr<ee_histogram, decltype(&ee_histogram_destroy)>;

int status_to_exit(ee_status status) {
    switch (status) {
        case EE_OK: return 0;
        case EE_ERROR_IO: return kExitIo;
        case EE_ERROR_PARSE: return kExitParse;
        case EE_ERROR_DEGENERATE: return kExitDegenerate;
        case EE_ERROR_INVALID_ARGUMENT: return kExitUsage;
        default: return kExitIo;
    }
}

int report(ee_status status) {
    std::fprintf(stderr, "error: %s\n", ee_last_error());
    return status_to_exit(status);
}

// Loads a PGM or returns a nonzero exit code.
int load_image(const std::string& path, ImagePtr& img) {
    ee_image* raw = nullptr;
    const ee_status status = ee_image_read_pgm_file(path.c_str(), &raw);
    if (status != EE_OK)
        return report(status);
    img = ImagePtr(raw, &ee_image_destroy);
    return 0;
}

int save_image(const ee_image* img, const std::string& path) {
    if (ee_image_write_pgm_file(img, path.c_str()) != EE_OK) {
        std::fprintf(stderr, "error: %s\n", ee_last_error());
        return kExitUnwritable;
    }
    return 0;
}

int check_q(double q, bool allow_any) {
    if (q <= 0.0 || q == 1.0) {
        std::fprintf(stderr, "error: q must be positive and not equal to 1\n");
        return kExitUsage;
    }
    if (!allow_any && q >= 1.0) {
        std::fprintf(stderr,
                     "error: q is restricted to (0,1); pass --allow-any-q to override\n");
        return kExitUsage;
    }
    return 0;
}

int run_threshold(const std::string& input, double q, bool allow_any) {
    if (int rc = check_q(q, allow_any))
        return rc;
    ImagePtr img(nullptr, &ee_image_destroy);
    if (int rc = load_image(input, img))
        return rc;

    ee_threshold_set ts;
    if (ee_status s = ee_hybrid_thresholds(img.get(), q, &ts); s != EE_OK)
        return report(s);

    std::printf("t1=%d\n", ts.t1);
    std::printf("t2=%d\n", ts.t2);
    std::printf("t3=%d\n", ts.t3);
    std::printf("q=%.12g\n", ts.q);
    std::printf("crit1=%.12g\n", ts.crit1);
    std::printf("crit2=%.12g\n", ts.crit2);
    std::printf("crit3=%.12g\n", ts.crit3);
    return 0;
}

int run_edges(const std::string& input, const std::string& output, double q,
              bool allow_any) {
    if (int rc = check_q(q, allow_any))
        return rc;
    ImagePtr img(nullptr, &ee_image_destroy);
    if (int rc = load_image(input, img))
        return rc;

    ee_bitmap* raw_edges = nullptr;
    if (ee_status s = ee_detect_hybrid(img.get(), q, nullptr, &raw_edges); s != EE_OK)
        return report(s);
    BitmapPtr edges(raw_edges, &ee_bitmap_destroy);

    ee_image* raw_rendered = nullptr;
    if (ee_status s = ee_render_edges(edges.get(), &raw_rendered); s != EE_OK)
        return report(s);
    ImagePtr rendered(raw_rendered, &ee_image_destroy);

    return save_image(rendered.get(), output);
}

int run_baseline(const std::string& input, const std::string& output,
                 const std::string& method, double scale, double sigma,
                 double zc_thresh) {
    ImagePtr img(nullptr, &ee_image_destroy);
    if (int rc = load_image(input, img))
        return rc;

    ee_bitmap* raw_edges = nullptr;
    ee_status s;
    if (method == "sobel")
        s = ee_sobel_edges(img.get(), scale, &raw_edges);
    else
        s = ee_log_edges(img.get(), sigma, zc_thresh, &raw_edges);
    if (s != EE_OK)
        return report(s);
    BitmapPtr edges(raw_edges, &ee_bitmap_destroy);

    ee_image* raw_rendered = nullptr;
    if (ee_status st = ee_render_edges(edges.get(), &raw_rendered); st != EE_OK)
        return report(st);
    ImagePtr rendered(raw_rendered, &ee_image_destroy);

    return save_image(rendered.get(), output);
}

// ---- bench ----

struct BenchRow {
    std::string method;
    std::string image_id;
    int width = 0;
    int height = 0;
    int runs = 0;
    double mean_seconds = 0.0;
    double phase_histogram = 0.0;
    double phase_thresholds = 0.0;
    double phase_binarize = 0.0;
    double phase_detect = 0.0;
};

double seconds_since(std::chrono::steady_clock::time_point start) {
    return std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
}

std::string sanitize_id(const std::string& path, std::size_t ordinal) {
    std::string stem = std::filesystem::path(path).stem().string();
    std::string id;
    for (char c : stem) {
        if (c >= 'A' && c <= 'Z')
            id.push_back(static_cast<char>(c - 'A' + 'a'));
        else if ((c >= 'a' && c <= 'z') || (c >= '0' && c <= '9') || c == '_')
            id.push_back(c);
        else
            id.push_back('_');
    }
    if (id.empty())
        id = "image";
    return id + "_" + std::to_string(ordinal);
}

// One timed hybrid run, phase by phase; the phase deltas sum to the total.
ee_status time_hybrid_once(const ee_image* img, double q, double phases[4], double* total) {
    const auto t0 = std::chrono::steady_clock::now();

    ee_histogram* hist = nullptr;
    if (ee_status s = ee_histogram_build(img, &hist); s != EE_OK)
        return s;
    HistogramPtr hist_guard(hist, &ee_histogram_destroy);
    const auto t1 = std::chrono::steady_clock::now();

    ee_threshold_set ts;
    if (ee_status s = ee_hybrid_thresholds_of(hist, q, &ts); s != EE_OK)
        return s;
    const auto t2 = std::chrono::steady_clock::now();

    ee_bitmap* bin = nullptr;
    if (ee_status s = ee_binarize_hybrid(img, &ts, &bin); s != EE_OK)
        return s;
    BitmapPtr bin_guard(bin, &ee_bitmap_destroy);
    const auto t3 = std::chrono::steady_clock::now();

    ee_bitmap* edges = nullptr;
    if (ee_status s = ee_detect_edges(bin, &edges); s != EE_OK)
        return s;
    ee_bitmap_destroy(edges);
    const auto t4 = std::chrono::steady_clock::now();

    using dsec = std::chrono::duration<double>;
    phases[0] += dsec(t1 - t0).count();
    phases[1] += dsec(t2 - t1).count();
    phases[2] += dsec(t3 - t2).count();
    phases[3] += dsec(t4 - t3).count();
    *total += dsec(t4 - t0).count();
    return EE_OK;
}

ee_status time_method(const ee_image* img, const std::string& method, double q,
                      int runs, bool verbose, BenchRow& row) {
    double phases[4] = {0, 0, 0, 0};
    double total = 0.0;
    for (int run = 0; run <= runs; ++run) {
        const bool warmup = (run == 0);
        double ignored_phases[4] = {0, 0, 0, 0};
        double elapsed = 0.0;
        ee_status s = EE_OK;
        if (method == "hybrid") {
            s = time_hybrid_once(img, q, warmup ? ignored_phases : phases, &elapsed);
        } else {
            const auto start = std::chrono::steady_clock::now();
            ee_bitmap* edges = nullptr;
            s = (method == "sobel") ? ee_sobel_edges(img, 4.0, &edges)
                                    : ee_log_edges(img, 2.0, 0.0, &edges);
            if (s == EE_OK)
                ee_bitmap_destroy(edges);
            elapsed = seconds_since(start);
        }
        if (s != EE_OK)
            return s;
        if (!warmup)
            total += elapsed;
        if (verbose && !warmup)
            std::printf("# %s %s run %d: %.9f s\n", method.c_str(), row.image_id.c_str(),
                        run, elapsed);
    }
    row.runs = runs;
    row.mean_seconds = total / runs;
    row.phase_histogram = phases[0] / runs;
    row.phase_thresholds = phases[1] / runs;
    row.phase_binarize = phases[2] / runs;
    row.phase_detect = phases[3] / runs;
    return EE_OK;
}

int run_bench(const std::vector<std::string>& inputs, int runs, const std::string& csv_path,
              double q, bool allow_any, bool phases, bool verbose) {
    if (int rc = check_q(q, allow_any))
        return rc;
    if (runs < 1) {
        std::fprintf(stderr, "error: --runs must be at least 1\n");
        return kExitUsage;
    }

    std::vector<BenchRow> rows;
    int first_failure = 0;
    const std::vector<std::string> methods = {"hybrid", "sobel", "log"};

    for (std::size_t i = 0; i < inputs.size(); ++i) {
        const std::string image_id = sanitize_id(inputs[i], i + 1);

        ImagePtr img(nullptr, &ee_image_destroy);
        ee_image* raw = nullptr;
        if (ee_status s = ee_image_read_pgm_file(inputs[i].c_str(), &raw); s != EE_OK) {
            std::fprintf(stderr, "error: %s: %s\n", inputs[i].c_str(), ee_last_error());
            rows.push_back({"error", image_id, 0, 0, 0, 0.0, 0, 0, 0, 0});
            if (first_failure == 0)
                first_failure = status_to_exit(s);
            continue;
        }
        img = ImagePtr(raw, &ee_image_destroy);

        for (const std::string& method : methods) {
            BenchRow row;
            row.method = method;
            row.image_id = image_id;
            row.width = ee_image_width(img.get());
            row.height = ee_image_height(img.get());
            if (ee_status s = time_method(img.get(), method, q, runs, verbose, row);
                s != EE_OK) {
                std::fprintf(stderr, "error: %s (%s): %s\n", inputs[i].c_str(),
                             method.c_str(), ee_last_error());
                rows.push_back({"error", image_id, row.width, row.height, 0, 0.0, 0, 0, 0, 0});
                if (first_failure == 0)
                    first_failure = status_to_exit(s);
                continue;
            }
            rows.push_back(row);
        }
    }

    std::printf("%-8s %-24s %-11s %5s %14s\n", "method", "image_id", "size", "runs",
                "mean_seconds");
    for (const BenchRow& row : rows) {
        char size[32];
        std::snprintf(size, sizeof(size), "%dx%d", row.width, row.height);
        std::printf("%-8s %-24s %-11s %5d %14.9f\n", row.method.c_str(),
                    row.image_id.c_str(), size, row.runs, row.mean_seconds);
    }

    if (!csv_path.empty()) {
        std::ofstream csv(csv_path, std::ios::trunc);
        if (!csv) {
            std::fprintf(stderr, "error: cannot open '%s' for writing\n", csv_path.c_str());
            return kExitUnwritable;
        }
        csv << "# boundary=compute-only\n";
        csv << "method,image_id,width,height,runs,mean_seconds";
        if (phases)
            csv << ",histogram_seconds,thresholds_seconds,binarize_seconds,detect_seconds";
        csv << "\n";
        char line[256];
        for (const BenchRow& row : rows) {
            std::snprintf(line, sizeof(line), "%s,%s,%d,%d,%d,%.9f", row.method.c_str(),
                          row.image_id.c_str(), row.width, row.height, row.runs,
                          row.mean_seconds);
            csv << line;
            if (phases) {
                std::snprintf(line, sizeof(line), ",%.9f,%.9f,%.9f,%.9f",
                              row.phase_histogram, row.phase_thresholds,
                              row.phase_binarize, row.phase_detect);
                csv << line;
            }
            csv << "\n";
        }
        if (!csv.good()) {
            std::fprintf(stderr, "error: write failure on '%s'\n", csv_path.c_str());
            return kExitUnwritable;
        }
    }
    return first_failure;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"entroedge: hybrid entropic-threshold edge detection"};
    app.require_subcommand(1);

    std::string input, output, method, csv_path;
    std::vector<std::string> inputs;
    double q = 0.5;
    double scale = 4.0;
    double sigma = 2.0;
    double zc_thresh = 0.0;
    int runs = 10;
    bool allow_any_q = false;
    bool phases = false;
    bool verbose = false;

    CLI::App* threshold = app.add_subcommand("threshold", "Print the hybrid threshold triple");
    threshold->add_option("input", input, "input PGM image")->required();
    threshold->add_option("--q", q, "entropic index for the local thresholds");
    threshold->add_flag("--allow-any-q", allow_any_q, "lift the (0,1) restriction on q");

    CLI::App* edges = app.add_subcommand("edges", "Detect edges with the hybrid method");
    edges->add_option("input", input, "input PGM image")->required();
    edges->add_option("output", output, "output PGM edge image")->required();
    edges->add_option("--q", q, "entropic index for the local thresholds");
    edges->add_flag("--allow-any-q", allow_any_q, "lift the (0,1) restriction on q");

    CLI::App* baseline = app.add_subcommand("baseline", "Detect edges with a classical method");
    baseline->add_option("input", input, "input PGM image")->required();
    baseline->add_option("output", output, "output PGM edge image")->required();
    baseline->add_option("--method", method, "sobel or log")
        ->required()
        ->check(CLI::IsMember({"sobel", "log"}));
    baseline->add_option("--scale", scale, "sobel: threshold = scale * mean magnitude");
    baseline->add_option("--sigma", sigma, "log: Gaussian sigma");
    baseline->add_option("--zc-thresh", zc_thresh, "log: minimum zero-crossing strength");

    CLI::App* bench = app.add_subcommand("bench", "Time hybrid, sobel, and log per image");
    bench->add_option("inputs", inputs, "input PGM images")->required()->expected(-1);
    bench->add_option("--runs", runs, "timed runs per method (one warm-up is discarded)");
    bench->add_option("--csv", csv_path, "write timing records to this CSV file");
    bench->add_option("--q", q, "entropic index for the hybrid method");
    bench->add_flag("--allow-any-q", allow_any_q, "lift the (0,1) restriction on q");
    bench->add_flag("--phases", phases, "add per-phase columns to the CSV");
    bench->add_flag("--verbose", verbose, "print every timed run");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int rc = app.exit(e);
        return rc == 0 ? 0 : kExitUsage;
    }

    if (threshold->parsed())
        return run_threshold(input, q, allow_any_q);
    if (edges->parsed())
        return run_edges(input, output, q, allow_any_q);
    if (baseline->parsed())
        return run_baseline(input, output, method, scale, sigma, zc_thresh);
    return run_bench(inputs, runs, csv_path, q, allow_any_q, phases, verbose);
}
