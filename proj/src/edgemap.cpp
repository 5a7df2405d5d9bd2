#include "edgemap.hpp"

#include <cmath>
#include <string>

namespace entroedge {

namespace {

void check_raster(int width, int height, std::size_t size) {
    if (width <= 0 || height <= 0 || size != static_cast<std::size_t>(width) * height)
        throw InvalidArgument("raster buffer does not match its dimensions");
}

} // namespace

BinaryImage binarize(const GrayImage& img, int t) {
    check_raster(img.width, img.height, img.pixels.size());
    if (t < 0 || t > 255)
        throw InvalidArgument("threshold " + std::to_string(t) + " outside 0..255");

    BinaryImage out = make_binary(img.width, img.height);
    for (std::size_t i = 0; i < img.pixels.size(); ++i)
        out.bits[i] = img.pixels[i] > t ? 1 : 0;
    return out;
}

BinaryImage binarize_hybrid(const GrayImage& img, const ThresholdSet& ts) {
    check_raster(img.width, img.height, img.pixels.size());
    if (!(ts.t2 <= ts.t1 && ts.t1 < ts.t3))
        throw InvalidArgument("threshold ordering violated: need t2 <= t1 < t3, got t1=" +
                              std::to_string(ts.t1) + " t2=" + std::to_string(ts.t2) +
                              " t3=" + std::to_string(ts.t3));

    BinaryImage out = make_binary(img.width, img.height);
    for (std::size_t i = 0; i < img.pixels.size(); ++i) {
        const int px = img.pixels[i];
        out.bits[i] = ((px >= ts.t2 && px < ts.t1) || px >= ts.t3) ? 1 : 0;
    }
    return out;
}

double central_entropy(double p) {
    if (!(p > 0.0 && p <= 1.0))
        throw InvalidArgument("central pixel probability " + std::to_string(p) +
                              " outside (0,1]");
    return -p * std::log(p);
}

EdgeMap detect_edges(const BinaryImage& bin) {
    check_raster(bin.width, bin.height, bin.bits.size());
    if (bin.width < 3 || bin.height < 3)
        throw InvalidArgument("edge detection needs at least a 3x3 image, got " +
                              std::to_string(bin.width) + "x" + std::to_string(bin.height));

    EdgeMap edges = make_binary(bin.width, bin.height);
    for (int row = 1; row + 1 < bin.height; ++row) {
        for (int col = 1; col + 1 < bin.width; ++col) {
            const std::uint8_t center = bin.at(row, col);
            int matches = 0;
            for (int dr = -1; dr <= 1; ++dr)
                for (int dc = -1; dc <= 1; ++dc)
                    matches += (bin.at(row + dr, col + dc) == center);
            edges.at(row, col) = matches <= 6 ? 1 : 0;
        }
    }
    return edges;
}

HybridThresholds hybrid_thresholds(const SparseHistogram& hist, double q) {
    if (hist.size() < 2)
        throw DegenerateInput("no threshold separates a single gray level");

    const ThresholdResult global = shannon_threshold(hist);
    auto [low_part, high_part] = split_at(hist, global.entry_index + 1);
    if (low_part.size() < 2)
        throw DegenerateInput("low part of the histogram (levels <= " +
                              std::to_string(global.level) +
                              ") holds a single gray level");
    if (high_part.size() < 2)
        throw DegenerateInput("high part of the histogram (levels > " +
                              std::to_string(global.level) +
                              ") holds a single gray level");

    const ThresholdResult low =
        (q == 0.5) ? tsallis_sqrt_threshold(low_part) : tsallis_threshold(low_part, q);
    const ThresholdResult high =
        (q == 0.5) ? tsallis_sqrt_threshold(high_part) : tsallis_threshold(high_part, q);
    return {global, low, high, q};
}

HybridDetection detect_hybrid(const GrayImage& img, double q) {
    check_raster(img.width, img.height, img.pixels.size());
    if (img.width < 3 || img.height < 3)
        throw InvalidArgument("edge detection needs at least a 3x3 image, got " +
                              std::to_string(img.width) + "x" + std::to_string(img.height));

    const SparseHistogram hist = build_histogram(img);
    const HybridThresholds ths = hybrid_thresholds(hist, q);
    const BinaryImage bin = binarize_hybrid(img, ths.levels());
    return {detect_edges(bin), ths};
}

} // namespace entroedge
