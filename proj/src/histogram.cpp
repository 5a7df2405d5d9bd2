#include "histogram.hpp"

#include <array>
#include <string>

namespace entroedge {

namespace {

void assign_probs(SparseHistogram& hist) {
    const double total = static_cast<double>(hist.total);
    for (auto& e : hist.entries)
        e.prob = static_cast<double>(e.count) / total;
}

} // namespace

SparseHistogram build_histogram(const GrayImage& img) {
    if (img.pixels.empty())
        throw InvalidArgument("cannot build a histogram of an empty image");

    std::array<std::uint64_t, 256> counts{};
    for (std::uint8_t px : img.pixels)
        ++counts[px];

    SparseHistogram hist;
    hist.total = img.pixels.size();
    for (int level = 0; level < 256; ++level) {
        if (counts[level] > 0)
            hist.entries.push_back({level, counts[level], 0.0});
    }
    assign_probs(hist);
    return hist;
}

SparseHistogram histogram_from_counts(const std::vector<std::pair<int, std::uint64_t>>& counts) {
    if (counts.empty())
        throw InvalidArgument("histogram needs at least one entry");

    SparseHistogram hist;
    int prev_level = -1;
    for (const auto& [level, count] : counts) {
        if (level < 0 || level > 255)
            throw InvalidArgument("gray level " + std::to_string(level) + " out of range 0..255");
        if (level <= prev_level)
            throw InvalidArgument("histogram levels must be strictly ascending");
        if (count == 0)
            throw InvalidArgument("histogram counts must be positive");
        hist.entries.push_back({level, count, 0.0});
        hist.total += count;
        prev_level = level;
    }
    assign_probs(hist);
    return hist;
}

std::pair<SparseHistogram, SparseHistogram> split_at(const SparseHistogram& hist,
                                                     std::size_t lower_size) {
    if (lower_size < 1 || lower_size >= hist.size())
        throw InvalidArgument("split position " + std::to_string(lower_size) +
                              " would leave an empty part (histogram has " +
                              std::to_string(hist.size()) + " entries)");

    SparseHistogram low, high;
    for (std::size_t i = 0; i < hist.size(); ++i) {
        SparseHistogram& part = (i < lower_size) ? low : high;
        part.entries.push_back(hist.entries[i]);
        part.total += hist.entries[i].count;
    }
    assign_probs(low);
    assign_probs(high);
    return {std::move(low), std::move(high)};
}

} // namespace entroedge
