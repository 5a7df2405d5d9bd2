#ifndef ENTROEDGE_HISTOGRAM_HPP
#define ENTROEDGE_HISTOGRAM_HPP

#include <cstdint>
#include <utility>
#include <vector>

#include "image.hpp"

namespace entroedge {

struct HistogramEntry {
    int level;            // gray level in 0..255
    std::uint64_t count;  // occurrences, always > 0
    double prob;          // count / total
};

// Probability table over only the gray levels that occur in the image;
// zero-count levels are never stored. Entries are sorted ascending by level.
struct SparseHistogram {
    std::vector<HistogramEntry> entries;
    std::uint64_t total = 0;

    std::size_t size() const { return entries.size(); }
};

SparseHistogram build_histogram(const GrayImage& img);

// Builds a histogram directly from (level, count) pairs. Levels must be
// strictly ascending within 0..255 and counts positive.
SparseHistogram histogram_from_counts(const std::vector<std::pair<int, std::uint64_t>>& counts);

// Splits into the first `lower_size` entries and the rest. Each part's
// probabilities are renormalized over its own total; levels and counts are
// carried over unchanged. Requires 1 <= lower_size < size().
std::pair<SparseHistogram, SparseHistogram> split_at(const SparseHistogram& hist,
                                                     std::size_t lower_size);

} // namespace entroedge

#endif
