#ifndef ENTROEDGE_EDGEMAP_HPP
#define ENTROEDGE_EDGEMAP_HPP

#include "entropic.hpp"
#include "image.hpp"

namespace entroedge {

// The hybrid threshold triple: t1 is the global Shannon threshold, t2 the
// local threshold of the low part (levels <= t1), t3 of the high part
// (levels > t1). Always t2 <= t1 < t3.
struct ThresholdSet {
    int t1;
    int t2;
    int t3;
    double q; // entropic index used for t2/t3
};

// Threshold triple together with the criterion values and entry indices
// behind each pick.
struct HybridThresholds {
    ThresholdResult global; // Shannon threshold of the full histogram
    ThresholdResult low;    // Tsallis threshold of the low part
    ThresholdResult high;   // Tsallis threshold of the high part
    double q;

    ThresholdSet levels() const { return {global.level, low.level, high.level, q}; }
};

// 0 where pixel <= t, 1 otherwise.
BinaryImage binarize(const GrayImage& img, int t);

// 1 iff (t2 <= pixel < t1) or (pixel >= t3). Pixels equal to t1 map to 0.
// This single pass equals the merge of the per-part binarizations.
BinaryImage binarize_hybrid(const GrayImage& img, const ThresholdSet& ts);

// Entropy -p ln p of the central pixel's share of a 3x3 window; p must lie
// in (0,1]. Used to validate the window decision rule, which itself works on
// the integer match count and never evaluates logarithms.
double central_entropy(double p);

// 3x3 window homogeneity detector. For each interior pixel, counts how many
// of the nine window cells (self included) equal the center; the pixel is an
// edge iff that count is at most 6. Border pixels stay 0. Requires at least
// a 3x3 input.
EdgeMap detect_edges(const BinaryImage& bin);

// Shannon global threshold, then Tsallis local thresholds of the two parts
// split at the global pick. q = 0.5 takes the square-root fast path.
HybridThresholds hybrid_thresholds(const SparseHistogram& hist, double q);

struct HybridDetection {
    EdgeMap edges;
    HybridThresholds thresholds;
};

// Full pipeline: histogram, thresholds, combined binarization, one detector
// pass. Requires a 3x3 or larger image whose low and high parts each span
// at least two gray levels.
HybridDetection detect_hybrid(const GrayImage& img, double q = 0.5);

} // namespace entroedge

#endif
