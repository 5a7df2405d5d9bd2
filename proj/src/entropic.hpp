#ifndef ENTROEDGE_ENTROPIC_HPP
#define ENTROEDGE_ENTROPIC_HPP

#include <cstddef>
#include <span>
#include <vector>

#include "histogram.hpp"

namespace entroedge {

// Shannon entropy -sum(p ln p) in nats. Probabilities must be positive and
// sum to 1 within 1e-9; zero entries have to be stripped upstream.
double shannon_entropy(std::span<const double> probs);

// Tsallis entropy (1 - sum(p^q)) / (q - 1) for q > 0, q != 1. Recovers
// Shannon entropy in the limit q -> 1.
double tsallis_entropy(std::span<const double> probs, double q);

// Composition rule for statistically independent subsystems:
// sa + sb + (1-q)*sa*sb. Reduces to plain additivity at q = 1.
double pseudo_additive_combine(double sa, double sb, double q);

// Object/background decomposition of a histogram at a candidate threshold.
// split_index is the 0-based index of the last entry of the low class, so
// both classes are non-empty for split_index in [0, size-2].
struct ClassDistributions {
    double prob_low;               // total probability mass of the low class
    double prob_high;              // 1 - prob_low
    std::vector<double> dist_low;  // per-level probs renormalized by prob_low
    std::vector<double> dist_high; // per-level probs renormalized by prob_high
};

ClassDistributions class_distributions(const SparseHistogram& hist, std::size_t split_index);

struct ThresholdResult {
    int level;               // gray level of the selected entry
    std::size_t entry_index; // 0-based index into the searched histogram;
                             // the low class is entries[0..entry_index]
    double criterion;        // objective value at the maximizer
};

enum class LogBase { Natural, Base2 };

// Maximizes the summed class entropies over every candidate split. The last
// entry is excluded as a candidate: a threshold must produce two non-empty
// classes. Ties keep the smallest index. The log base rescales the objective
// by a positive constant, so it never changes the selected entry; Base2
// exists for cross-checking only.
ThresholdResult shannon_threshold(const SparseHistogram& hist,
                                  LogBase base = LogBase::Natural);

// Maximizes the pseudo-additive combination of the two class Tsallis
// entropies. q must be positive and != 1 (use shannon_threshold for q = 1).
ThresholdResult tsallis_threshold(const SparseHistogram& hist, double q);

// q = 0.5 fast path: maximizes the product of the per-class square-root sums
// minus one, which orders candidates identically to tsallis_threshold at
// q = 0.5 and needs no pow() calls.
ThresholdResult tsallis_sqrt_threshold(const SparseHistogram& hist);

} // namespace entroedge

#endif
