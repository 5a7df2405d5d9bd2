#include "entropic.hpp"

#include <cmath>
#include <limits>
#include <string>

namespace entroedge {

namespace {

void check_distribution(std::span<const double> probs) {
    if (probs.empty())
        throw InvalidArgument("probability distribution is empty");
    double sum = 0.0;
    for (double p : probs) {
        if (p <= 0.0)
            throw InvalidArgument("probability " + std::to_string(p) +
                                  " is not positive; strip zero entries upstream");
        sum += p;
    }
    if (std::abs(sum - 1.0) > 1e-9)
        throw InvalidArgument("probabilities sum to " + std::to_string(sum) + ", expected 1");
}

void check_entropic_index(double q) {
    if (q <= 0.0)
        throw InvalidArgument("entropic index q must be positive, got " + std::to_string(q));
    if (q == 1.0)
        throw InvalidArgument("q = 1 is the Shannon limit; use shannon_threshold/shannon_entropy");
}

void check_splittable(const SparseHistogram& hist) {
    if (hist.size() < 2)
        throw DegenerateInput("no threshold separates a single gray level");
}

// Scans candidate splits 0..size-2, keeping the first strict maximum.
template <typename Objective>
ThresholdResult search_threshold(const SparseHistogram& hist, Objective&& objective) {
    const std::size_t k = hist.size();
    std::size_t best_index = 0;
    double best_value = -std::numeric_limits<double>::infinity();
    for (std::size_t t = 0; t + 1 < k; ++t) {
        const double value = objective(t);
        if (value > best_value) {
            best_value = value;
            best_index = t;
        }
    }
    return {hist.entries[best_index].level, best_index, best_value};
}

// Running sums of a per-entry transform for every candidate split. The high
// class is accumulated from the right, not derived by subtraction, so small
// classes keep full precision.
struct SplitSums {
    std::vector<double> low;               // low[t]  = sum of f(p_i) for i <= t
    std::vector<double> high;              // high[t] = sum of f(p_i) for i >= t
    std::vector<std::uint64_t> low_count;  // pixel count of the low class
};

template <typename F>
SplitSums split_sums(const SparseHistogram& hist, F&& f) {
    const std::size_t k = hist.size();
    std::vector<double> transformed(k);
    for (std::size_t i = 0; i < k; ++i)
        transformed[i] = f(hist.entries[i].prob);

    SplitSums sums{std::vector<double>(k), std::vector<double>(k),
                   std::vector<std::uint64_t>(k)};
    double acc = 0.0;
    std::uint64_t count = 0;
    for (std::size_t i = 0; i < k; ++i) {
        acc += transformed[i];
        count += hist.entries[i].count;
        sums.low[i] = acc;
        sums.low_count[i] = count;
    }
    acc = 0.0;
    for (std::size_t i = k; i-- > 0;) {
        acc += transformed[i];
        sums.high[i] = acc;
    }
    return sums;
}

} // namespace

double shannon_entropy(std::span<const double> probs) {
    check_distribution(probs);
    double h = 0.0;
    for (double p : probs)
        h -= p * std::log(p);
    return h;
}

double tsallis_entropy(std::span<const double> probs, double q) {
    check_distribution(probs);
    check_entropic_index(q);
    double powsum = 0.0;
    for (double p : probs)
        powsum += std::pow(p, q);
    return (1.0 - powsum) / (q - 1.0);
}

double pseudo_additive_combine(double sa, double sb, double q) {
    return sa + sb + (1.0 - q) * sa * sb;
}

ClassDistributions class_distributions(const SparseHistogram& hist, std::size_t split_index) {
    check_splittable(hist);
    if (split_index + 1 >= hist.size())
        throw InvalidArgument("split index " + std::to_string(split_index) +
                              " leaves the high class empty");

    ClassDistributions out;
    std::uint64_t low_count = 0;
    for (std::size_t i = 0; i <= split_index; ++i)
        low_count += hist.entries[i].count;
    out.prob_low = static_cast<double>(low_count) / static_cast<double>(hist.total);
    out.prob_high = 1.0 - out.prob_low;

    out.dist_low.reserve(split_index + 1);
    for (std::size_t i = 0; i <= split_index; ++i)
        out.dist_low.push_back(hist.entries[i].prob / out.prob_low);
    out.dist_high.reserve(hist.size() - split_index - 1);
    for (std::size_t i = split_index + 1; i < hist.size(); ++i)
        out.dist_high.push_back(hist.entries[i].prob / out.prob_high);
    return out;
}

ThresholdResult shannon_threshold(const SparseHistogram& hist, LogBase base) {
    check_splittable(hist);

    // Class entropy of the renormalized low class expands to
    //   log(P_A) - (sum_{i<=t} p_i log p_i) / P_A,
    // so one pass over p*log(p) serves every candidate split.
    const double total = static_cast<double>(hist.total);
    const bool base2 = (base == LogBase::Base2);
    const SplitSums sums = split_sums(
        hist, [&](double p) { return p * (base2 ? std::log2(p) : std::log(p)); });

    return search_threshold(hist, [&](std::size_t t) {
        const double pa = static_cast<double>(sums.low_count[t]) / total;
        const double pb = static_cast<double>(hist.total - sums.low_count[t]) / total;
        const double sa = (base2 ? std::log2(pa) : std::log(pa)) - sums.low[t] / pa;
        const double sb = (base2 ? std::log2(pb) : std::log(pb)) - sums.high[t + 1] / pb;
        return sa + sb;
    });
}

ThresholdResult tsallis_threshold(const SparseHistogram& hist, double q) {
    check_entropic_index(q);
    check_splittable(hist);

    // (p_i/P_A)^q = p_i^q / P_A^q, so per-class entropies come from one pass
    // over p^q.
    const double total = static_cast<double>(hist.total);
    const SplitSums sums = split_sums(hist, [&](double p) { return std::pow(p, q); });

    return search_threshold(hist, [&](std::size_t t) {
        const double pa = static_cast<double>(sums.low_count[t]) / total;
        const double pb = static_cast<double>(hist.total - sums.low_count[t]) / total;
        const double sa = (1.0 - sums.low[t] / std::pow(pa, q)) / (q - 1.0);
        const double sb = (1.0 - sums.high[t + 1] / std::pow(pb, q)) / (q - 1.0);
        return pseudo_additive_combine(sa, sb, q);
    });
}

ThresholdResult tsallis_sqrt_threshold(const SparseHistogram& hist) {
    check_splittable(hist);

    const double total = static_cast<double>(hist.total);
    const SplitSums sums = split_sums(hist, [](double p) { return std::sqrt(p); });

    return search_threshold(hist, [&](std::size_t t) {
        const double pa = static_cast<double>(sums.low_count[t]) / total;
        const double pb = static_cast<double>(hist.total - sums.low_count[t]) / total;
        const double a = sums.low[t] / std::sqrt(pa);
        const double b = sums.high[t + 1] / std::sqrt(pb);
        return a * b - 1.0;
    });
}

} // namespace entroedge
