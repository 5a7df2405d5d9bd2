#include "baselines.hpp"

#include <algorithm>
#include <cmath>
#include <string>

namespace entroedge {

namespace {

void check_kernel_fits(const GrayImage& img, const Kernel& kernel) {
    if (kernel.size <= 0 || kernel.size % 2 == 0)
        throw InvalidArgument("kernel side must be odd and positive");
    if (kernel.weights.size() != static_cast<std::size_t>(kernel.size) * kernel.size)
        throw InvalidArgument("kernel weights do not match its size");
    if (kernel.size > img.width || kernel.size > img.height)
        throw InvalidArgument("kernel of size " + std::to_string(kernel.size) +
                              " larger than " + std::to_string(img.width) + "x" +
                              std::to_string(img.height) + " image");
}

} // namespace

Kernel sobel_x_kernel() {
    return {3, {-1, 0, 1, -2, 0, 2, -1, 0, 1}};
}

Kernel sobel_y_kernel() {
    return {3, {-1, -2, -1, 0, 0, 0, 1, 2, 1}};
}

Kernel log_kernel(double sigma) {
    if (sigma <= 0.0)
        throw InvalidArgument("sigma must be positive");
    const int half = static_cast<int>(std::ceil(3.0 * sigma));
    const int size = 2 * half + 1;

    Kernel k{size, std::vector<double>(static_cast<std::size_t>(size) * size)};
    const double s2 = sigma * sigma;
    double sum = 0.0;
    for (int row = 0; row < size; ++row) {
        for (int col = 0; col < size; ++col) {
            const double y = row - half;
            const double x = col - half;
            const double r2 = x * x + y * y;
            const double w = (r2 - 2.0 * s2) / (s2 * s2) * std::exp(-r2 / (2.0 * s2));
            k.weights[static_cast<std::size_t>(row) * size + col] = w;
            sum += w;
        }
    }
    // Sampled values never sum to zero exactly; shift so flat regions give a
    // null response.
    const double bias = sum / (static_cast<double>(size) * size);
    for (double& w : k.weights)
        w -= bias;
    return k;
}

RealImage convolve(const GrayImage& img, const Kernel& kernel) {
    check_kernel_fits(img, kernel);

    RealImage out;
    out.width = img.width;
    out.height = img.height;
    out.values.assign(img.pixels.size(), 0.0);

    const int half = kernel.size / 2;
    for (int row = 0; row < img.height; ++row) {
        for (int col = 0; col < img.width; ++col) {
            double acc = 0.0;
            for (int dr = -half; dr <= half; ++dr) {
                const int r = std::clamp(row + dr, 0, img.height - 1);
                for (int dc = -half; dc <= half; ++dc) {
                    const int c = std::clamp(col + dc, 0, img.width - 1);
                    acc += kernel.at(dr + half, dc + half) * img.at(r, c);
                }
            }
            out.values[static_cast<std::size_t>(row) * img.width + col] = acc;
        }
    }
    return out;
}

EdgeMap sobel_edges(const GrayImage& img, double scale) {
    if (scale <= 0.0)
        throw InvalidArgument("scale must be positive");
    const RealImage gx = convolve(img, sobel_x_kernel());
    const RealImage gy = convolve(img, sobel_y_kernel());

    std::vector<double> magnitude(img.pixels.size());
    double mean = 0.0;
    for (std::size_t i = 0; i < magnitude.size(); ++i) {
        magnitude[i] = std::sqrt(gx.values[i] * gx.values[i] + gy.values[i] * gy.values[i]);
        mean += magnitude[i];
    }
    mean /= static_cast<double>(magnitude.size());
    const double threshold = scale * mean;

    EdgeMap edges = make_binary(img.width, img.height);
    for (int row = 1; row + 1 < img.height; ++row)
        for (int col = 1; col + 1 < img.width; ++col)
            edges.at(row, col) =
                magnitude[static_cast<std::size_t>(row) * img.width + col] > threshold ? 1 : 0;
    return edges;
}

EdgeMap log_edges(const GrayImage& img, double sigma, double zc_thresh) {
    if (zc_thresh < 0.0)
        throw InvalidArgument("zero-crossing threshold must be non-negative");
    const RealImage response = convolve(img, log_kernel(sigma));

    EdgeMap edges = make_binary(img.width, img.height);
    for (int row = 1; row + 1 < img.height; ++row) {
        for (int col = 1; col + 1 < img.width; ++col) {
            const double v = response.at(row, col);
            const double right = response.at(row, col + 1);
            const double down = response.at(row + 1, col);
            const bool crossing = (v * right < 0.0 && std::abs(v - right) > zc_thresh) ||
                                  (v * down < 0.0 && std::abs(v - down) > zc_thresh);
            edges.at(row, col) = crossing ? 1 : 0;
        }
    }
    return edges;
}

} // namespace entroedge
