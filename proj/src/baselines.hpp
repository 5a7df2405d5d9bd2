#ifndef ENTROEDGE_BASELINES_HPP
#define ENTROEDGE_BASELINES_HPP

#include <vector>

#include "image.hpp"

namespace entroedge {

// Square filter mask with odd side length.
struct Kernel {
    int size;
    std::vector<double> weights; // row-major, size*size

    double at(int row, int col) const {
        return weights[static_cast<std::size_t>(row) * size + col];
    }
};

struct RealImage {
    int width = 0;
    int height = 0;
    std::vector<double> values;

    double at(int row, int col) const {
        return values[static_cast<std::size_t>(row) * width + col];
    }
};

Kernel sobel_x_kernel(); // horizontal gradient
Kernel sobel_y_kernel(); // vertical gradient (transpose of sobel_x)

// Laplacian-of-Gaussian sampled on a (2*ceil(3*sigma)+1)^2 grid, then shifted
// so the weights sum to zero.
Kernel log_kernel(double sigma);

// Dense correlation with edge-replication padding; output has the image's
// dimensions. The kernel must fit inside the image.
RealImage convolve(const GrayImage& img, const Kernel& kernel);

// Sobel gradient magnitude thresholded at scale * mean(magnitude). The
// outermost ring is never marked; border responses are padding artifacts.
EdgeMap sobel_edges(const GrayImage& img, double scale = 4.0);

// Zero crossings of the LoG response: a pixel is an edge when its response
// and the right or down neighbor's differ in sign and the absolute difference
// exceeds zc_thresh. The outermost ring is never marked.
EdgeMap log_edges(const GrayImage& img, double sigma = 2.0, double zc_thresh = 0.0);

} // namespace entroedge

#endif
