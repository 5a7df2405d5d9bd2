#ifndef ENTROEDGE_IMAGE_HPP
#define ENTROEDGE_IMAGE_HPP

#include <cstdint>
#include <vector>

#include "error.hpp"

namespace entroedge {

// 8-bit grayscale raster, row-major, top-left origin.
// Coordinates are (row, col), 0-based.
struct GrayImage {
    int width = 0;
    int height = 0;
    std::vector<std::uint8_t> pixels;

    std::uint8_t at(int row, int col) const {
        return pixels[static_cast<std::size_t>(row) * width + col];
    }
    std::uint8_t& at(int row, int col) {
        return pixels[static_cast<std::size_t>(row) * width + col];
    }
    std::size_t pixel_count() const { return pixels.size(); }
};

// Raster with values in {0,1}, same layout as GrayImage.
struct BinaryImage {
    int width = 0;
    int height = 0;
    std::vector<std::uint8_t> bits;

    std::uint8_t at(int row, int col) const {
        return bits[static_cast<std::size_t>(row) * width + col];
    }
    std::uint8_t& at(int row, int col) {
        return bits[static_cast<std::size_t>(row) * width + col];
    }
};

// Binary raster where 1 marks an edge pixel. The detector never marks the
// outermost rows and columns, so the border of an EdgeMap is always 0.
using EdgeMap = BinaryImage;

inline GrayImage make_gray(int width, int height, std::uint8_t fill = 0) {
    if (width <= 0 || height <= 0)
        throw InvalidArgument("image dimensions must be positive");
    GrayImage img;
    img.width = width;
    img.height = height;
    img.pixels.assign(static_cast<std::size_t>(width) * height, fill);
    return img;
}

inline BinaryImage make_binary(int width, int height, std::uint8_t fill = 0) {
    if (width <= 0 || height <= 0)
        throw InvalidArgument("image dimensions must be positive");
    BinaryImage bin;
    bin.width = width;
    bin.height = height;
    bin.bits.assign(static_cast<std::size_t>(width) * height, fill);
    return bin;
}

} // namespace entroedge

#endif
