#ifndef ENTROEDGE_PGM_HPP
#define ENTROEDGE_PGM_HPP

#include <cstdint>
#include <filesystem>
#include <span>
#include <vector>

#include "image.hpp"

namespace entroedge {

// Decodes a PGM file ("P5" binary or "P2" ASCII, maxval <= 255).
// '#' comments are allowed between header tokens. Throws ParseError with a
// message naming the offending element on malformed input.
GrayImage read_pgm(std::span<const std::uint8_t> bytes);

// Encodes as binary PGM: "P5\n<width> <height>\n255\n" followed by the
// raster, one byte per pixel. read_pgm(write_pgm(img)) == img.
std::vector<std::uint8_t> write_pgm(const GrayImage& img);

GrayImage read_pgm_file(const std::filesystem::path& path);
void write_pgm_file(const GrayImage& img, const std::filesystem::path& path);

// Edge pixels map to 255, everything else to 0.
GrayImage render_edges(const EdgeMap& edges);

} // namespace entroedge

#endif
