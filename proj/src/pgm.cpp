#include "pgm.hpp"

#include <cctype>
#include <fstream>
#include <string>

namespace entroedge {

namespace {

bool is_pgm_space(std::uint8_t c) {
    return c == ' ' || c == '\t' || c == '\r' || c == '\n' || c == '\v' || c == '\f';
}

struct Cursor {
    std::span<const std::uint8_t> data;
    std::size_t pos = 0;

    bool at_end() const { return pos >= data.size(); }

    void skip_space_and_comments() {
        while (!at_end()) {
            if (is_pgm_space(data[pos])) {
                ++pos;
            } else if (data[pos] == '#') {
                while (!at_end() && data[pos] != '\n') ++pos;
            } else {
                break;
            }
        }
    }

    // Next whitespace-delimited token; empty string at end of input.
    std::string next_token() {
        skip_space_and_comments();
        std::string tok;
        while (!at_end() && !is_pgm_space(data[pos]) && data[pos] != '#') {
            tok.push_back(static_cast<char>(data[pos]));
            ++pos;
        }
        return tok;
    }
};

long parse_header_number(Cursor& cur, const char* what) {
    const std::string tok = cur.next_token();
    if (tok.empty())
        throw ParseError(std::string("missing ") + what + " in PGM header");
    if (tok.size() > 7)
        throw ParseError(std::string(what) + " '" + tok + "' is out of range");
    long value = 0;
    for (char c : tok) {
        if (!std::isdigit(static_cast<unsigned char>(c)))
            throw ParseError(std::string("non-numeric ") + what + " '" + tok + "' in PGM header");
        value = value * 10 + (c - '0');
    }
    return value;
}

void check_image(const GrayImage& img) {
    if (img.width <= 0 || img.height <= 0)
        throw InvalidArgument("image dimensions must be positive");
    if (img.pixels.size() != static_cast<std::size_t>(img.width) * img.height)
        throw InvalidArgument("pixel buffer does not match image dimensions");
}

} // namespace

GrayImage read_pgm(std::span<const std::uint8_t> bytes) {
    Cursor cur{bytes};

    const std::string magic = cur.next_token();
    if (magic != "P5" && magic != "P2")
        throw ParseError("bad magic '" + magic + "' (expected P5 or P2)");

    const long width = parse_header_number(cur, "width");
    const long height = parse_header_number(cur, "height");
    if (width <= 0 || height <= 0)
        throw ParseError("image dimensions must be positive");
    const long maxval = parse_header_number(cur, "maxval");
    if (maxval <= 0 || maxval > 255)
        throw ParseError("maxval " + std::to_string(maxval) + " unsupported (expected 1..255)");

    GrayImage img = make_gray(static_cast<int>(width), static_cast<int>(height));
    const std::size_t n = img.pixel_count();

    if (magic == "P5") {
        if (cur.at_end() || !is_pgm_space(bytes[cur.pos]))
            throw ParseError("missing whitespace between maxval and raster");
        ++cur.pos;
        const std::size_t have = bytes.size() - cur.pos;
        if (have < n)
            throw ParseError("truncated pixel data: expected " + std::to_string(n) +
                             " bytes, found " + std::to_string(have));
        std::copy_n(bytes.begin() + cur.pos, n, img.pixels.begin());
    } else {
        for (std::size_t i = 0; i < n; ++i) {
            cur.skip_space_and_comments();
            if (cur.at_end())
                throw ParseError("truncated pixel data: expected " + std::to_string(n) +
                                 " values, found " + std::to_string(i));
            const long value = parse_header_number(cur, "pixel value");
            if (value > maxval)
                throw ParseError("pixel value " + std::to_string(value) +
                                 " exceeds maxval " + std::to_string(maxval));
            img.pixels[i] = static_cast<std::uint8_t>(value);
        }
    }
    return img;
}

std::vector<std::uint8_t> write_pgm(const GrayImage& img) {
    check_image(img);
    const std::string header = "P5\n" + std::to_string(img.width) + " " +
                               std::to_string(img.height) + "\n255\n";
    std::vector<std::uint8_t> out;
    out.reserve(header.size() + img.pixels.size());
    out.insert(out.end(), header.begin(), header.end());
    out.insert(out.end(), img.pixels.begin(), img.pixels.end());
    return out;
}

GrayImage read_pgm_file(const std::filesystem::path& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in)
        throw IoError("cannot open '" + path.string() + "' for reading");
    std::vector<std::uint8_t> bytes((std::istreambuf_iterator<char>(in)),
                                    std::istreambuf_iterator<char>());
    if (in.bad())
        throw IoError("read failure on '" + path.string() + "'");
    return read_pgm(bytes);
}

void write_pgm_file(const GrayImage& img, const std::filesystem::path& path) {
    const std::vector<std::uint8_t> bytes = write_pgm(img);
    std::ofstream out(path, std::ios::binary | std::ios::trunc);
    if (!out)
        throw IoError("cannot open '" + path.string() + "' for writing");
    out.write(reinterpret_cast<const char*>(bytes.data()),
              static_cast<std::streamsize>(bytes.size()));
    if (!out)
        throw IoError("write failure on '" + path.string() + "'");
}

GrayImage render_edges(const EdgeMap& edges) {
    if (edges.width <= 0 || edges.height <= 0)
        throw InvalidArgument("edge map dimensions must be positive");
    GrayImage img = make_gray(edges.width, edges.height);
    for (std::size_t i = 0; i < edges.bits.size(); ++i)
        img.pixels[i] = edges.bits[i] ? 255 : 0;
    return img;
}

} // namespace entroedge
