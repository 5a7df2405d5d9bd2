#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <random>
#include <string>

#include "pgm.hpp"

using namespace entroedge;

namespace {

std::vector<std::uint8_t> bytes_of(const std::string& s) {
    return {s.begin(), s.end()};
}

// Runs f expecting it to throw E; returns the exception message.
template <typename E, typename F>
std::string error_message(F&& f) {
    try {
        f();
    } catch (const E& e) {
        return e.what();
    }
    return {};
}

} // namespace

TEST_CASE("P5 single pixel") {
    std::string data = "P5 1 1 255\n";
    data.push_back('\x7f');
    const GrayImage img = read_pgm(bytes_of(data));
    CHECK(img.width == 1);
    CHECK(img.height == 1);
    CHECK(img.pixels[0] == 127);
}

TEST_CASE("P2 ASCII variant") {
    const GrayImage img = read_pgm(bytes_of("P2 2 2 255 0 255 255 0"));
    CHECK(img.width == 2);
    CHECK(img.height == 2);
    CHECK(img.pixels == std::vector<std::uint8_t>{0, 255, 255, 0});
}

TEST_CASE("comments allowed in header") {
    std::string data = "P5\n# a comment\n2 1 # trailing note\n255\n";
    data.push_back('\x0a');
    data.push_back('\x14');
    const GrayImage img = read_pgm(bytes_of(data));
    CHECK(img.width == 2);
    CHECK(img.pixels == std::vector<std::uint8_t>{10, 20});
}

TEST_CASE("truncated P5 raster") {
    std::string data = "P5 4 4 255\n";
    data.append(15, '\x01');
    const std::string msg = error_message<ParseError>([&] { read_pgm(bytes_of(data)); });
    CHECK(msg.find("truncated") != std::string::npos);
}

TEST_CASE("truncated P2 raster") {
    const std::string msg =
        error_message<ParseError>([&] { read_pgm(bytes_of("P2 2 2 255 7 8 9")); });
    CHECK(msg.find("truncated") != std::string::npos);
}

TEST_CASE("bad magic") {
    const std::string msg =
        error_message<ParseError>([&] { read_pgm(bytes_of("P6 1 1 255 x")); });
    CHECK(msg.find("magic") != std::string::npos);
}

TEST_CASE("oversized maxval") {
    const std::string msg =
        error_message<ParseError>([&] { read_pgm(bytes_of("P2 1 1 65535 0")); });
    CHECK(msg.find("maxval") != std::string::npos);
}

TEST_CASE("non-numeric header token") {
    const std::string msg =
        error_message<ParseError>([&] { read_pgm(bytes_of("P5 ab 2 255 ")); });
    CHECK(msg.find("width") != std::string::npos);
}

TEST_CASE("P2 pixel above maxval") {
    const std::string msg =
        error_message<ParseError>([&] { read_pgm(bytes_of("P2 1 1 100 101")); });
    CHECK(msg.find("exceeds") != std::string::npos);
}

TEST_CASE("writer emits canonical header") {
    GrayImage img = make_gray(1, 1);
    const auto bytes = write_pgm(img);
    const std::string expected_header = "P5\n1 1\n255\n";
    REQUIRE(bytes.size() == expected_header.size() + 1);
    CHECK(std::string(bytes.begin(), bytes.end() - 1) == expected_header);
    CHECK(bytes.back() == 0);
}

TEST_CASE("writer payload bytes") {
    GrayImage img = make_gray(2, 1);
    img.pixels = {10, 20};
    const auto bytes = write_pgm(img);
    REQUIRE(bytes.size() >= 2);
    CHECK(bytes[bytes.size() - 2] == 0x0a);
    CHECK(bytes[bytes.size() - 1] == 0x14);
}

TEST_CASE("round-trip identity") {
    std::mt19937 rng(7);
    for (auto [w, h] : {std::pair{16, 16}, {1, 1}, {7, 3}}) {
        GrayImage img = make_gray(w, h);
        for (auto& px : img.pixels)
            px = static_cast<std::uint8_t>(rng() % 256);
        const GrayImage back = read_pgm(write_pgm(img));
        CHECK(back.width == img.width);
        CHECK(back.height == img.height);
        CHECK(back.pixels == img.pixels);
    }
}

TEST_CASE("render_edges maps 1 to white") {
    EdgeMap edges = make_binary(5, 4);
    SUBCASE("all clear") {
        const GrayImage img = render_edges(edges);
        for (auto px : img.pixels)
            CHECK(px == 0);
    }
    SUBCASE("single edge pixel") {
        edges.at(2, 3) = 1;
        const GrayImage img = render_edges(edges);
        CHECK(img.at(2, 3) == 255);
        int nonzero = 0;
        for (auto px : img.pixels)
            nonzero += px != 0;
        CHECK(nonzero == 1);
    }
}

TEST_CASE("render then threshold recovers the map") {
    std::mt19937 rng(11);
    EdgeMap edges = make_binary(9, 6);
    for (auto& b : edges.bits)
        b = static_cast<std::uint8_t>(rng() & 1u);
    const GrayImage img = render_edges(edges);
    for (std::size_t i = 0; i < edges.bits.size(); ++i)
        CHECK((img.pixels[i] > 128 ? 1 : 0) == edges.bits[i]);
}
