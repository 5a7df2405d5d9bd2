#include "entroedge.h"

#include <cstdlib>
#include <cstring>
#include <new>
#include <string>

#include "baselines.hpp"
#include "edgemap.hpp"
#include "entropic.hpp"
#include "error.hpp"
#include "histogram.hpp"
#include "pgm.hpp"

struct ee_image {
    entroedge::GrayImage img;
};

struct ee_bitmap {
    entroedge::BinaryImage bin;
};

struct ee_histogram {
    entroedge::SparseHistogram hist;
};

namespace {

thread_local std::string g_last_error;

void set_error(const char* message) {
    try {
        g_last_error = message;
    } catch (...) {
        // Leave the previous message in place if even that fails.
    }
}

ee_status fail(ee_status status, const char* message) {
    set_error(message);
    return status;
}

// Runs a callable under the C boundary, mapping exceptions to status codes.
template <typename F>
ee_status guarded(F&& body) noexcept {
    try {
        return body();
    } catch (const entroedge::ParseError& e) {
        return fail(EE_ERROR_PARSE, e.what());
    } catch (const entroedge::IoError& e) {
        return fail(EE_ERROR_IO, e.what());
    } catch (const entroedge::DegenerateInput& e) {
        return fail(EE_ERROR_DEGENERATE, e.what());
    } catch (const entroedge::InvalidArgument& e) {
        return fail(EE_ERROR_INVALID_ARGUMENT, e.what());
    } catch (const std::bad_alloc&) {
        return fail(EE_ERROR_INTERNAL, "out of memory");
    } catch (const std::exception& e) {
        return fail(EE_ERROR_INTERNAL, e.what());
    } catch (...) {
        return fail(EE_ERROR_INTERNAL, "unknown error");
    }
}

ee_status out_bitmap(entroedge::BinaryImage bin, ee_bitmap** out) {
    *out = new ee_bitmap{std::move(bin)};
    return EE_OK;
}

ee_status out_image(entroedge::GrayImage img, ee_image** out) {
    *out = new ee_image{std::move(img)};
    return EE_OK;
}

ee_threshold_set to_c(const entroedge::HybridThresholds& ths) {
    ee_threshold_set out;
    out.t1 = ths.global.level;
    out.t2 = ths.low.level;
    out.t3 = ths.high.level;
    out.q = ths.q;
    out.crit1 = ths.global.criterion;
    out.crit2 = ths.low.criterion;
    out.crit3 = ths.high.criterion;
    return out;
}

} // namespace

extern "C" {

const char* ee_last_error(void) {
    return g_last_error.c_str();
}

const char* ee_version(void) {
    return EE_VERSION_STRING;
}

ee_status ee_image_create(int32_t width, int32_t height, const uint8_t* pixels,
                          ee_image** out) {
    return guarded([&]() -> ee_status {
        if (out == nullptr || pixels == nullptr)
            return fail(EE_ERROR_INVALID_ARGUMENT, "null pointer argument");
        entroedge::GrayImage img = entroedge::make_gray(width, height);
        std::memcpy(img.pixels.data(), pixels, img.pixels.size());
        return out_image(std::move(img), out);
    });
}

ee_status ee_image_read_pgm(const uint8_t* bytes, size_t len, ee_image** out) {
    return guarded([&]() -> ee_status {
        if (out == nullptr || bytes == nullptr)
            return fail(EE_ERROR_INVALID_ARGUMENT, "null pointer argument");
        return out_image(entroedge::read_pgm({bytes, len}), out);
    });
}

ee_status ee_image_read_pgm_file(const char* path, ee_image** out) {
    return guarded([&]() -> ee_status {
        if (out == nullptr || path == nullptr)
            return fail(EE_ERROR_INVALID_ARGUMENT, "null pointer argument");
        return out_image(entroedge::read_pgm_file(path), out);
    });
}

ee_status ee_image_write_pgm(const ee_image* img, uint8_t** out_bytes, size_t* out_len) {
    return guarded([&]() -> ee_status {
        if (img == nullptr || out_bytes == nullptr || out_len == nullptr)
            return fail(EE_ERROR_INVALID_ARGUMENT, "null pointer argument");
        const std::vector<std::uint8_t> bytes = entroedge::write_pgm(img->img);
        auto* buffer = static_cast<uint8_t*>(std::malloc(bytes.size()));
        if (buffer == nullptr)
            return fail(EE_ERROR_INTERNAL, "out of memory");
        std::memcpy(buffer, bytes.data(), bytes.size());
        *out_bytes = buffer;
        *out_len = bytes.size();
        return EE_OK;
    });
}

ee_status ee_image_write_pgm_file(const ee_image* img, const char* path) {
    return guarded([&]() -> ee_status {
        if (img == nullptr || path == nullptr)
            return fail(EE_ERROR_INVALID_ARGUMENT, "null pointer argument");
        entroedge::write_pgm_file(img->img, path);
        return EE_OK;
    });
}

int32_t ee_image_width(const ee_image* img) {
    return img ? img->img.width : 0;
}

int32_t ee_image_height(const ee_image* img) {
    return img ? img->img.height : 0;
}

const uint8_t* ee_image_pixels(const ee_image* img) {
    return img ? img->img.pixels.data() : nullptr;
}

void ee_image_destroy(ee_image* img) {
    delete img;
}

void ee_buffer_free(uint8_t* bytes) {
    std::free(bytes);
}

int32_t ee_bitmap_width(const ee_bitmap* bm) {
    return bm ? bm->bin.width : 0;
}

int32_t ee_bitmap_height(const ee_bitmap* bm) {
    return bm ? bm->bin.height : 0;
}

const uint8_t* ee_bitmap_bits(const ee_bitmap* bm) {
    return bm ? bm->bin.bits.data() : nullptr;
}

uint64_t ee_bitmap_count_ones(const ee_bitmap* bm) {
    if (bm == nullptr)
        return 0;
    uint64_t ones = 0;
    for (std::uint8_t b : bm->bin.bits)
        ones += b;
    return ones;
}

void ee_bitmap_destroy(ee_bitmap* bm) {
    delete bm;
}

ee_status ee_histogram_build(const ee_image* img, ee_histogram** out) {
    return guarded([&]() -> ee_status {
        if (img == nullptr || out == nullptr)
            return fail(EE_ERROR_INVALID_ARGUMENT, "null pointer argument");
        *out = new ee_histogram{entroedge::build_histogram(img->img)};
        return EE_OK;
    });
}

size_t ee_histogram_size(const ee_histogram* hist) {
    return hist ? hist->hist.size() : 0;
}

void ee_histogram_destroy(ee_histogram* hist) {
    delete hist;
}

ee_status ee_hybrid_thresholds_of(const ee_histogram* hist, double q,
                                  ee_threshold_set* out) {
    return guarded([&]() -> ee_status {
        if (hist == nullptr || out == nullptr)
            return fail(EE_ERROR_INVALID_ARGUMENT, "null pointer argument");
        *out = to_c(entroedge::hybrid_thresholds(hist->hist, q));
        return EE_OK;
    });
}

ee_status ee_hybrid_thresholds(const ee_image* img, double q, ee_threshold_set* out) {
    return guarded([&]() -> ee_status {
        if (img == nullptr || out == nullptr)
            return fail(EE_ERROR_INVALID_ARGUMENT, "null pointer argument");
        const entroedge::SparseHistogram hist = entroedge::build_histogram(img->img);
        *out = to_c(entroedge::hybrid_thresholds(hist, q));
        return EE_OK;
    });
}

ee_status ee_binarize(const ee_image* img, int32_t t, ee_bitmap** out) {
    return guarded([&]() -> ee_status {
        if (img == nullptr || out == nullptr)
            return fail(EE_ERROR_INVALID_ARGUMENT, "null pointer argument");
        return out_bitmap(entroedge::binarize(img->img, t), out);
    });
}

ee_status ee_binarize_hybrid(const ee_image* img, const ee_threshold_set* ts,
                             ee_bitmap** out) {
    return guarded([&]() -> ee_status {
        if (img == nullptr || ts == nullptr || out == nullptr)
            return fail(EE_ERROR_INVALID_ARGUMENT, "null pointer argument");
        const entroedge::ThresholdSet levels{ts->t1, ts->t2, ts->t3, ts->q};
        return out_bitmap(entroedge::binarize_hybrid(img->img, levels), out);
    });
}

ee_status ee_detect_edges(const ee_bitmap* bin, ee_bitmap** out) {
    return guarded([&]() -> ee_status {
        if (bin == nullptr || out == nullptr)
            return fail(EE_ERROR_INVALID_ARGUMENT, "null pointer argument");
        return out_bitmap(entroedge::detect_edges(bin->bin), out);
    });
}

ee_status ee_detect_hybrid(const ee_image* img, double q, ee_threshold_set* ts_out,
                           ee_bitmap** out) {
    return guarded([&]() -> ee_status {
        if (img == nullptr || out == nullptr)
            return fail(EE_ERROR_INVALID_ARGUMENT, "null pointer argument");
        entroedge::HybridDetection result = entroedge::detect_hybrid(img->img, q);
        if (ts_out != nullptr)
            *ts_out = to_c(result.thresholds);
        return out_bitmap(std::move(result.edges), out);
    });
}

ee_status ee_render_edges(const ee_bitmap* edges, ee_image** out) {
    return guarded([&]() -> ee_status {
        if (edges == nullptr || out == nullptr)
            return fail(EE_ERROR_INVALID_ARGUMENT, "null pointer argument");
        return out_image(entroedge::render_edges(edges->bin), out);
    });
}

ee_status ee_sobel_edges(const ee_image* img, double scale, ee_bitmap** out) {
    return guarded([&]() -> ee_status {
        if (img == nullptr || out == nullptr)
            return fail(EE_ERROR_INVALID_ARGUMENT, "null pointer argument");
        return out_bitmap(entroedge::sobel_edges(img->img, scale), out);
    });
}

ee_status ee_log_edges(const ee_image* img, double sigma, double zc_thresh,
                       ee_bitmap** out) {
    return guarded([&]() -> ee_status {
        if (img == nullptr || out == nullptr)
            return fail(EE_ERROR_INVALID_ARGUMENT, "null pointer argument");
        return out_bitmap(entroedge::log_edges(img->img, sigma, zc_thresh), out);
    });
}

} // extern "C"
