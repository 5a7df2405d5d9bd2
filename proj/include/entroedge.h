/*
 * entroedge — hybrid entropic-threshold edge detection for 8-bit grayscale
 * images.
 *
 * C interface of the shared library. All heap objects are opaque handles
 * created and released through these functions; every fallible call returns
 * an ee_status and leaves a human-readable message retrievable with
 * ee_last_error() on the calling thread.
 */

#ifndef ENTROEDGE_H
#define ENTROEDGE_H

#include <stddef.h>
#include <stdint.h>

#if defined(_WIN32)
#define EE_API __declspec(dllexport)
#else
#define EE_API __attribute__((visibility("default")))
#endif

#ifdef __cplusplus
extern "C" {
#endif

#define EE_VERSION_STRING "1.0.0"

typedef enum ee_status {
    EE_OK = 0,
    EE_ERROR_INVALID_ARGUMENT = 1, /* precondition violated by the caller   */
    EE_ERROR_IO = 2,               /* file could not be read or written     */
    EE_ERROR_PARSE = 3,            /* bytes are not a well-formed PGM file  */
    EE_ERROR_DEGENERATE = 4,       /* input has too few distinct gray levels */
    EE_ERROR_INTERNAL = 5          /* out of memory or unexpected failure   */
} ee_status;

/* 8-bit grayscale raster, row-major, top-left origin. */
typedef struct ee_image ee_image;
/* Raster of {0,1} values; used for both binarizations and edge maps. */
typedef struct ee_bitmap ee_bitmap;
/* Sparse gray-level probability table (zero-count levels removed). */
typedef struct ee_histogram ee_histogram;

/* Hybrid threshold triple. t1 is the global Shannon threshold, t2 the local
 * threshold of the low part (levels <= t1), t3 of the high part (levels >
 * t1); always t2 <= t1 < t3. crit1..crit3 are the criterion values at each
 * selected threshold. */
typedef struct ee_threshold_set {
    int32_t t1;
    int32_t t2;
    int32_t t3;
    double q;
    double crit1;
    double crit2;
    double crit3;
} ee_threshold_set;

/* Message describing the most recent failure on the calling thread. Empty
 * string if no failure has been recorded. */
EE_API const char* ee_last_error(void);

EE_API const char* ee_version(void);

/* ---- images ---- */

EE_API ee_status ee_image_create(int32_t width, int32_t height,
                                 const uint8_t* pixels, ee_image** out);
EE_API ee_status ee_image_read_pgm(const uint8_t* bytes, size_t len, ee_image** out);
EE_API ee_status ee_image_read_pgm_file(const char* path, ee_image** out);
/* Encodes as binary PGM (P5, maxval 255). The buffer is malloc'd; release it
 * with ee_buffer_free. */
EE_API ee_status ee_image_write_pgm(const ee_image* img, uint8_t** out_bytes,
                                    size_t* out_len);
EE_API ee_status ee_image_write_pgm_file(const ee_image* img, const char* path);
EE_API int32_t ee_image_width(const ee_image* img);
EE_API int32_t ee_image_height(const ee_image* img);
/* Borrowed pointer to width*height bytes, valid while the image lives. */
EE_API const uint8_t* ee_image_pixels(const ee_image* img);
EE_API void ee_image_destroy(ee_image* img);
EE_API void ee_buffer_free(uint8_t* bytes);

/* ---- bitmaps ---- */

EE_API int32_t ee_bitmap_width(const ee_bitmap* bm);
EE_API int32_t ee_bitmap_height(const ee_bitmap* bm);
/* Borrowed pointer to width*height bytes, each 0 or 1. */
EE_API const uint8_t* ee_bitmap_bits(const ee_bitmap* bm);
EE_API uint64_t ee_bitmap_count_ones(const ee_bitmap* bm);
EE_API void ee_bitmap_destroy(ee_bitmap* bm);

/* ---- histogram and thresholds ---- */

EE_API ee_status ee_histogram_build(const ee_image* img, ee_histogram** out);
/* Number of distinct gray levels. */
EE_API size_t ee_histogram_size(const ee_histogram* hist);
EE_API void ee_histogram_destroy(ee_histogram* hist);

/* Hybrid threshold selection: global Shannon threshold, then Tsallis local
 * thresholds of the two parts. q must be positive and != 1; q = 0.5 uses the
 * square-root fast criterion. */
EE_API ee_status ee_hybrid_thresholds_of(const ee_histogram* hist, double q,
                                         ee_threshold_set* out);
EE_API ee_status ee_hybrid_thresholds(const ee_image* img, double q,
                                      ee_threshold_set* out);

/* ---- binarization and edge detection ---- */

/* 0 where pixel <= t, 1 otherwise; t in 0..255. */
EE_API ee_status ee_binarize(const ee_image* img, int32_t t, ee_bitmap** out);
/* 1 iff (t2 <= pixel < t1) or (pixel >= t3). Only t1..t3 of ts are used. */
EE_API ee_status ee_binarize_hybrid(const ee_image* img, const ee_threshold_set* ts,
                                    ee_bitmap** out);
/* 3x3 window homogeneity detector; needs a bitmap of at least 3x3. The
 * border of the result is always 0. */
EE_API ee_status ee_detect_edges(const ee_bitmap* bin, ee_bitmap** out);
/* Full pipeline: thresholds, combined binarization, one detector pass.
 * ts_out may be NULL. */
EE_API ee_status ee_detect_hybrid(const ee_image* img, double q,
                                  ee_threshold_set* ts_out, ee_bitmap** out);
/* Edge pixels to 255, everything else to 0. */
EE_API ee_status ee_render_edges(const ee_bitmap* edges, ee_image** out);

/* ---- baseline detectors ---- */

/* Sobel gradient magnitude thresholded at scale * mean(magnitude). */
EE_API ee_status ee_sobel_edges(const ee_image* img, double scale, ee_bitmap** out);
/* Laplacian-of-Gaussian zero crossings; kernel side is 2*ceil(3*sigma)+1 and
 * must fit inside the image. */
EE_API ee_status ee_log_edges(const ee_image* img, double sigma, double zc_thresh,
                              ee_bitmap** out);

#ifdef __cplusplus
} /* extern "C" */
#endif

#endif /* ENTROEDGE_H */
