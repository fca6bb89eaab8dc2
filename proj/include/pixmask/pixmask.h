/*
 * pixmask C API.
 *
 * Reversible region scrambling for 8-bit RGB images. Every object is an
 * opaque handle created by a pm_*_create/load/parse call and released with
 * the matching pm_*_destroy. Functions return pm_status; on failure a
 * one-line diagnostic is available from pm_last_error() on the same thread.
 * Output handles are only written on success.
 *
 * Regions are 0-based and half-open: rows [row_start, row_end), columns
 * [col_start, col_end).
 */
#ifndef PIXMASK_PIXMASK_H_
#define PIXMASK_PIXMASK_H_

#include <stddef.h>
#include <stdint.h>

#if defined(PIXMASK_BUILDING_LIBRARY)
#define PIXMASK_API __attribute__((visibility("default")))
#else
#define PIXMASK_API
#endif

#ifdef __cplusplus
extern "C" {
#endif

typedef enum pm_status {
  PM_OK = 0,
  PM_ERR_INVALID_ARGUMENT = 1, /* null pointer, bad enum value */
  PM_ERR_BOUNDS = 2,           /* region does not fit the image */
  PM_ERR_SHAPE = 3,            /* dimension mismatch */
  PM_ERR_PARSE = 4,            /* region, sidecar or CSV text */
  PM_ERR_PPM = 5,              /* image decode; see pm_last_ppm_error() */
  PM_ERR_UNDEFINED = 6,        /* correlation of a constant plane */
  PM_ERR_IO = 7,
  PM_ERR_NO_MEMORY = 8,
  PM_ERR_INTERNAL = 9
} pm_status;

typedef enum pm_ppm_error {
  PM_PPM_NONE = 0,
  PM_PPM_BAD_MAGIC = 1,
  PM_PPM_MALFORMED_HEADER = 2,
  PM_PPM_OVERSIZED_TOKEN = 3,
  PM_PPM_UNSUPPORTED_MAXVAL = 4,
  PM_PPM_TRUNCATED_PAYLOAD = 5,
  PM_PPM_TRAILING_DATA = 6
} pm_ppm_error;

/* Output slots R, G, B are filled from the input channels named after
 * "rgb2": PM_PERM_RGB2GBR puts input G into R, B into G, R into B. */
typedef enum pm_channel_perm {
  PM_PERM_IDENTITY = 0,
  PM_PERM_RGB2GBR = 1,
  PM_PERM_RGB2BRG = 2,
  PM_PERM_RGB2RBG = 3,
  PM_PERM_RGB2GRB = 4,
  PM_PERM_RGB2BGR = 5
} pm_channel_perm;

typedef struct pm_region {
  size_t row_start;
  size_t row_end;
  size_t col_start;
  size_t col_end;
} pm_region;

typedef enum pm_side { PM_SIDE_PLAIN = 0, PM_SIDE_CIPHER = 1 } pm_side;

typedef struct pm_image pm_image;
typedef struct pm_report pm_report;

PIXMASK_API const char* pm_version(void);

/* Diagnostic of the last failed call on this thread ("" after success). */
PIXMASK_API const char* pm_last_error(void);
/* Decoder error class of the last PM_ERR_PPM failure on this thread. */
PIXMASK_API pm_ppm_error pm_last_ppm_error(void);

/* Releases buffers returned through char** / uint8_t** out-parameters. */
PIXMASK_API void pm_free(void* ptr);

/* ---- images ---- */

/* rgb holds 3 * width * height interleaved bytes, row-major. */
PIXMASK_API pm_status pm_image_create(size_t width, size_t height,
                                      const uint8_t* rgb, size_t rgb_len,
                                      pm_image** out);
PIXMASK_API void pm_image_destroy(pm_image* image);
PIXMASK_API size_t pm_image_width(const pm_image* image);
PIXMASK_API size_t pm_image_height(const pm_image* image);
/* Copies 3 * width * height bytes into buf. */
PIXMASK_API pm_status pm_image_pixels(const pm_image* image, uint8_t* buf,
                                      size_t buf_len);
/* 1 if both images have the same dims and pixels, else 0. */
PIXMASK_API int pm_image_equal(const pm_image* a, const pm_image* b);

PIXMASK_API pm_status pm_image_decode_ppm(const uint8_t* bytes, size_t len,
                                          pm_image** out);
/* *out is released with pm_free. */
PIXMASK_API pm_status pm_image_encode_ppm(const pm_image* image,
                                          uint8_t** out, size_t* out_len);
PIXMASK_API pm_status pm_image_load_ppm(const char* path, pm_image** out);
/* Writes atomically: the target is untouched if anything fails. */
PIXMASK_API pm_status pm_image_save_ppm(const pm_image* image,
                                        const char* path);

/* ---- regions and channel permutations ---- */

/* Grammar "R0:R1,C0:C1", rows first. */
PIXMASK_API pm_status pm_region_parse(const char* text, pm_region* out);
PIXMASK_API pm_status pm_region_validate(const pm_region* region,
                                         const pm_image* image);

/* Accepts "identity", "rgb2gbr", ... and "rgb->gbr" spellings. */
PIXMASK_API pm_status pm_channel_perm_parse(const char* name,
                                            pm_channel_perm* out);
/* Canonical name, or NULL for an out-of-range value. */
PIXMASK_API const char* pm_channel_perm_name(pm_channel_perm perm);

/* ---- cipher ---- */

PIXMASK_API pm_status pm_encrypt_image(const pm_image* image,
                                       const pm_region* region,
                                       pm_channel_perm perm, pm_image** out);
PIXMASK_API pm_status pm_decrypt_image(const pm_image* image,
                                       const pm_region* region,
                                       pm_channel_perm perm, pm_image** out);

/* ---- sidecar metadata ---- */

/* *out_text is NUL-terminated and released with pm_free. */
PIXMASK_API pm_status pm_metadata_format(const pm_region* region,
                                         pm_channel_perm perm,
                                         char** out_text);
PIXMASK_API pm_status pm_metadata_parse(const char* text, pm_region* region,
                                        pm_channel_perm* perm);
PIXMASK_API pm_status pm_metadata_save(const char* path,
                                       const pm_region* region,
                                       pm_channel_perm perm);
PIXMASK_API pm_status pm_metadata_load(const char* path, pm_region* region,
                                       pm_channel_perm* perm);

/* ---- analysis ---- */

/* Compares the region of two same-size images. */
PIXMASK_API pm_status pm_report_create(const pm_image* plain,
                                       const pm_image* cipher,
                                       const pm_region* region,
                                       pm_report** out);
PIXMASK_API void pm_report_destroy(pm_report* report);
PIXMASK_API pm_status pm_report_to_csv(const pm_report* report,
                                       char** out_text);
PIXMASK_API pm_status pm_report_save_csv(const pm_report* report,
                                         const char* path);
PIXMASK_API pm_status pm_report_parse_csv(const char* text, pm_report** out);
PIXMASK_API pm_status pm_report_load_csv(const char* path, pm_report** out);

PIXMASK_API pm_status pm_report_dims(const pm_report* report, size_t* rows,
                                     size_t* cols);
/* Grand total of all component values on one side. */
PIXMASK_API pm_status pm_report_total(const pm_report* report, pm_side side,
                                      uint64_t* total);
/* channel: 0 = R, 1 = G, 2 = B. counts receives 256 entries. */
PIXMASK_API pm_status pm_report_histogram(const pm_report* report,
                                          pm_side side, int channel,
                                          uint64_t* counts);
/* PM_ERR_UNDEFINED when either side of the channel is constant. */
PIXMASK_API pm_status pm_report_correlation(const pm_report* report,
                                            int channel, double* out);
/* *follows = 1 if every cipher histogram equals the plain histogram that
 * perm routes into it, else 0. */
PIXMASK_API pm_status pm_report_histograms_follow(const pm_report* report,
                                                  pm_channel_perm perm,
                                                  int* follows);

#ifdef __cplusplus
}
#endif

#endif /* PIXMASK_PIXMASK_H_ */
