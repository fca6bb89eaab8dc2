#include "pixmask/pixmask.h"

#include <cstdlib>
#include <cstring>
#include <new>
#include <string>
#include <utility>

#include "pixmask/analysis.hpp"
#include "pixmask/cipher.hpp"
#include "pixmask/errors.hpp"
#include "pixmask/file_io.hpp"
#include "pixmask/ppm.hpp"
#include "pixmask/raster.hpp"

struct pm_image {
  pixmask::RasterImage value;
};

struct pm_report {
  pixmask::AnalysisReport value;
};

namespace {

thread_local std::string g_last_error;
thread_local pm_ppm_error g_last_ppm_error = PM_PPM_NONE;

class InvalidArgument : public std::exception {
 public:
  explicit InvalidArgument(const char* what) : what_(what) {}
  const char* what() const noexcept override { return what_; }

 private:
  const char* what_;
};

pm_ppm_error to_c(pixmask::PpmErrorCode code) {
  using pixmask::PpmErrorCode;
  switch (code) {
    case PpmErrorCode::BadMagic: return PM_PPM_BAD_MAGIC;
    case PpmErrorCode::MalformedHeader: return PM_PPM_MALFORMED_HEADER;
    case PpmErrorCode::OversizedToken: return PM_PPM_OVERSIZED_TOKEN;
    case PpmErrorCode::UnsupportedMaxval: return PM_PPM_UNSUPPORTED_MAXVAL;
    case PpmErrorCode::TruncatedPayload: return PM_PPM_TRUNCATED_PAYLOAD;
    case PpmErrorCode::TrailingData: return PM_PPM_TRAILING_DATA;
  }
  return PM_PPM_NONE;
}

pm_status fail(pm_status status, const char* what) {
  g_last_error = what;
  return status;
}

// Runs body, translating exceptions into status codes.
template <typename Body>
pm_status guarded(Body&& body) noexcept {
  g_last_error.clear();
  g_last_ppm_error = PM_PPM_NONE;
  try {
    body();
    return PM_OK;
  } catch (const InvalidArgument& e) {
    return fail(PM_ERR_INVALID_ARGUMENT, e.what());
  } catch (const pixmask::PpmError& e) {
    g_last_ppm_error = to_c(e.code());
    return fail(PM_ERR_PPM, e.what());
  } catch (const pixmask::BoundsError& e) {
    return fail(PM_ERR_BOUNDS, e.what());
  } catch (const pixmask::ShapeError& e) {
    return fail(PM_ERR_SHAPE, e.what());
  } catch (const pixmask::ParseError& e) {
    return fail(PM_ERR_PARSE, e.what());
  } catch (const pixmask::UndefinedCorrelationError& e) {
    return fail(PM_ERR_UNDEFINED, e.what());
  } catch (const pixmask::IoError& e) {
    return fail(PM_ERR_IO, e.what());
  } catch (const std::bad_alloc&) {
    return fail(PM_ERR_NO_MEMORY, "out of memory");
  } catch (const std::exception& e) {
    return fail(PM_ERR_INTERNAL, e.what());
  } catch (...) {
    return fail(PM_ERR_INTERNAL, "unknown error");
  }
}

template <typename T>
void require(const T* ptr, const char* name) {
  if (ptr == nullptr) {
    throw InvalidArgument(name);
  }
}

pixmask::Region to_cpp(const pm_region& r) {
  return {r.row_start, r.row_end, r.col_start, r.col_end};
}

pm_region to_c(const pixmask::Region& r) {
  return {r.row_start, r.row_end, r.col_start, r.col_end};
}

pixmask::ChannelPermutation to_cpp(pm_channel_perm perm) {
  const int index = static_cast<int>(perm);
  if (index < 0 ||
      index >= static_cast<int>(pixmask::kAllChannelPermutations.size())) {
    throw InvalidArgument("channel permutation out of range");
  }
  return pixmask::kAllChannelPermutations[index];
}

pm_channel_perm to_c(pixmask::ChannelPermutation perm) {
  for (std::size_t k = 0; k < pixmask::kAllChannelPermutations.size(); ++k) {
    if (pixmask::kAllChannelPermutations[k] == perm) {
      return static_cast<pm_channel_perm>(k);
    }
  }
  return PM_PERM_IDENTITY;
}

const pixmask::SideStats& side_of(const pm_report* report, pm_side side) {
  switch (side) {
    case PM_SIDE_PLAIN: return report->value.plain;
    case PM_SIDE_CIPHER: return report->value.cipher;
  }
  throw InvalidArgument("side out of range");
}

std::size_t channel_index(int channel) {
  if (channel < 0 || channel > 2) throw InvalidArgument("channel out of range");
  return static_cast<std::size_t>(channel);
}

template <typename Bytes>
Bytes* malloc_copy(const void* data, std::size_t len, std::size_t extra) {
  void* buf = std::malloc(len + extra);
  if (buf == nullptr) throw std::bad_alloc();
  if (len != 0) std::memcpy(buf, data, len);
  if (extra != 0) static_cast<char*>(buf)[len] = '\0';
  return static_cast<Bytes*>(buf);
}

char* malloc_string(const std::string& s) {
  return malloc_copy<char>(s.data(), s.size(), 1);
}

}  // namespace

extern "C" {

const char* pm_version(void) { return "1.0.0"; }

const char* pm_last_error(void) { return g_last_error.c_str(); }

pm_ppm_error pm_last_ppm_error(void) { return g_last_ppm_error; }

void pm_free(void* ptr) { std::free(ptr); }

pm_status pm_image_create(size_t width, size_t height, const uint8_t* rgb,
                          size_t rgb_len, pm_image** out) {
  return guarded([&] {
    require(out, "out is null");
    if (rgb_len != 0) require(rgb, "rgb is null");
    auto image = pixmask::RasterImage::from_interleaved(
        width, height, std::span<const std::uint8_t>(rgb, rgb_len));
    *out = new pm_image{std::move(image)};
  });
}

void pm_image_destroy(pm_image* image) { delete image; }

size_t pm_image_width(const pm_image* image) {
  return image ? image->value.width() : 0;
}

size_t pm_image_height(const pm_image* image) {
  return image ? image->value.height() : 0;
}

pm_status pm_image_pixels(const pm_image* image, uint8_t* buf,
                          size_t buf_len) {
  return guarded([&] {
    require(image, "image is null");
    require(buf, "buf is null");
    const auto bytes = image->value.interleaved();
    if (buf_len < bytes.size()) {
      throw pixmask::ShapeError("buffer of " + std::to_string(buf_len) +
                                " bytes cannot hold " +
                                std::to_string(bytes.size()));
    }
    std::memcpy(buf, bytes.data(), bytes.size());
  });
}

int pm_image_equal(const pm_image* a, const pm_image* b) {
  if (a == nullptr || b == nullptr) return 0;
  return a->value == b->value ? 1 : 0;
}

pm_status pm_image_decode_ppm(const uint8_t* bytes, size_t len,
                              pm_image** out) {
  return guarded([&] {
    require(out, "out is null");
    if (len != 0) require(bytes, "bytes is null");
    *out = new pm_image{
        pixmask::read_ppm(std::span<const std::uint8_t>(bytes, len))};
  });
}

pm_status pm_image_encode_ppm(const pm_image* image, uint8_t** out,
                              size_t* out_len) {
  return guarded([&] {
    require(image, "image is null");
    require(out, "out is null");
    require(out_len, "out_len is null");
    const auto bytes = pixmask::write_ppm(image->value);
    *out = malloc_copy<uint8_t>(bytes.data(), bytes.size(), 0);
    *out_len = bytes.size();
  });
}

pm_status pm_image_load_ppm(const char* path, pm_image** out) {
  return guarded([&] {
    require(path, "path is null");
    require(out, "out is null");
    *out = new pm_image{pixmask::read_ppm(pixmask::read_file(path))};
  });
}

pm_status pm_image_save_ppm(const pm_image* image, const char* path) {
  return guarded([&] {
    require(image, "image is null");
    require(path, "path is null");
    pixmask::write_file_atomic(path, pixmask::write_ppm(image->value));
  });
}

pm_status pm_region_parse(const char* text, pm_region* out) {
  return guarded([&] {
    require(text, "text is null");
    require(out, "out is null");
    *out = to_c(pixmask::parse_region(text));
  });
}

pm_status pm_region_validate(const pm_region* region, const pm_image* image) {
  return guarded([&] {
    require(region, "region is null");
    require(image, "image is null");
    to_cpp(*region).validate(image->value.width(), image->value.height());
  });
}

pm_status pm_channel_perm_parse(const char* name, pm_channel_perm* out) {
  return guarded([&] {
    require(name, "name is null");
    require(out, "out is null");
    const auto cp = pixmask::parse_channel_permutation(name);
    if (!cp) {
      throw pixmask::ParseError(
          0, "unknown channel permutation '" + std::string(name) + "'");
    }
    *out = to_c(*cp);
  });
}

const char* pm_channel_perm_name(pm_channel_perm perm) {
  const int index = static_cast<int>(perm);
  if (index < 0 ||
      index >= static_cast<int>(pixmask::kAllChannelPermutations.size())) {
    return nullptr;
  }
  // name_of returns views of string literals, so data() is NUL-terminated.
  return pixmask::name_of(pixmask::kAllChannelPermutations[index]).data();
}

pm_status pm_encrypt_image(const pm_image* image, const pm_region* region,
                           pm_channel_perm perm, pm_image** out) {
  return guarded([&] {
    require(image, "image is null");
    require(region, "region is null");
    require(out, "out is null");
    *out = new pm_image{
        pixmask::encrypt_image(image->value, to_cpp(*region), to_cpp(perm))};
  });
}

pm_status pm_decrypt_image(const pm_image* image, const pm_region* region,
                           pm_channel_perm perm, pm_image** out) {
  return guarded([&] {
    require(image, "image is null");
    require(region, "region is null");
    require(out, "out is null");
    *out = new pm_image{
        pixmask::decrypt_image(image->value, to_cpp(*region), to_cpp(perm))};
  });
}

pm_status pm_metadata_format(const pm_region* region, pm_channel_perm perm,
                             char** out_text) {
  return guarded([&] {
    require(region, "region is null");
    require(out_text, "out_text is null");
    pixmask::CipherMetadata meta;
    meta.region = to_cpp(*region);
    meta.channel_perm = to_cpp(perm);
    *out_text = malloc_string(pixmask::write_metadata(meta));
  });
}

pm_status pm_metadata_parse(const char* text, pm_region* region,
                            pm_channel_perm* perm) {
  return guarded([&] {
    require(text, "text is null");
    require(region, "region is null");
    require(perm, "perm is null");
    const auto meta = pixmask::read_metadata(text);
    *region = to_c(meta.region);
    *perm = to_c(meta.channel_perm);
  });
}

pm_status pm_metadata_save(const char* path, const pm_region* region,
                           pm_channel_perm perm) {
  return guarded([&] {
    require(path, "path is null");
    require(region, "region is null");
    pixmask::CipherMetadata meta;
    meta.region = to_cpp(*region);
    meta.channel_perm = to_cpp(perm);
    pixmask::write_file_atomic(path, pixmask::write_metadata(meta));
  });
}

pm_status pm_metadata_load(const char* path, pm_region* region,
                           pm_channel_perm* perm) {
  return guarded([&] {
    require(path, "path is null");
    require(region, "region is null");
    require(perm, "perm is null");
    const auto bytes = pixmask::read_file(path);
    const auto meta = pixmask::read_metadata(std::string_view(
        reinterpret_cast<const char*>(bytes.data()), bytes.size()));
    *region = to_c(meta.region);
    *perm = to_c(meta.channel_perm);
  });
}

pm_status pm_report_create(const pm_image* plain, const pm_image* cipher,
                           const pm_region* region, pm_report** out) {
  return guarded([&] {
    require(plain, "plain is null");
    require(cipher, "cipher is null");
    require(region, "region is null");
    require(out, "out is null");
    if (plain->value.width() != cipher->value.width() ||
        plain->value.height() != cipher->value.height()) {
      throw pixmask::ShapeError("plain and cipher images differ in size");
    }
    const auto reg = to_cpp(*region);
    *out = new pm_report{
        pixmask::compare_report(pixmask::extract_region(plain->value, reg),
                                pixmask::extract_region(cipher->value, reg))};
  });
}

void pm_report_destroy(pm_report* report) { delete report; }

pm_status pm_report_to_csv(const pm_report* report, char** out_text) {
  return guarded([&] {
    require(report, "report is null");
    require(out_text, "out_text is null");
    *out_text = malloc_string(pixmask::write_report_csv(report->value));
  });
}

pm_status pm_report_save_csv(const pm_report* report, const char* path) {
  return guarded([&] {
    require(report, "report is null");
    require(path, "path is null");
    pixmask::write_file_atomic(path, pixmask::write_report_csv(report->value));
  });
}

pm_status pm_report_parse_csv(const char* text, pm_report** out) {
  return guarded([&] {
    require(text, "text is null");
    require(out, "out is null");
    *out = new pm_report{pixmask::read_report_csv(text)};
  });
}

pm_status pm_report_load_csv(const char* path, pm_report** out) {
  return guarded([&] {
    require(path, "path is null");
    require(out, "out is null");
    const auto bytes = pixmask::read_file(path);
    *out = new pm_report{pixmask::read_report_csv(std::string_view(
        reinterpret_cast<const char*>(bytes.data()), bytes.size()))};
  });
}

pm_status pm_report_dims(const pm_report* report, size_t* rows,
                         size_t* cols) {
  return guarded([&] {
    require(report, "report is null");
    require(rows, "rows is null");
    require(cols, "cols is null");
    *rows = report->value.rows;
    *cols = report->value.cols;
  });
}

pm_status pm_report_total(const pm_report* report, pm_side side,
                          uint64_t* total) {
  return guarded([&] {
    require(report, "report is null");
    require(total, "total is null");
    *total = side_of(report, side).sums.total;
  });
}

pm_status pm_report_histogram(const pm_report* report, pm_side side,
                              int channel, uint64_t* counts) {
  return guarded([&] {
    require(report, "report is null");
    require(counts, "counts is null");
    const auto& hist = side_of(report, side).histograms[channel_index(channel)];
    std::copy(hist.begin(), hist.end(), counts);
  });
}

pm_status pm_report_correlation(const pm_report* report, int channel,
                                double* out) {
  return guarded([&] {
    require(report, "report is null");
    require(out, "out is null");
    const auto& corr = report->value.correlations[channel_index(channel)];
    if (!corr) {
      throw pixmask::UndefinedCorrelationError(
          "undefined correlation: a plane has zero variance");
    }
    *out = *corr;
  });
}

pm_status pm_report_histograms_follow(const pm_report* report,
                                      pm_channel_perm perm, int* follows) {
  return guarded([&] {
    require(report, "report is null");
    require(follows, "follows is null");
    *follows = pixmask::histograms_follow(report->value, to_cpp(perm)) ? 1 : 0;
  });
}

}  // extern "C"
