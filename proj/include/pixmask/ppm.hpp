#pragma once

#include <cstddef>
#include <cstdint>
#include <span>
#include <string>
#include <vector>

#include "pixmask/errors.hpp"
#include "pixmask/raster.hpp"

namespace pixmask {

enum class PpmErrorCode {
  BadMagic,
  MalformedHeader,
  OversizedToken,
  UnsupportedMaxval,
  TruncatedPayload,
  TrailingData,
};

/// Binary PPM decode failure at a byte offset into the input.
class PpmError : public Error {
 public:
  PpmError(PpmErrorCode code, std::size_t offset, const std::string& what)
      : Error(what + " at byte " + std::to_string(offset)),
        code_(code),
        offset_(offset) {}

  PpmErrorCode code() const noexcept { return code_; }
  std::size_t offset() const noexcept { return offset_; }

 private:
  PpmErrorCode code_;
  std::size_t offset_;
};

/// Header numbers longer than this many characters are rejected.
inline constexpr std::size_t kMaxPpmTokenLength = 10;

/// Decodes a single P6 image with maxval 255. `#` comments are allowed in the
/// header; exactly one whitespace byte separates maxval from the payload.
RasterImage read_ppm(std::span<const std::uint8_t> bytes);

/// Canonical encoding: "P6\n<width> <height>\n255\n" then the RGB payload.
std::vector<std::uint8_t> write_ppm(const RasterImage& image);

}  // namespace pixmask
