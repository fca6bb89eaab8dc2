#pragma once

#include <array>
#include <cstddef>
#include <cstdint>
#include <span>
#include <vector>

namespace pixmask {

/// One 8-bit RGB pixel. The component type bounds every value to [0, 255].
struct Rgb {
  std::uint8_t r = 0;
  std::uint8_t g = 0;
  std::uint8_t b = 0;

  friend bool operator==(const Rgb&, const Rgb&) = default;
};

/// Immutable width x height RGB raster, pixels stored row-major.
class RasterImage {
 public:
  /// Throws ShapeError if a dimension is zero or the pixel count is not
  /// width * height.
  RasterImage(std::size_t width, std::size_t height, std::vector<Rgb> pixels);

  /// Builds an image from interleaved RGB bytes (3 * width * height of them).
  static RasterImage from_interleaved(std::size_t width, std::size_t height,
                                      std::span<const std::uint8_t> rgb);

  /// Uniformly coloured image.
  static RasterImage filled(std::size_t width, std::size_t height, Rgb value);

  std::size_t width() const noexcept { return width_; }
  std::size_t height() const noexcept { return height_; }
  std::size_t pixel_count() const noexcept { return pixels_.size(); }

  const Rgb& at(std::size_t row, std::size_t col) const;
  std::span<const Rgb> pixels() const noexcept { return pixels_; }

  /// Interleaved R,G,B bytes in row-major pixel order.
  std::vector<std::uint8_t> interleaved() const;

  friend bool operator==(const RasterImage&, const RasterImage&) = default;

 private:
  std::size_t width_;
  std::size_t height_;
  std::vector<Rgb> pixels_;
};

/// Rectangular window of an image, 0-based and half-open on both axes:
/// rows [row_start, row_end), columns [col_start, col_end).
///
/// A MATLAB-style 1-based inclusive selection `a:b, c:d` corresponds to
/// Region{a - 1, b, c - 1, d}; for instance `55:136, 62:124` is
/// Region{54, 136, 61, 124}, an 82 x 63 window.
struct Region {
  std::size_t row_start = 0;
  std::size_t row_end = 0;
  std::size_t col_start = 0;
  std::size_t col_end = 0;

  std::size_t rows() const noexcept { return row_end - row_start; }
  std::size_t cols() const noexcept { return col_end - col_start; }

  /// Converts a 1-based inclusive row/column selection.
  static Region from_one_based_inclusive(std::size_t first_row,
                                         std::size_t last_row,
                                         std::size_t first_col,
                                         std::size_t last_col);

  /// The whole image.
  static Region full(const RasterImage& image) noexcept {
    return {0, image.height(), 0, image.width()};
  }

  /// Throws BoundsError naming the offending axis if the region is empty or
  /// does not fit a width x height image.
  void validate(std::size_t width, std::size_t height) const;

  friend bool operator==(const Region&, const Region&) = default;
};

/// One colour component of a region: rows x cols values, stored row-major.
class ChannelPlane {
 public:
  ChannelPlane() = default;
  /// Throws ShapeError if values.size() != rows * cols.
  ChannelPlane(std::size_t rows, std::size_t cols,
               std::vector<std::uint8_t> values);

  /// Uniform plane.
  static ChannelPlane filled(std::size_t rows, std::size_t cols,
                             std::uint8_t value);

  std::size_t rows() const noexcept { return rows_; }
  std::size_t cols() const noexcept { return cols_; }
  std::size_t size() const noexcept { return values_.size(); }

  std::uint8_t at(std::size_t row, std::size_t col) const {
    return values_[row * cols_ + col];
  }
  std::span<const std::uint8_t> values() const noexcept { return values_; }

  friend bool operator==(const ChannelPlane&, const ChannelPlane&) = default;

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<std::uint8_t> values_;
};

/// The red, green and blue planes of one region. All three share dims.
class ChannelTriple {
 public:
  /// Throws ShapeError if the planes disagree on dims.
  ChannelTriple(ChannelPlane r, ChannelPlane g, ChannelPlane b);

  const ChannelPlane& r() const noexcept { return planes_[0]; }
  const ChannelPlane& g() const noexcept { return planes_[1]; }
  const ChannelPlane& b() const noexcept { return planes_[2]; }

  /// Plane by channel index: 0 = R, 1 = G, 2 = B.
  const ChannelPlane& channel(std::size_t index) const {
    return planes_.at(index);
  }

  std::size_t rows() const noexcept { return planes_[0].rows(); }
  std::size_t cols() const noexcept { return planes_[0].cols(); }

  friend bool operator==(const ChannelTriple&, const ChannelTriple&) = default;

 private:
  std::array<ChannelPlane, 3> planes_;
};

/// Copies the region's three channels out of the image.
ChannelTriple extract_region(const RasterImage& image, const Region& region);

/// Returns a copy of `image` with the region's pixels taken from `triple`.
/// Throws BoundsError for an invalid region, ShapeError if the triple dims
/// differ from the region dims.
RasterImage insert_region(const RasterImage& image, const Region& region,
                          const ChannelTriple& triple);

}  // namespace pixmask
