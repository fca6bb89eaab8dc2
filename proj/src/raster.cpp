#include "pixmask/raster.hpp"

#include <string>
#include <utility>

#include "pixmask/errors.hpp"

namespace pixmask {

RasterImage::RasterImage(std::size_t width, std::size_t height,
                         std::vector<Rgb> pixels)
    : width_(width), height_(height), pixels_(std::move(pixels)) {
  if (width_ == 0 || height_ == 0) {
    throw ShapeError("image dimensions must be at least 1x1, got " +
                     std::to_string(width_) + "x" + std::to_string(height_));
  }
  if (pixels_.size() / width_ != height_ || pixels_.size() % width_ != 0) {
    throw ShapeError("pixel count " + std::to_string(pixels_.size()) +
                     " does not match " + std::to_string(width_) + "x" +
                     std::to_string(height_));
  }
}

RasterImage RasterImage::from_interleaved(std::size_t width,
                                          std::size_t height,
                                          std::span<const std::uint8_t> rgb) {
  if (rgb.size() % 3 != 0) {
    throw ShapeError("interleaved RGB length " + std::to_string(rgb.size()) +
                     " is not a multiple of 3");
  }
  std::vector<Rgb> pixels(rgb.size() / 3);
  for (std::size_t k = 0; k < pixels.size(); ++k) {
    pixels[k] = {rgb[3 * k], rgb[3 * k + 1], rgb[3 * k + 2]};
  }
  return RasterImage(width, height, std::move(pixels));
}

RasterImage RasterImage::filled(std::size_t width, std::size_t height,
                                Rgb value) {
  return RasterImage(width, height, std::vector<Rgb>(width * height, value));
}

const Rgb& RasterImage::at(std::size_t row, std::size_t col) const {
  if (row >= height_ || col >= width_) {
    throw BoundsError("pixel (" + std::to_string(row) + ", " +
                      std::to_string(col) + ") outside " +
                      std::to_string(width_) + "x" + std::to_string(height_) +
                      " image");
  }
  return pixels_[row * width_ + col];
}

std::vector<std::uint8_t> RasterImage::interleaved() const {
  std::vector<std::uint8_t> out;
  out.reserve(pixels_.size() * 3);
  for (const Rgb& p : pixels_) {
    out.push_back(p.r);
    out.push_back(p.g);
    out.push_back(p.b);
  }
  return out;
}

Region Region::from_one_based_inclusive(std::size_t first_row,
                                        std::size_t last_row,
                                        std::size_t first_col,
                                        std::size_t last_col) {
  if (first_row == 0 || first_col == 0) {
    throw BoundsError("1-based selection cannot start at 0");
  }
  return {first_row - 1, last_row, first_col - 1, last_col};
}

namespace {

void check_axis(const char* axis, std::size_t start, std::size_t end,
                std::size_t limit) {
  if (start >= end || end > limit) {
    throw BoundsError(std::string(axis) + " range [" + std::to_string(start) +
                      ", " + std::to_string(end) + ") invalid for extent " +
                      std::to_string(limit));
  }
}

}  // namespace

void Region::validate(std::size_t width, std::size_t height) const {
  check_axis("row", row_start, row_end, height);
  check_axis("column", col_start, col_end, width);
}

ChannelPlane::ChannelPlane(std::size_t rows, std::size_t cols,
                           std::vector<std::uint8_t> values)
    : rows_(rows), cols_(cols), values_(std::move(values)) {
  if (values_.size() != rows_ * cols_) {
    throw ShapeError("plane of " + std::to_string(rows_) + "x" +
                     std::to_string(cols_) + " needs " +
                     std::to_string(rows_ * cols_) + " values, got " +
                     std::to_string(values_.size()));
  }
}

ChannelPlane ChannelPlane::filled(std::size_t rows, std::size_t cols,
                                  std::uint8_t value) {
  return ChannelPlane(rows, cols, std::vector<std::uint8_t>(rows * cols, value));
}

ChannelTriple::ChannelTriple(ChannelPlane r, ChannelPlane g, ChannelPlane b)
    : planes_{std::move(r), std::move(g), std::move(b)} {
  for (const ChannelPlane& p : planes_) {
    if (p.rows() != planes_[0].rows() || p.cols() != planes_[0].cols()) {
      throw ShapeError("channel planes must share dimensions");
    }
  }
}

ChannelTriple extract_region(const RasterImage& image, const Region& region) {
  region.validate(image.width(), image.height());
  const std::size_t m = region.rows();
  const std::size_t n = region.cols();
  std::vector<std::uint8_t> r(m * n), g(m * n), b(m * n);
  const auto pixels = image.pixels();
  for (std::size_t i = 0; i < m; ++i) {
    const std::size_t src_row = (region.row_start + i) * image.width();
    for (std::size_t j = 0; j < n; ++j) {
      const Rgb& p = pixels[src_row + region.col_start + j];
      r[i * n + j] = p.r;
      g[i * n + j] = p.g;
      b[i * n + j] = p.b;
    }
  }
  return ChannelTriple(ChannelPlane(m, n, std::move(r)),
                       ChannelPlane(m, n, std::move(g)),
                       ChannelPlane(m, n, std::move(b)));
}

RasterImage insert_region(const RasterImage& image, const Region& region,
                          const ChannelTriple& triple) {
  region.validate(image.width(), image.height());
  const std::size_t m = region.rows();
  const std::size_t n = region.cols();
  if (triple.rows() != m || triple.cols() != n) {
    throw ShapeError("triple is " + std::to_string(triple.rows()) + "x" +
                     std::to_string(triple.cols()) + " but region is " +
                     std::to_string(m) + "x" + std::to_string(n));
  }
  std::vector<Rgb> pixels(image.pixels().begin(), image.pixels().end());
  const auto r = triple.r().values();
  const auto g = triple.g().values();
  const auto b = triple.b().values();
  for (std::size_t i = 0; i < m; ++i) {
    const std::size_t dst_row = (region.row_start + i) * image.width();
    for (std::size_t j = 0; j < n; ++j) {
      pixels[dst_row + region.col_start + j] = {r[i * n + j], g[i * n + j],
                                                b[i * n + j]};
    }
  }
  return RasterImage(image.width(), image.height(), std::move(pixels));
}

}  // namespace pixmask
