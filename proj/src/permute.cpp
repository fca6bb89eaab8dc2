#include "pixmask/permute.hpp"

#include <string>
#include <utility>

#include "pixmask/errors.hpp"

namespace pixmask {

bool PositionPermutation::is_bijection() const {
  if (map.size() != rows * cols) return false;
  std::vector<bool> seen(map.size(), false);
  for (std::size_t dst : map) {
    if (dst >= map.size() || seen[dst]) return false;
    seen[dst] = true;
  }
  return true;
}

std::vector<std::uint8_t> PositionPermutation::apply(
    std::span<const std::uint8_t> source) const {
  if (source.size() != map.size()) {
    throw ShapeError("permutation over " + std::to_string(map.size()) +
                     " indices applied to " + std::to_string(source.size()) +
                     " values");
  }
  std::vector<std::uint8_t> out(source.size());
  for (std::size_t k = 0; k < map.size(); ++k) out[map[k]] = source[k];
  return out;
}

PositionPermutation PositionPermutation::inverse() const {
  PositionPermutation inv{rows, cols, std::vector<std::size_t>(map.size())};
  for (std::size_t k = 0; k < map.size(); ++k) inv.map[map[k]] = k;
  return inv;
}

std::vector<std::uint8_t> to_column_major(const ChannelPlane& plane) {
  const std::size_t m = plane.rows();
  const std::size_t n = plane.cols();
  std::vector<std::uint8_t> out(m * n);
  for (std::size_t j = 0; j < n; ++j) {
    for (std::size_t i = 0; i < m; ++i) out[i + j * m] = plane.at(i, j);
  }
  return out;
}

ChannelPlane from_column_major(std::size_t rows, std::size_t cols,
                               std::span<const std::uint8_t> values) {
  if (values.size() != rows * cols) {
    throw ShapeError("cannot fill " + std::to_string(rows) + "x" +
                     std::to_string(cols) + " from " +
                     std::to_string(values.size()) + " values");
  }
  std::vector<std::uint8_t> row_major(values.size());
  for (std::size_t j = 0; j < cols; ++j) {
    for (std::size_t i = 0; i < rows; ++i) {
      row_major[i * cols + j] = values[i + j * rows];
    }
  }
  return ChannelPlane(rows, cols, std::move(row_major));
}

ChannelPlane transpose(const ChannelPlane& plane) {
  const std::size_t m = plane.rows();
  const std::size_t n = plane.cols();
  std::vector<std::uint8_t> out(m * n);
  for (std::size_t i = 0; i < m; ++i) {
    for (std::size_t j = 0; j < n; ++j) out[j * m + i] = plane.at(i, j);
  }
  return ChannelPlane(n, m, std::move(out));
}

ChannelPlane reshape_column_major(const ChannelPlane& plane, std::size_t rows,
                                  std::size_t cols) {
  if (rows * cols != plane.size()) {
    throw ShapeError("cannot reshape " + std::to_string(plane.rows()) + "x" +
                     std::to_string(plane.cols()) + " to " +
                     std::to_string(rows) + "x" + std::to_string(cols));
  }
  return from_column_major(rows, cols, to_column_major(plane));
}

ChannelPlane scramble_plane(const ChannelPlane& plane) {
  // [c, p] is taken before the transpose, so the output keeps the input dims.
  const std::size_t c = plane.rows();
  const std::size_t p = plane.cols();
  return reshape_column_major(transpose(plane), c, p);
}

ChannelPlane unscramble_plane(const ChannelPlane& plane) {
  return transpose(reshape_column_major(plane, plane.cols(), plane.rows()));
}

PositionPermutation scramble_permutation(std::size_t rows, std::size_t cols) {
  if (rows == 0 || cols == 0) {
    throw ShapeError("permutation dims must be at least 1x1");
  }
  PositionPermutation perm{rows, cols, std::vector<std::size_t>(rows * cols)};
  for (std::size_t j = 0; j < cols; ++j) {
    for (std::size_t i = 0; i < rows; ++i) perm.map[i + j * rows] = j + i * cols;
  }
  return perm;
}

}  // namespace pixmask
