#pragma once

#include <cstddef>
#include <cstdint>
#include <span>
#include <vector>

#include "pixmask/raster.hpp"

// Transpose + column-major reshape scramble of a single channel plane.
//
// An m x n plane is transposed to n x m and the result is reinterpreted as an
// m x n matrix by walking both in column-major order (down each column before
// moving right). Because ChannelPlane stores row-major, every conversion
// to and from column-major order happens inside this module.

namespace pixmask {

/// Bijection on the m*n column-major flat indices of an m x n plane.
/// map[k] is the destination index of the element at source index k.
struct PositionPermutation {
  std::size_t rows = 0;
  std::size_t cols = 0;
  std::vector<std::size_t> map;

  /// True if every index in [0, rows*cols) appears exactly once.
  bool is_bijection() const;

  /// Moves column-major `source` values to their destinations.
  std::vector<std::uint8_t> apply(std::span<const std::uint8_t> source) const;

  /// Inverse bijection.
  PositionPermutation inverse() const;
};

/// Plane values in column-major order.
std::vector<std::uint8_t> to_column_major(const ChannelPlane& plane);

/// Builds a rows x cols plane from column-major values.
ChannelPlane from_column_major(std::size_t rows, std::size_t cols,
                               std::span<const std::uint8_t> values);

/// n x m plane with out(j, i) = in(i, j).
ChannelPlane transpose(const ChannelPlane& plane);

/// Reinterprets the plane as rows x cols while keeping its column-major value
/// sequence. Throws ShapeError if rows * cols differs from the element count.
ChannelPlane reshape_column_major(const ChannelPlane& plane, std::size_t rows,
                                  std::size_t cols);

/// reshape_column_major(transpose(plane), m, n) where (m, n) are the dims
/// of the input. Dims are preserved; values are only moved.
ChannelPlane scramble_plane(const ChannelPlane& plane);

/// Inverse of scramble_plane: transpose(reshape_column_major(plane, n, m)).
ChannelPlane unscramble_plane(const ChannelPlane& plane);

/// Closed form of scramble_plane on column-major indices: the element at
/// (i, j), flat index i + j*m, lands at flat index j + i*n.
/// Throws ShapeError if either dimension is zero.
PositionPermutation scramble_permutation(std::size_t rows, std::size_t cols);

}  // namespace pixmask
