#pragma once

#include <array>
#include <cstddef>
#include <optional>
#include <string>
#include <string_view>

#include "pixmask/raster.hpp"

namespace pixmask {

/// Reassignment of the three scrambled planes among the R, G, B slots.
///
/// The name after "rgb2" lists, for output slots R, G, B in turn, which input
/// channel fills it. Rgb2Gbr sends input G to output R, input B to output G
/// and input R to output B.
enum class ChannelPermutation {
  Identity,
  Rgb2Gbr,
  Rgb2Brg,
  Rgb2Rbg,
  Rgb2Grb,
  Rgb2Bgr,
};

inline constexpr std::array<ChannelPermutation, 6> kAllChannelPermutations = {
    ChannelPermutation::Identity, ChannelPermutation::Rgb2Gbr,
    ChannelPermutation::Rgb2Brg,  ChannelPermutation::Rgb2Rbg,
    ChannelPermutation::Rgb2Grb,  ChannelPermutation::Rgb2Bgr,
};

/// For each output slot (0 = R, 1 = G, 2 = B), the input channel feeding it.
std::array<std::size_t, 3> source_channels(ChannelPermutation cp);

ChannelPermutation inverse(ChannelPermutation cp);

/// Canonical ASCII name: "identity", "rgb2gbr", "rgb2brg", ...
std::string_view name_of(ChannelPermutation cp);

/// Accepts canonical names plus "rgb2rgb", "rgb->xyz" and "rgb→xyz" spellings.
std::optional<ChannelPermutation> parse_channel_permutation(
    std::string_view name);

/// Scrambles each plane, then reassigns planes to channels according to cp.
ChannelTriple encrypt_region(const ChannelTriple& triple,
                             ChannelPermutation cp);

/// Undoes the channel reassignment, then unscrambles each plane.
ChannelTriple decrypt_region(const ChannelTriple& triple,
                             ChannelPermutation cp);

/// Encrypts the region in place of the original pixels; everything outside
/// the region is copied verbatim. Throws BoundsError for a bad region.
RasterImage encrypt_image(const RasterImage& image, const Region& region,
                          ChannelPermutation cp);

RasterImage decrypt_image(const RasterImage& image, const Region& region,
                          ChannelPermutation cp);

/// Parameters needed to decrypt. The transform is keyless, so this is the
/// entire state.
struct CipherMetadata {
  static constexpr int kCurrentVersion = 1;

  Region region;
  ChannelPermutation channel_perm = ChannelPermutation::Identity;
  int version = kCurrentVersion;

  friend bool operator==(const CipherMetadata&,
                         const CipherMetadata&) = default;
};

/// Sidecar text, LF-terminated lines in fixed order:
///
///   version=1
///   region_rows=54..136
///   region_cols=61..124
///   channel_perm=identity
///   algorithm=transpose-reshape
std::string write_metadata(const CipherMetadata& meta);

/// Parses sidecar text. Throws ParseError (with line number) on malformed
/// lines, unknown or duplicate keys, missing keys, bad values.
CipherMetadata read_metadata(std::string_view text);

/// Parses the `R0:R1,C0:C1` region grammar (0-based, half-open, rows first).
/// Throws ParseError on malformed text.
Region parse_region(std::string_view text);

}  // namespace pixmask
