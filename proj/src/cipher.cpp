#include "pixmask/cipher.hpp"

#include "pixmask/permute.hpp"

namespace pixmask {

std::array<std::size_t, 3> source_channels(ChannelPermutation cp) {
  switch (cp) {
    case ChannelPermutation::Identity: return {0, 1, 2};
    case ChannelPermutation::Rgb2Gbr: return {1, 2, 0};
    case ChannelPermutation::Rgb2Brg: return {2, 0, 1};
    case ChannelPermutation::Rgb2Rbg: return {0, 2, 1};
    case ChannelPermutation::Rgb2Grb: return {1, 0, 2};
    case ChannelPermutation::Rgb2Bgr: return {2, 1, 0};
  }
  return {0, 1, 2};
}

ChannelPermutation inverse(ChannelPermutation cp) {
  switch (cp) {
    case ChannelPermutation::Rgb2Gbr: return ChannelPermutation::Rgb2Brg;
    case ChannelPermutation::Rgb2Brg: return ChannelPermutation::Rgb2Gbr;
    default: return cp;  // identity and the three transpositions
  }
}

std::string_view name_of(ChannelPermutation cp) {
  switch (cp) {
    case ChannelPermutation::Identity: return "identity";
    case ChannelPermutation::Rgb2Gbr: return "rgb2gbr";
    case ChannelPermutation::Rgb2Brg: return "rgb2brg";
    case ChannelPermutation::Rgb2Rbg: return "rgb2rbg";
    case ChannelPermutation::Rgb2Grb: return "rgb2grb";
    case ChannelPermutation::Rgb2Bgr: return "rgb2bgr";
  }
  return "identity";
}

std::optional<ChannelPermutation> parse_channel_permutation(
    std::string_view name) {
  if (name == "identity" || name == "rgb2rgb" || name == "rgb->rgb" ||
      name == "rgb→rgb") {
    return ChannelPermutation::Identity;
  }
  for (const std::string_view prefix : {"rgb2", "rgb->", "rgb→"}) {
    if (!name.starts_with(prefix)) continue;
    const std::string_view target = name.substr(prefix.size());
    for (ChannelPermutation cp : kAllChannelPermutations) {
      if (cp != ChannelPermutation::Identity &&
          name_of(cp).substr(4) == target) {
        return cp;
      }
    }
  }
  return std::nullopt;
}

namespace {

template <typename PlaneOp>
ChannelTriple map_planes(const ChannelTriple& t, PlaneOp op) {
  return ChannelTriple(op(t.r()), op(t.g()), op(t.b()));
}

ChannelTriple relabel(const ChannelTriple& t, ChannelPermutation cp) {
  const auto src = source_channels(cp);
  return ChannelTriple(t.channel(src[0]), t.channel(src[1]),
                       t.channel(src[2]));
}

}  // namespace

ChannelTriple encrypt_region(const ChannelTriple& triple,
                             ChannelPermutation cp) {
  return relabel(map_planes(triple, scramble_plane), cp);
}

ChannelTriple decrypt_region(const ChannelTriple& triple,
                             ChannelPermutation cp) {
  return map_planes(relabel(triple, inverse(cp)), unscramble_plane);
}

RasterImage encrypt_image(const RasterImage& image, const Region& region,
                          ChannelPermutation cp) {
  return insert_region(image, region,
                       encrypt_region(extract_region(image, region), cp));
}

RasterImage decrypt_image(const RasterImage& image, const Region& region,
                          ChannelPermutation cp) {
  return insert_region(image, region,
                       decrypt_region(extract_region(image, region), cp));
}

}  // namespace pixmask
