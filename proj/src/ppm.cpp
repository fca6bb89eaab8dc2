#include "pixmask/ppm.hpp"

namespace pixmask {

namespace {

bool is_space(std::uint8_t c) {
  return c == ' ' || c == '\t' || c == '\n' || c == '\r' || c == '\v' ||
         c == '\f';
}

class HeaderScanner {
 public:
  explicit HeaderScanner(std::span<const std::uint8_t> bytes) : bytes_(bytes) {}

  std::size_t pos() const noexcept { return pos_; }
  std::size_t token_start() const noexcept { return token_start_; }

  void expect_magic() {
    if (bytes_.size() < 2 || bytes_[0] != 'P' || bytes_[1] != '6') {
      throw PpmError(PpmErrorCode::BadMagic, 0, "bad magic, expected P6");
    }
    pos_ = 2;
    if (pos_ < bytes_.size() && !is_space(bytes_[pos_]) &&
        bytes_[pos_] != '#') {
      throw PpmError(PpmErrorCode::BadMagic, pos_, "bad magic, expected P6");
    }
  }

  std::uint64_t number(const char* what) {
    skip_space_and_comments();
    const std::size_t start = pos_;
    token_start_ = start;
    std::uint64_t value = 0;
    while (pos_ < bytes_.size() && bytes_[pos_] >= '0' && bytes_[pos_] <= '9') {
      if (pos_ - start >= kMaxPpmTokenLength) {
        throw PpmError(PpmErrorCode::OversizedToken, start,
                       std::string("oversized header token for ") + what);
      }
      value = value * 10 + (bytes_[pos_] - '0');
      ++pos_;
    }
    if (pos_ == start) {
      throw PpmError(PpmErrorCode::MalformedHeader, pos_,
                     pos_ >= bytes_.size()
                         ? std::string("unexpected end of header reading ") + what
                         : std::string("expected a number for ") + what);
    }
    if (pos_ < bytes_.size() && !is_space(bytes_[pos_]) &&
        bytes_[pos_] != '#') {
      throw PpmError(PpmErrorCode::MalformedHeader, pos_,
                     std::string("junk after ") + what);
    }
    return value;
  }

  // The single whitespace byte that ends the header.
  void end_of_header() {
    if (pos_ >= bytes_.size() || !is_space(bytes_[pos_])) {
      throw PpmError(PpmErrorCode::MalformedHeader, pos_,
                     "missing whitespace after maxval");
    }
    ++pos_;
  }

 private:
  void skip_space_and_comments() {
    while (pos_ < bytes_.size()) {
      if (is_space(bytes_[pos_])) {
        ++pos_;
      } else if (bytes_[pos_] == '#') {
        while (pos_ < bytes_.size() && bytes_[pos_] != '\n') ++pos_;
      } else {
        break;
      }
    }
  }

  std::span<const std::uint8_t> bytes_;
  std::size_t pos_ = 0;
  std::size_t token_start_ = 0;
};

}  // namespace

RasterImage read_ppm(std::span<const std::uint8_t> bytes) {
  HeaderScanner scan(bytes);
  scan.expect_magic();
  const std::uint64_t width = scan.number("width");
  const std::size_t width_at = scan.token_start();
  const std::uint64_t height = scan.number("height");
  if (width == 0 || height == 0) {
    throw PpmError(PpmErrorCode::MalformedHeader, width_at,
                   "image dimensions must be nonzero");
  }
  const std::uint64_t maxval = scan.number("maxval");
  if (maxval != 255) {
    throw PpmError(PpmErrorCode::UnsupportedMaxval, scan.token_start(),
                   "unsupported maxval " + std::to_string(maxval));
  }
  scan.end_of_header();

  const std::size_t offset = scan.pos();
  const std::size_t available = bytes.size() - offset;
  const std::uint64_t pixels_available = available / 3;
  if (width > pixels_available || height > pixels_available / width) {
    throw PpmError(PpmErrorCode::TruncatedPayload, bytes.size(),
                   "truncated payload: " + std::to_string(width) + "x" +
                       std::to_string(height) + " image needs more than the " +
                       std::to_string(available) + " bytes present");
  }
  const std::uint64_t needed = 3 * width * height;
  if (available > needed) {
    throw PpmError(PpmErrorCode::TrailingData, offset + needed,
                   "trailing data after payload");
  }
  return RasterImage::from_interleaved(width, height, bytes.subspan(offset));
}

std::vector<std::uint8_t> write_ppm(const RasterImage& image) {
  const std::string header = "P6\n" + std::to_string(image.width()) + " " +
                             std::to_string(image.height()) + "\n255\n";
  std::vector<std::uint8_t> out(header.begin(), header.end());
  out.reserve(header.size() + image.pixel_count() * 3);
  for (const Rgb& p : image.pixels()) {
    out.push_back(p.r);
    out.push_back(p.g);
    out.push_back(p.b);
  }
  return out;
}

}  // namespace pixmask
