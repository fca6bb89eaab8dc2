#include <array>
#include <charconv>
#include <string>
#include <utility>

#include "pixmask/cipher.hpp"
#include "pixmask/errors.hpp"

namespace pixmask {

namespace {

constexpr std::string_view kAlgorithm = "transpose-reshape";

constexpr std::array<std::string_view, 5> kKeys = {
    "version", "region_rows", "region_cols", "channel_perm", "algorithm"};

std::optional<std::size_t> parse_index(std::string_view text) {
  std::size_t value = 0;
  const char* first = text.data();
  const char* last = text.data() + text.size();
  if (text.empty() || text.front() == '+' || text.front() == '-') {
    return std::nullopt;
  }
  auto [ptr, ec] = std::from_chars(first, last, value);
  if (ec != std::errc() || ptr != last) return std::nullopt;
  return value;
}

// "<start><sep><end>" with start < end.
std::optional<std::pair<std::size_t, std::size_t>> parse_range(
    std::string_view text, std::string_view sep) {
  const auto at = text.find(sep);
  if (at == std::string_view::npos) return std::nullopt;
  auto start = parse_index(text.substr(0, at));
  auto end = parse_index(text.substr(at + sep.size()));
  if (!start || !end || *start >= *end) return std::nullopt;
  return std::pair{*start, *end};
}

}  // namespace

std::string write_metadata(const CipherMetadata& meta) {
  std::string out;
  out += "version=" + std::to_string(meta.version) + "\n";
  out += "region_rows=" + std::to_string(meta.region.row_start) + ".." +
         std::to_string(meta.region.row_end) + "\n";
  out += "region_cols=" + std::to_string(meta.region.col_start) + ".." +
         std::to_string(meta.region.col_end) + "\n";
  out += "channel_perm=" + std::string(name_of(meta.channel_perm)) + "\n";
  out += "algorithm=" + std::string(kAlgorithm) + "\n";
  return out;
}

CipherMetadata read_metadata(std::string_view text) {
  CipherMetadata meta;
  std::array<bool, kKeys.size()> seen{};
  std::size_t line_no = 0;

  while (!text.empty()) {
    ++line_no;
    const auto eol = text.find('\n');
    std::string_view line = text.substr(0, eol);
    text = eol == std::string_view::npos ? std::string_view{}
                                         : text.substr(eol + 1);
    if (line.empty()) {
      throw ParseError(line_no, "empty line");
    }
    const auto eq = line.find('=');
    if (eq == std::string_view::npos) {
      throw ParseError(line_no, "expected key=value, got '" +
                                    std::string(line) + "'");
    }
    const std::string_view key = line.substr(0, eq);
    const std::string_view value = line.substr(eq + 1);

    std::size_t slot = kKeys.size();
    for (std::size_t k = 0; k < kKeys.size(); ++k) {
      if (kKeys[k] == key) slot = k;
    }
    if (slot == kKeys.size()) {
      throw ParseError(line_no, "unknown key '" + std::string(key) + "'");
    }
    if (seen[slot]) {
      throw ParseError(line_no, "duplicate key '" + std::string(key) + "'");
    }
    seen[slot] = true;

    const auto bad_value = [&] {
      return ParseError(line_no, "bad value '" + std::string(value) +
                                     "' for key '" + std::string(key) + "'");
    };
    switch (slot) {
      case 0: {
        if (value != std::to_string(CipherMetadata::kCurrentVersion)) {
          throw ParseError(line_no, "unsupported version '" +
                                        std::string(value) + "'");
        }
        meta.version = CipherMetadata::kCurrentVersion;
        break;
      }
      case 1: {
        auto range = parse_range(value, "..");
        if (!range) throw bad_value();
        meta.region.row_start = range->first;
        meta.region.row_end = range->second;
        break;
      }
      case 2: {
        auto range = parse_range(value, "..");
        if (!range) throw bad_value();
        meta.region.col_start = range->first;
        meta.region.col_end = range->second;
        break;
      }
      case 3: {
        auto cp = parse_channel_permutation(value);
        if (!cp) {
          throw ParseError(line_no, "unknown channel permutation '" +
                                        std::string(value) + "'");
        }
        meta.channel_perm = *cp;
        break;
      }
      case 4: {
        if (value != kAlgorithm) throw bad_value();
        break;
      }
    }
  }

  for (std::size_t k = 0; k < kKeys.size(); ++k) {
    if (!seen[k]) {
      throw ParseError(0, "missing key '" + std::string(kKeys[k]) + "'");
    }
  }
  return meta;
}

Region parse_region(std::string_view text) {
  const auto comma = text.find(',');
  if (comma != std::string_view::npos) {
    auto rows = parse_range(text.substr(0, comma), ":");
    auto cols = parse_range(text.substr(comma + 1), ":");
    if (rows && cols) {
      return {rows->first, rows->second, cols->first, cols->second};
    }
  }
  throw ParseError(0, "region '" + std::string(text) +
                          "' is not of the form R0:R1,C0:C1 with R0<R1, C0<C1");
}

}  // namespace pixmask
