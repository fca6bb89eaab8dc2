#pragma once

#include <cstdint>
#include <filesystem>
#include <span>
#include <string>
#include <vector>

namespace pixmask {

/// Whole-file read. Throws IoError.
std::vector<std::uint8_t> read_file(const std::filesystem::path& path);

/// Writes to a temporary file beside `path`, then renames it into place, so
/// `path` is either untouched or complete. Throws IoError.
void write_file_atomic(const std::filesystem::path& path,
                       std::span<const std::uint8_t> bytes);

void write_file_atomic(const std::filesystem::path& path,
                       const std::string& text);

}  // namespace pixmask
