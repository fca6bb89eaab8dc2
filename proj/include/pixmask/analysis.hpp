#pragma once

#include <array>
#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "pixmask/cipher.hpp"
#include "pixmask/raster.hpp"

namespace pixmask {

/// counts[v] = number of plane elements equal to v.
using Histogram = std::array<std::uint64_t, 256>;

Histogram histogram(const ChannelPlane& plane);

struct ChannelSums {
  std::uint64_t r = 0;
  std::uint64_t g = 0;
  std::uint64_t b = 0;
  std::uint64_t total = 0;

  friend bool operator==(const ChannelSums&, const ChannelSums&) = default;
};

ChannelSums channel_sums(const ChannelTriple& triple);

/// Pearson correlation of the flattened value pairs, clamped to [-1, 1].
/// Throws ShapeError on dim mismatch and UndefinedCorrelationError if either
/// plane is constant.
double correlation(const ChannelPlane& a, const ChannelPlane& b);

/// Mean intensity of every column (length n) and every row (length m).
struct ProfileTrace {
  std::vector<double> column_means;
  std::vector<double> row_means;
};

ProfileTrace profile(const ChannelPlane& plane);

/// Per-channel traces, indexed R, G, B.
using RgbProfile = std::array<ProfileTrace, 3>;

RgbProfile rgb_profile(const ChannelTriple& triple);

/// Statistics of one side (plain or cipher) of a comparison.
struct SideStats {
  std::array<Histogram, 3> histograms{};
  ChannelSums sums;
  RgbProfile profile;
};

SideStats summarize(const ChannelTriple& triple);

struct AnalysisReport {
  std::size_t rows = 0;
  std::size_t cols = 0;
  SideStats plain;
  SideStats cipher;
  /// Plain-vs-cipher correlation per channel; empty where undefined.
  std::array<std::optional<double>, 3> correlations;
};

/// Throws ShapeError if the two triples differ in dims.
AnalysisReport compare_report(const ChannelTriple& plain,
                              const ChannelTriple& cipher);

/// Grand totals of both sides are equal.
bool sums_conserved(const AnalysisReport& report);

/// Every cipher-channel histogram equals the plain histogram of the channel
/// that cp routes into it.
bool histograms_follow(const AnalysisReport& report, ChannelPermutation cp);

/// CSV export. Header `metric,channel,index,value`; one section per metric
/// (histogram_*, column_mean_*, row_mean_*), then `summary,<name>,,<value>`
/// rows for dims, sums and correlations. Means and correlations carry six
/// decimals; an undefined correlation is written as `undefined`.
std::string write_report_csv(const AnalysisReport& report);

/// Parses write_report_csv output. Throws ParseError with the offending line.
AnalysisReport read_report_csv(std::string_view text);

}  // namespace pixmask
