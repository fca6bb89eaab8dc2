#include "pixmask/analysis.hpp"

#include <algorithm>
#include <cmath>
#include <functional>
#include <numeric>

#include "pixmask/errors.hpp"

namespace pixmask {

Histogram histogram(const ChannelPlane& plane) {
  Histogram counts{};
  for (std::uint8_t v : plane.values()) ++counts[v];
  return counts;
}

namespace {

std::uint64_t plane_sum(const ChannelPlane& plane) {
  return std::accumulate(plane.values().begin(), plane.values().end(),
                         std::uint64_t{0});
}

bool is_constant(const ChannelPlane& plane) {
  const auto v = plane.values();
  return std::adjacent_find(v.begin(), v.end(), std::not_equal_to<>()) ==
         v.end();
}

}  // namespace

ChannelSums channel_sums(const ChannelTriple& triple) {
  ChannelSums s;
  s.r = plane_sum(triple.r());
  s.g = plane_sum(triple.g());
  s.b = plane_sum(triple.b());
  s.total = s.r + s.g + s.b;
  return s;
}

double correlation(const ChannelPlane& a, const ChannelPlane& b) {
  if (a.rows() != b.rows() || a.cols() != b.cols()) {
    throw ShapeError("correlation needs planes of equal dims");
  }
  if (is_constant(a) || is_constant(b)) {
    throw UndefinedCorrelationError(
        "undefined correlation: a plane has zero variance");
  }
  const double count = static_cast<double>(a.size());
  const double mean_a = static_cast<double>(plane_sum(a)) / count;
  const double mean_b = static_cast<double>(plane_sum(b)) / count;
  double cov = 0.0, var_a = 0.0, var_b = 0.0;
  const auto va = a.values();
  const auto vb = b.values();
  for (std::size_t k = 0; k < va.size(); ++k) {
    const double da = va[k] - mean_a;
    const double db = vb[k] - mean_b;
    cov += da * db;
    var_a += da * da;
    var_b += db * db;
  }
  return std::clamp(cov / std::sqrt(var_a * var_b), -1.0, 1.0);
}

ProfileTrace profile(const ChannelPlane& plane) {
  const std::size_t m = plane.rows();
  const std::size_t n = plane.cols();
  std::vector<std::uint64_t> col_sums(n, 0), row_sums(m, 0);
  for (std::size_t i = 0; i < m; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      col_sums[j] += plane.at(i, j);
      row_sums[i] += plane.at(i, j);
    }
  }
  ProfileTrace trace;
  trace.column_means.reserve(n);
  trace.row_means.reserve(m);
  for (std::uint64_t s : col_sums) {
    trace.column_means.push_back(static_cast<double>(s) /
                                 static_cast<double>(m));
  }
  for (std::uint64_t s : row_sums) {
    trace.row_means.push_back(static_cast<double>(s) / static_cast<double>(n));
  }
  return trace;
}

RgbProfile rgb_profile(const ChannelTriple& triple) {
  return {profile(triple.r()), profile(triple.g()), profile(triple.b())};
}

SideStats summarize(const ChannelTriple& triple) {
  SideStats s;
  for (std::size_t c = 0; c < 3; ++c) {
    s.histograms[c] = histogram(triple.channel(c));
  }
  s.sums = channel_sums(triple);
  s.profile = rgb_profile(triple);
  return s;
}

AnalysisReport compare_report(const ChannelTriple& plain,
                              const ChannelTriple& cipher) {
  if (plain.rows() != cipher.rows() || plain.cols() != cipher.cols()) {
    throw ShapeError("plain and cipher regions differ in dims");
  }
  AnalysisReport report;
  report.rows = plain.rows();
  report.cols = plain.cols();
  report.plain = summarize(plain);
  report.cipher = summarize(cipher);
  for (std::size_t c = 0; c < 3; ++c) {
    try {
      report.correlations[c] =
          correlation(plain.channel(c), cipher.channel(c));
    } catch (const UndefinedCorrelationError&) {
      report.correlations[c] = std::nullopt;
    }
  }
  return report;
}

bool sums_conserved(const AnalysisReport& report) {
  return report.plain.sums.total == report.cipher.sums.total;
}

bool histograms_follow(const AnalysisReport& report, ChannelPermutation cp) {
  const auto src = source_channels(cp);
  for (std::size_t c = 0; c < 3; ++c) {
    if (report.cipher.histograms[c] != report.plain.histograms[src[c]]) {
      return false;
    }
  }
  return true;
}

}  // namespace pixmask
