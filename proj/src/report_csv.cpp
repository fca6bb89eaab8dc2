#include <charconv>
#include <cstdio>
#include <map>
#include <string>
#include <utility>

#include "pixmask/analysis.hpp"
#include "pixmask/errors.hpp"

namespace pixmask {

namespace {

constexpr std::string_view kHeader = "metric,channel,index,value";
constexpr std::array<char, 3> kChannelNames = {'r', 'g', 'b'};
constexpr std::array<std::string_view, 2> kSides = {"plain", "cipher"};

std::string fixed6(double v) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.6f", v);
  return buf;
}

void append_row(std::string& out, std::string_view metric, char channel,
                std::size_t index, const std::string& value) {
  out.append(metric).append(1, ',').append(1, channel).append(1, ',');
  out.append(std::to_string(index)).append(1, ',').append(value).append(1,
                                                                        '\n');
}

void append_summary(std::string& out, const std::string& name,
                    const std::string& value) {
  out.append("summary,").append(name).append(",,").append(value).append(1,
                                                                        '\n');
}

}  // namespace

std::string write_report_csv(const AnalysisReport& report) {
  std::string out;
  out.append(kHeader).append(1, '\n');
  const SideStats* sides[] = {&report.plain, &report.cipher};

  for (std::size_t s = 0; s < 2; ++s) {
    const std::string metric = "histogram_" + std::string(kSides[s]);
    for (std::size_t c = 0; c < 3; ++c) {
      for (std::size_t v = 0; v < 256; ++v) {
        append_row(out, metric, kChannelNames[c], v,
                   std::to_string(sides[s]->histograms[c][v]));
      }
    }
  }
  for (std::size_t s = 0; s < 2; ++s) {
    const std::string metric = "column_mean_" + std::string(kSides[s]);
    for (std::size_t c = 0; c < 3; ++c) {
      const auto& trace = sides[s]->profile[c].column_means;
      for (std::size_t j = 0; j < trace.size(); ++j) {
        append_row(out, metric, kChannelNames[c], j, fixed6(trace[j]));
      }
    }
  }
  for (std::size_t s = 0; s < 2; ++s) {
    const std::string metric = "row_mean_" + std::string(kSides[s]);
    for (std::size_t c = 0; c < 3; ++c) {
      const auto& trace = sides[s]->profile[c].row_means;
      for (std::size_t i = 0; i < trace.size(); ++i) {
        append_row(out, metric, kChannelNames[c], i, fixed6(trace[i]));
      }
    }
  }

  append_summary(out, "rows", std::to_string(report.rows));
  append_summary(out, "cols", std::to_string(report.cols));
  for (std::size_t s = 0; s < 2; ++s) {
    const std::string side(kSides[s]);
    const ChannelSums& sums = sides[s]->sums;
    append_summary(out, "sum_" + side + "_r", std::to_string(sums.r));
    append_summary(out, "sum_" + side + "_g", std::to_string(sums.g));
    append_summary(out, "sum_" + side + "_b", std::to_string(sums.b));
    append_summary(out, "total_" + side, std::to_string(sums.total));
  }
  for (std::size_t c = 0; c < 3; ++c) {
    const auto& corr = report.correlations[c];
    append_summary(out, std::string("correlation_") + kChannelNames[c],
                   corr ? fixed6(*corr) : "undefined");
  }
  return out;
}

namespace {

class CsvReader {
 public:
  explicit CsvReader(std::string_view text) : text_(text) {}

  AnalysisReport parse() {
    std::string_view line;
    if (!next_line(line) || line != kHeader) {
      throw ParseError(1, "expected header '" + std::string(kHeader) + "'");
    }
    while (next_line(line)) parse_row(line);
    return finish();
  }

 private:
  template <typename T>
  T number(std::string_view field, const char* what) const {
    T value{};
    auto [ptr, ec] =
        std::from_chars(field.data(), field.data() + field.size(), value);
    if (field.empty() || ec != std::errc() ||
        ptr != field.data() + field.size()) {
      throw ParseError(line_no_, std::string("bad ") + what + " '" +
                                     std::string(field) + "'");
    }
    return value;
  }

  bool next_line(std::string_view& line) {
    if (text_.empty()) return false;
    ++line_no_;
    const auto eol = text_.find('\n');
    line = text_.substr(0, eol);
    text_ = eol == std::string_view::npos ? std::string_view{}
                                          : text_.substr(eol + 1);
    return true;
  }

  void parse_row(std::string_view line) {
    std::array<std::string_view, 4> f;
    std::size_t count = 0;
    while (true) {
      const auto comma = line.find(',');
      if (count == f.size()) {
        throw ParseError(line_no_, "expected 4 fields");
      }
      f[count++] = line.substr(0, comma);
      if (comma == std::string_view::npos) break;
      line = line.substr(comma + 1);
    }
    if (count != f.size()) throw ParseError(line_no_, "expected 4 fields");

    if (f[0] == "summary") {
      if (!f[2].empty()) throw ParseError(line_no_, "summary rows have no index");
      parse_summary(std::string(f[1]), f[3]);
      return;
    }

    const auto us = f[0].rfind('_');
    const std::string_view kind = f[0].substr(0, us);
    const std::string_view side_name =
        us == std::string_view::npos ? std::string_view{} : f[0].substr(us + 1);
    std::size_t side = 2;
    for (std::size_t s = 0; s < 2; ++s) {
      if (side_name == kSides[s]) side = s;
    }
    if (side == 2 ||
        (kind != "histogram" && kind != "column_mean" && kind != "row_mean")) {
      throw ParseError(line_no_, "unknown metric '" + std::string(f[0]) + "'");
    }
    std::size_t channel = 3;
    for (std::size_t c = 0; c < 3; ++c) {
      if (f[1].size() == 1 && f[1][0] == kChannelNames[c]) channel = c;
    }
    if (channel == 3) {
      throw ParseError(line_no_, "unknown channel '" + std::string(f[1]) + "'");
    }
    const auto index = number<std::size_t>(f[2], "index");
    SideStats& stats = side == 0 ? report_.plain : report_.cipher;

    if (kind == "histogram") {
      std::size_t& next = hist_next_[side][channel];
      if (index != next || index >= 256) {
        throw ParseError(line_no_, "histogram index out of sequence");
      }
      stats.histograms[channel][index] =
          number<std::uint64_t>(f[3], "histogram count");
      ++next;
      return;
    }
    auto& trace = kind == "column_mean" ? stats.profile[channel].column_means
                                        : stats.profile[channel].row_means;
    if (index != trace.size()) {
      throw ParseError(line_no_, "trace index out of sequence");
    }
    trace.push_back(number<double>(f[3], "mean"));
  }

  void parse_summary(const std::string& name, std::string_view value) {
    if (summary_.contains(name)) {
      throw ParseError(line_no_, "duplicate summary '" + name + "'");
    }
    if (name.starts_with("correlation_")) {
      std::optional<double> corr;
      if (value != "undefined") {
        corr = number<double>(value, "correlation");
        if (*corr < -1.0 || *corr > 1.0) {
          throw ParseError(line_no_, "correlation outside [-1, 1]");
        }
      }
      correlations_[name] = corr;
      summary_[name] = 0;
    } else {
      summary_[name] = number<std::uint64_t>(value, "summary value");
    }
  }

  std::uint64_t take(const std::string& name) {
    auto it = summary_.find(name);
    if (it == summary_.end()) {
      throw ParseError(0, "missing summary '" + name + "'");
    }
    const std::uint64_t v = it->second;
    summary_.erase(it);
    return v;
  }

  AnalysisReport finish() {
    report_.rows = take("rows");
    report_.cols = take("cols");
    const std::uint64_t cells = report_.rows * report_.cols;
    SideStats* sides[] = {&report_.plain, &report_.cipher};
    for (std::size_t s = 0; s < 2; ++s) {
      const std::string side(kSides[s]);
      ChannelSums& sums = sides[s]->sums;
      sums.r = take("sum_" + side + "_r");
      sums.g = take("sum_" + side + "_g");
      sums.b = take("sum_" + side + "_b");
      sums.total = take("total_" + side);
      if (sums.total != sums.r + sums.g + sums.b) {
        throw ParseError(0, "total_" + side + " is not the sum of channels");
      }
      for (std::size_t c = 0; c < 3; ++c) {
        if (hist_next_[s][c] != 256) {
          throw ParseError(0, "incomplete histogram for " + side);
        }
        std::uint64_t n = 0;
        for (auto count : sides[s]->histograms[c]) n += count;
        if (n != cells) {
          throw ParseError(0, "histogram counts do not sum to rows*cols");
        }
        const auto& trace = sides[s]->profile[c];
        if (trace.column_means.size() != report_.cols ||
            trace.row_means.size() != report_.rows) {
          throw ParseError(0, "trace length does not match dims");
        }
      }
    }
    for (std::size_t c = 0; c < 3; ++c) {
      const std::string name = std::string("correlation_") + kChannelNames[c];
      take(name);
      report_.correlations[c] = correlations_.at(name);
    }
    if (!summary_.empty()) {
      throw ParseError(0, "unknown summary '" + summary_.begin()->first + "'");
    }
    return std::move(report_);
  }

  std::string_view text_;
  std::size_t line_no_ = 0;
  AnalysisReport report_;
  std::array<std::array<std::size_t, 3>, 2> hist_next_{};
  std::map<std::string, std::uint64_t> summary_;
  std::map<std::string, std::optional<double>> correlations_;
};

}  // namespace

AnalysisReport read_report_csv(std::string_view text) {
  return CsvReader(text).parse();
}

}  // namespace pixmask
