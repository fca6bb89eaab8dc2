// Acceptance suite: one PASS/FAIL line per criterion, nonzero exit if any
// criterion fails. All tolerances are exact (integer / byte equality).

#include <chrono>
#include <cstdio>
#include <filesystem>
#include <functional>
#include <random>
#include <string>
#include <vector>

#include "pixmask/analysis.hpp"
#include "pixmask/cipher.hpp"
#include "pixmask/permute.hpp"
#include "pixmask/pixmask.h"
#include "pixmask/ppm.hpp"
#include "pixmask/raster.hpp"
#include "test_support.hpp"

namespace {

using namespace pixmask;
using Clock = std::chrono::steady_clock;

struct Outcome {
  bool pass;
  std::string detail;
};

double seconds_since(Clock::time_point start) {
  return std::chrono::duration<double>(Clock::now() - start).count();
}

std::uint64_t image_total(const RasterImage& image) {
  std::uint64_t total = 0;
  for (const Rgb& p : image.pixels()) total += p.r + p.g + p.b;
  return total;
}

struct Case {
  RasterImage image;
  Region region;
  ChannelPermutation cp;
};

// 200 cases spanning 1x1 through 256x256, both extremes included.
std::vector<Case> make_cases() {
  std::mt19937_64 rng(20240601);
  std::uniform_int_distribution<std::size_t> dim(1, 256);
  std::uniform_int_distribution<std::size_t> pick(0, 5);
  std::vector<Case> cases;
  auto add = [&](std::size_t w, std::size_t h, bool full) {
    auto image = testing::random_image(rng, w, h);
    const Region region =
        full ? Region::full(image) : testing::random_region(rng, w, h);
    cases.push_back({std::move(image), region, kAllChannelPermutations[pick(rng)]});
  };
  add(1, 1, true);
  add(256, 256, true);
  add(256, 1, true);
  add(1, 256, true);
  while (cases.size() < 200) add(dim(rng), dim(rng), rng() % 4 == 0);
  return cases;
}

Outcome round_trip(const std::vector<Case>& cases) {
  const auto start = Clock::now();
  std::size_t mismatches = 0;
  for (const Case& c : cases) {
    const auto bytes = write_ppm(c.image);
    const auto back = decrypt_image(encrypt_image(c.image, c.region, c.cp),
                                    c.region, c.cp);
    if (write_ppm(back) != bytes) ++mismatches;
  }
  const double elapsed = seconds_since(start);
  return {mismatches == 0 && elapsed < 10.0,
          std::to_string(cases.size()) + " cases, " +
              std::to_string(mismatches) + " mismatches, " +
              std::to_string(elapsed) + " s (limit 10 s)"};
}

Outcome oracle_equivalence() {
  std::mt19937_64 rng(8);
  std::size_t checked = 0, failures = 0;
  for (std::size_t m = 1; m <= 8; ++m) {
    for (std::size_t n = 1; n <= 8; ++n) {
      for (int trial = 0; trial < 8; ++trial) {
        const auto p = testing::random_plane(rng, m, n);
        const auto s = scramble_plane(p);
        const bool oracle_ok =
            testing::to_nested(s) == testing::oracle_scramble(testing::to_nested(p));
        // Closed form written out here, independently of scramble_permutation.
        std::vector<std::uint8_t> expected(m * n);
        const auto col_major = to_column_major(p);
        for (std::size_t i = 0; i < m; ++i)
          for (std::size_t j = 0; j < n; ++j)
            expected[j + i * n] = col_major[i + j * m];
        const auto perm = scramble_permutation(m, n);
        bool closed_ok = perm.is_bijection() && to_column_major(s) == expected &&
                         perm.apply(col_major) == expected;
        for (std::size_t i = 0; i < m && closed_ok; ++i)
          for (std::size_t j = 0; j < n && closed_ok; ++j)
            closed_ok = perm.map[i + j * m] == j + i * n;
        ++checked;
        if (!oracle_ok || !closed_ok) ++failures;
      }
    }
  }
  return {failures == 0, std::to_string(checked) + " planes (all m,n <= 8), " +
                             std::to_string(failures) + " disagreements"};
}

Outcome size_and_sum(const std::vector<Case>& cases, bool check_sum) {
  std::size_t runs = 0, failures = 0;
  for (const Case& c : cases) {
    const std::uint64_t before = image_total(c.image);
    for (auto cp : kAllChannelPermutations) {
      const auto cipher = encrypt_image(c.image, c.region, cp);
      ++runs;
      const bool ok = check_sum ? image_total(cipher) == before
                                : cipher.width() == c.image.width() &&
                                      cipher.height() == c.image.height() &&
                                      cipher.pixel_count() == c.image.pixel_count();
      if (!ok) ++failures;
    }
  }
  return {failures == 0, std::to_string(runs) + " encryptions (" +
                             std::to_string(cases.size()) +
                             " cases x 6 permutations), " +
                             std::to_string(failures) + " violations"};
}

Outcome reference_geometry() {
  const auto start = Clock::now();
  const auto plain = testing::gradient_image(212, 158);
  const Region region = Region::from_one_based_inclusive(55, 136, 62, 124);
  bool ok = region == Region{54, 136, 61, 124};
  std::string detail;
  for (auto cp : kAllChannelPermutations) {
    const auto cipher = encrypt_image(plain, region, cp);
    const bool dims = cipher.width() == 212 && cipher.height() == 158;
    const bool differs =
        extract_region(cipher, region) != extract_region(plain, region);
    bool outside = true;
    for (std::size_t y = 0; y < 158; ++y)
      for (std::size_t x = 0; x < 212; ++x)
        if ((y < 54 || y >= 136 || x < 61 || x >= 124) &&
            cipher.at(y, x) != plain.at(y, x))
          outside = false;
    const bool restores = decrypt_image(cipher, region, cp) == plain;
    if (!(dims && differs && outside && restores)) {
      ok = false;
      detail += std::string(name_of(cp)) + " failed; ";
    }
  }
  const double elapsed = seconds_since(start);
  ok = ok && elapsed < 1.0;
  return {ok, "212x158 image, region rows [54,136) cols [61,124) (82x63), "
              "6 permutations, " +
                  detail + std::to_string(elapsed) + " s (limit 1 s)"};
}

Outcome histogram_law() {
  std::mt19937_64 rng(6);
  std::size_t failures = 0, runs = 0;
  for (int trial = 0; trial < 50; ++trial) {
    const auto image = testing::random_image(rng, 1 + rng() % 96, 1 + rng() % 96);
    const auto region = testing::random_region(rng, image.width(), image.height());
    const auto plain = extract_region(image, region);
    for (auto cp : kAllChannelPermutations) {
      const auto cipher = extract_region(encrypt_image(image, region, cp), region);
      const auto src = source_channels(cp);
      for (std::size_t c = 0; c < 3; ++c) {
        if (histogram(cipher.channel(c)) != histogram(plain.channel(src[c]))) {
          ++failures;
        }
      }
      ++runs;
    }
    // The named cases, spelled out.
    const auto id = extract_region(
        encrypt_image(image, region, ChannelPermutation::Identity), region);
    const auto gbr = extract_region(
        encrypt_image(image, region, ChannelPermutation::Rgb2Gbr), region);
    for (std::size_t c = 0; c < 3; ++c) {
      if (histogram(id.channel(c)) != histogram(plain.channel(c))) ++failures;
    }
    if (histogram(gbr.r()) != histogram(plain.g()) ||
        histogram(gbr.g()) != histogram(plain.b()) ||
        histogram(gbr.b()) != histogram(plain.r())) {
      ++failures;
    }
  }
  return {failures == 0, std::to_string(runs) + " region encryptions, " +
                             std::to_string(failures) + " histogram mismatches"};
}

Outcome degenerate_geometry() {
  std::mt19937_64 rng(7);
  const auto image = testing::random_image(rng, 40, 40);
  std::size_t failures = 0, checked = 0;
  for (std::size_t k = 1; k <= 32; ++k) {
    const Region row{3, 4, 2, 2 + k};
    const Region col{2, 2 + k, 5, 6};
    if (encrypt_image(image, row, ChannelPermutation::Identity) != image) {
      ++failures;
    }
    if (encrypt_image(image, col, ChannelPermutation::Identity) != image) {
      ++failures;
    }
    const Region square{1, 1 + k, 4, 4 + k};
    const auto plain = extract_region(image, square);
    const auto cipher = extract_region(
        encrypt_image(image, square, ChannelPermutation::Identity), square);
    for (std::size_t c = 0; c < 3; ++c) {
      const auto& p = plain.channel(c);
      const auto& q = cipher.channel(c);
      for (std::size_t i = 0; i < k; ++i)
        for (std::size_t j = 0; j < k; ++j)
          if (q.at(i, j) != p.at(j, i)) ++failures;
    }
    checked += 3;
  }
  return {failures == 0, std::to_string(checked) +
                             " regions (1xk, kx1, kxk for k <= 32), " +
                             std::to_string(failures) + " violations"};
}

Outcome codec() {
  std::mt19937_64 rng(100);
  std::uniform_int_distribution<std::size_t> dim(1, 128);
  std::size_t failures = 0;
  for (int trial = 0; trial < 100; ++trial) {
    const auto image = testing::random_image(rng, dim(rng), dim(rng));
    const auto bytes = write_ppm(image);
    const auto back = read_ppm(bytes);
    if (back != image || write_ppm(back) != bytes) ++failures;
  }
  auto code_of = [](const std::string& s) -> int {
    try {
      read_ppm(std::vector<std::uint8_t>(s.begin(), s.end()));
    } catch (const PpmError& e) {
      return static_cast<int>(e.code());
    }
    return -1;
  };
  const int magic = code_of(std::string("P3\n1 1\n255\n\0\0\0", 14));
  const int maxval = code_of(std::string("P6\n1 1\n65535\n\0\0\0\0\0\0", 19));
  const int trunc = code_of(std::string("P6\n1 1\n255\n\0\0", 13));
  const bool distinct =
      magic == static_cast<int>(PpmErrorCode::BadMagic) &&
      maxval == static_cast<int>(PpmErrorCode::UnsupportedMaxval) &&
      trunc == static_cast<int>(PpmErrorCode::TruncatedPayload);
  return {failures == 0 && distinct,
          "100 random images, " + std::to_string(failures) +
              " round-trip failures; malformed cases " +
              (distinct ? "raise distinct errors" : "NOT distinct")};
}

// Everything below goes through files and the C API: two PPMs in, CSV out,
// CSV parsed back, and the sum and histogram laws judged from the parsed
// report alone.
Outcome csv_from_files() {
  namespace fs = std::filesystem;
  const fs::path dir = fs::temp_directory_path() / "pixmask_acceptance";
  fs::remove_all(dir);
  fs::create_directories(dir);
  std::mt19937_64 rng(9);
  const auto plain = testing::random_image(rng, 212, 158);
  const std::string plain_path = (dir / "plain.ppm").string();
  {
    const auto bytes = write_ppm(plain);
    std::FILE* f = std::fopen(plain_path.c_str(), "wb");
    std::fwrite(bytes.data(), 1, bytes.size(), f);
    std::fclose(f);
  }
  const pm_region region{54, 136, 61, 124};
  bool ok = true;
  std::string detail;
  for (int p = PM_PERM_IDENTITY; p <= PM_PERM_RGB2BGR; ++p) {
    const auto perm = static_cast<pm_channel_perm>(p);
    const std::string cipher_path = (dir / "cipher.ppm").string();
    const std::string csv_path = (dir / "report.csv").string();
    pm_image *in = nullptr, *enc = nullptr, *cin = nullptr;
    pm_report *rep = nullptr, *parsed = nullptr;
    char *csv1 = nullptr, *csv2 = nullptr;
    int follows = 0, follows_identity = 0;
    std::uint64_t plain_total = 0, cipher_total = 0;
    const bool io =
        pm_image_load_ppm(plain_path.c_str(), &in) == PM_OK &&
        pm_encrypt_image(in, &region, perm, &enc) == PM_OK &&
        pm_image_save_ppm(enc, cipher_path.c_str()) == PM_OK &&
        pm_image_load_ppm(cipher_path.c_str(), &cin) == PM_OK &&
        pm_report_create(in, cin, &region, &rep) == PM_OK &&
        pm_report_save_csv(rep, csv_path.c_str()) == PM_OK &&
        pm_report_load_csv(csv_path.c_str(), &parsed) == PM_OK &&
        pm_report_to_csv(rep, &csv1) == PM_OK &&
        pm_report_to_csv(parsed, &csv2) == PM_OK &&
        pm_report_total(parsed, PM_SIDE_PLAIN, &plain_total) == PM_OK &&
        pm_report_total(parsed, PM_SIDE_CIPHER, &cipher_total) == PM_OK &&
        pm_report_histograms_follow(parsed, perm, &follows) == PM_OK &&
        pm_report_histograms_follow(parsed, PM_PERM_IDENTITY,
                                    &follows_identity) == PM_OK;
    const bool round_trips = io && std::string(csv1) == std::string(csv2);
    // A non-identity permutation must not also pass as identity on random data.
    const bool discriminates = p == PM_PERM_IDENTITY || follows_identity == 0;
    if (!(io && round_trips && plain_total == cipher_total && follows == 1 &&
          discriminates)) {
      ok = false;
      detail += std::string(pm_channel_perm_name(perm)) + " failed (" +
                pm_last_error() + "); ";
    }
    pm_free(csv1);
    pm_free(csv2);
    pm_report_destroy(parsed);
    pm_report_destroy(rep);
    pm_image_destroy(cin);
    pm_image_destroy(enc);
    pm_image_destroy(in);
  }
  fs::remove_all(dir);
  return {ok, "6 permutations via PPM files -> CSV -> parsed report; " + detail +
                  "sum and histogram laws checked from the parsed CSV"};
}

}  // namespace

int main() {
  const auto cases = make_cases();
  const std::vector<std::pair<const char*, std::function<Outcome()>>> criteria = {
      {"1 round-trip exactness", [&] { return round_trip(cases); }},
      {"2 oracle equivalence", oracle_equivalence},
      {"3 size invariant", [&] { return size_and_sum(cases, false); }},
      {"4 sum invariant", [&] { return size_and_sum(cases, true); }},
      {"5 212x158 reference geometry", reference_geometry},
      {"6 histogram law", histogram_law},
      {"7 degenerate geometry", degenerate_geometry},
      {"8 PPM codec", codec},
      {"9 CSV report from files", csv_from_files},
  };
  int failed = 0;
  for (const auto& [name, check] : criteria) {
    Outcome outcome{false, ""};
    try {
      outcome = check();
    } catch (const std::exception& e) {
      outcome = {false, std::string("exception: ") + e.what()};
    }
    std::printf("[%s] %s: %s\n", outcome.pass ? "PASS" : "FAIL", name,
                outcome.detail.c_str());
    if (!outcome.pass) ++failed;
  }
  std::printf("%d/%zu criteria passed\n",
              static_cast<int>(criteria.size()) - failed, criteria.size());
  return failed == 0 ? 0 : 1;
}
