// Exercises the extern "C" surface only; no C++ core headers.
#include <gtest/gtest.h>

#include <cstring>
#include <filesystem>
#include <memory>
#include <random>
#include <string>
#include <vector>

#include "pixmask/pixmask.h"

namespace {

struct ImageDeleter {
  void operator()(pm_image* p) const { pm_image_destroy(p); }
};
struct ReportDeleter {
  void operator()(pm_report* p) const { pm_report_destroy(p); }
};
using ImagePtr = std::unique_ptr<pm_image, ImageDeleter>;
using ReportPtr = std::unique_ptr<pm_report, ReportDeleter>;

ImagePtr make_image(std::size_t w, std::size_t h, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  std::vector<std::uint8_t> rgb(3 * w * h);
  for (auto& v : rgb) v = static_cast<std::uint8_t>(rng());
  pm_image* img = nullptr;
  EXPECT_EQ(pm_image_create(w, h, rgb.data(), rgb.size(), &img), PM_OK);
  return ImagePtr(img);
}

TEST(CApi, ImageLifecycle) {
  const std::uint8_t rgb[] = {1, 2, 3, 4, 5, 6};
  pm_image* raw = nullptr;
  ASSERT_EQ(pm_image_create(2, 1, rgb, sizeof rgb, &raw), PM_OK);
  ImagePtr img(raw);
  EXPECT_EQ(pm_image_width(img.get()), 2u);
  EXPECT_EQ(pm_image_height(img.get()), 1u);
  std::uint8_t out[6] = {};
  ASSERT_EQ(pm_image_pixels(img.get(), out, sizeof out), PM_OK);
  EXPECT_EQ(std::memcmp(out, rgb, sizeof rgb), 0);
  EXPECT_EQ(pm_image_pixels(img.get(), out, 5), PM_ERR_SHAPE);

  pm_image* untouched = nullptr;
  EXPECT_EQ(pm_image_create(2, 2, rgb, sizeof rgb, &untouched), PM_ERR_SHAPE);
  EXPECT_EQ(untouched, nullptr);
  EXPECT_STRNE(pm_last_error(), "");
  EXPECT_EQ(pm_image_create(1, 1, nullptr, 3, &untouched),
            PM_ERR_INVALID_ARGUMENT);
  EXPECT_EQ(pm_image_create(1, 1, rgb, 3, nullptr), PM_ERR_INVALID_ARGUMENT);
  pm_image_destroy(nullptr);
}

TEST(CApi, PpmCodecAndErrorClasses) {
  const char text[] = "P6\n1 1\n255\n\xff\xff\xff";
  pm_image* raw = nullptr;
  ASSERT_EQ(pm_image_decode_ppm(reinterpret_cast<const std::uint8_t*>(text),
                                sizeof text - 1, &raw),
            PM_OK);
  ImagePtr img(raw);
  EXPECT_STREQ(pm_last_error(), "");
  std::uint8_t* bytes = nullptr;
  std::size_t len = 0;
  ASSERT_EQ(pm_image_encode_ppm(img.get(), &bytes, &len), PM_OK);
  EXPECT_EQ(std::string(reinterpret_cast<char*>(bytes), len),
            std::string(text, sizeof text - 1));
  pm_free(bytes);

  const struct {
    std::string data;
    pm_ppm_error code;
  } cases[] = {
      {"P5\n1 1\n255\n\0\0\0", PM_PPM_BAD_MAGIC},
      {"P6\n1 1\n65535\n", PM_PPM_UNSUPPORTED_MAXVAL},
      {"P6\n1 1\n255\n\0\0", PM_PPM_TRUNCATED_PAYLOAD},
  };
  for (const auto& c : cases) {
    pm_image* none = nullptr;
    EXPECT_EQ(pm_image_decode_ppm(
                  reinterpret_cast<const std::uint8_t*>(c.data.data()),
                  c.data.size(), &none),
              PM_ERR_PPM);
    EXPECT_EQ(pm_last_ppm_error(), c.code);
    EXPECT_EQ(none, nullptr);
  }
}

TEST(CApi, RegionAndPermutationParsing) {
  pm_region r{};
  ASSERT_EQ(pm_region_parse("54:136,61:124", &r), PM_OK);
  EXPECT_EQ(r.row_start, 54u);
  EXPECT_EQ(r.col_end, 124u);
  EXPECT_EQ(pm_region_parse("54-136", &r), PM_ERR_PARSE);

  pm_channel_perm p = PM_PERM_IDENTITY;
  ASSERT_EQ(pm_channel_perm_parse("rgb2brg", &p), PM_OK);
  EXPECT_EQ(p, PM_PERM_RGB2BRG);
  EXPECT_STREQ(pm_channel_perm_name(p), "rgb2brg");
  EXPECT_EQ(pm_channel_perm_parse("rgb2xyz", &p), PM_ERR_PARSE);
  EXPECT_EQ(pm_channel_perm_name(static_cast<pm_channel_perm>(17)), nullptr);

  ImagePtr img = make_image(212, 158, 1);
  const pm_region too_tall{0, 200, 0, 10};
  EXPECT_EQ(pm_region_validate(&too_tall, img.get()), PM_ERR_BOUNDS);
  EXPECT_NE(std::string(pm_last_error()).find("row"), std::string::npos);
}

TEST(CApi, EncryptDecryptRoundTrip) {
  ImagePtr plain = make_image(212, 158, 2);
  const pm_region region{54, 136, 61, 124};
  for (int p = PM_PERM_IDENTITY; p <= PM_PERM_RGB2BGR; ++p) {
    const auto perm = static_cast<pm_channel_perm>(p);
    pm_image* enc = nullptr;
    ASSERT_EQ(pm_encrypt_image(plain.get(), &region, perm, &enc), PM_OK);
    ImagePtr cipher(enc);
    EXPECT_FALSE(pm_image_equal(plain.get(), cipher.get()));
    pm_image* dec = nullptr;
    ASSERT_EQ(pm_decrypt_image(cipher.get(), &region, perm, &dec), PM_OK);
    ImagePtr back(dec);
    EXPECT_TRUE(pm_image_equal(plain.get(), back.get()));
  }
  pm_image* none = nullptr;
  const pm_region bad{0, 1, 0, 500};
  EXPECT_EQ(pm_encrypt_image(plain.get(), &bad, PM_PERM_IDENTITY, &none),
            PM_ERR_BOUNDS);
  EXPECT_EQ(pm_encrypt_image(plain.get(), &region,
                             static_cast<pm_channel_perm>(9), &none),
            PM_ERR_INVALID_ARGUMENT);
}

TEST(CApi, Metadata) {
  const pm_region region{54, 136, 61, 124};
  char* text = nullptr;
  ASSERT_EQ(pm_metadata_format(&region, PM_PERM_IDENTITY, &text), PM_OK);
  EXPECT_STREQ(text,
               "version=1\nregion_rows=54..136\nregion_cols=61..124\n"
               "channel_perm=identity\nalgorithm=transpose-reshape\n");
  pm_region back{};
  pm_channel_perm perm = PM_PERM_RGB2BGR;
  ASSERT_EQ(pm_metadata_parse(text, &back, &perm), PM_OK);
  EXPECT_EQ(back.row_end, 136u);
  EXPECT_EQ(perm, PM_PERM_IDENTITY);
  pm_free(text);
  EXPECT_EQ(pm_metadata_parse("version=1\n", &back, &perm), PM_ERR_PARSE);

  const auto path = std::filesystem::temp_directory_path() / "pixmask_capi.meta";
  ASSERT_EQ(pm_metadata_save(path.c_str(), &region, PM_PERM_RGB2GRB), PM_OK);
  ASSERT_EQ(pm_metadata_load(path.c_str(), &back, &perm), PM_OK);
  EXPECT_EQ(perm, PM_PERM_RGB2GRB);
  std::filesystem::remove(path);
  EXPECT_EQ(pm_metadata_load(path.c_str(), &back, &perm), PM_ERR_IO);
}

TEST(CApi, ReportFromImages) {
  ImagePtr plain = make_image(40, 30, 3);
  const pm_region region{5, 25, 4, 36};
  pm_image* enc = nullptr;
  ASSERT_EQ(pm_encrypt_image(plain.get(), &region, PM_PERM_RGB2GBR, &enc),
            PM_OK);
  ImagePtr cipher(enc);

  pm_report* raw = nullptr;
  ASSERT_EQ(pm_report_create(plain.get(), cipher.get(), &region, &raw), PM_OK);
  ReportPtr report(raw);

  std::size_t rows = 0, cols = 0;
  ASSERT_EQ(pm_report_dims(report.get(), &rows, &cols), PM_OK);
  EXPECT_EQ(rows, 20u);
  EXPECT_EQ(cols, 32u);

  std::uint64_t pt = 0, ct = 0;
  ASSERT_EQ(pm_report_total(report.get(), PM_SIDE_PLAIN, &pt), PM_OK);
  ASSERT_EQ(pm_report_total(report.get(), PM_SIDE_CIPHER, &ct), PM_OK);
  EXPECT_EQ(pt, ct);

  std::uint64_t plain_g[256], cipher_r[256];
  ASSERT_EQ(pm_report_histogram(report.get(), PM_SIDE_PLAIN, 1, plain_g), PM_OK);
  ASSERT_EQ(pm_report_histogram(report.get(), PM_SIDE_CIPHER, 0, cipher_r),
            PM_OK);
  EXPECT_EQ(std::memcmp(plain_g, cipher_r, sizeof plain_g), 0);
  EXPECT_EQ(pm_report_histogram(report.get(), PM_SIDE_CIPHER, 3, cipher_r),
            PM_ERR_INVALID_ARGUMENT);

  int follows = 0;
  ASSERT_EQ(pm_report_histograms_follow(report.get(), PM_PERM_RGB2GBR,
                                        &follows),
            PM_OK);
  EXPECT_EQ(follows, 1);
  ASSERT_EQ(pm_report_histograms_follow(report.get(), PM_PERM_IDENTITY,
                                        &follows),
            PM_OK);
  EXPECT_EQ(follows, 0);

  double corr = 2.0;
  ASSERT_EQ(pm_report_correlation(report.get(), 0, &corr), PM_OK);
  EXPECT_GE(corr, -1.0);
  EXPECT_LE(corr, 1.0);

  char* csv = nullptr;
  ASSERT_EQ(pm_report_to_csv(report.get(), &csv), PM_OK);
  pm_report* parsed = nullptr;
  ASSERT_EQ(pm_report_parse_csv(csv, &parsed), PM_OK);
  ReportPtr reparsed(parsed);
  char* csv2 = nullptr;
  ASSERT_EQ(pm_report_to_csv(reparsed.get(), &csv2), PM_OK);
  EXPECT_STREQ(csv, csv2);
  pm_free(csv);
  pm_free(csv2);

  ImagePtr small = make_image(10, 10, 4);
  pm_report* none = nullptr;
  EXPECT_EQ(pm_report_create(plain.get(), small.get(), &region, &none),
            PM_ERR_SHAPE);
}

TEST(CApi, UndefinedCorrelation) {
  std::vector<std::uint8_t> rgb(3 * 4 * 4, 0);
  for (std::size_t k = 0; k < rgb.size(); k += 3) rgb[k + 1] = k % 7;
  pm_image* raw = nullptr;
  ASSERT_EQ(pm_image_create(4, 4, rgb.data(), rgb.size(), &raw), PM_OK);
  ImagePtr img(raw);
  const pm_region full{0, 4, 0, 4};
  pm_report* rep = nullptr;
  ASSERT_EQ(pm_report_create(img.get(), img.get(), &full, &rep), PM_OK);
  ReportPtr report(rep);
  double corr = 0;
  EXPECT_EQ(pm_report_correlation(report.get(), 0, &corr), PM_ERR_UNDEFINED);
  EXPECT_EQ(pm_report_correlation(report.get(), 1, &corr), PM_OK);
  EXPECT_DOUBLE_EQ(corr, 1.0);
}

}  // namespace
