// pixmask command line: encrypt, decrypt and analyze regions of PPM images.
//
// Exit codes: 0 success, 1 runtime failure (I/O, decode, bounds, shape),
// 2 bad usage (missing or malformed flags).

#include <cstdio>
#include <memory>
#include <optional>
#include <string>

#include "CLI11.hpp"
#include "pixmask/pixmask.h"

namespace {

constexpr int kExitFailure = 1;
constexpr int kExitUsage = 2;

struct ImageDeleter {
  void operator()(pm_image* p) const { pm_image_destroy(p); }
};
struct ReportDeleter {
  void operator()(pm_report* p) const { pm_report_destroy(p); }
};
using ImagePtr = std::unique_ptr<pm_image, ImageDeleter>;
using ReportPtr = std::unique_ptr<pm_report, ReportDeleter>;

// Carries the exit code for a failure already reported on stderr.
struct Exit {
  int code;
};

void check(pm_status status) {
  if (status != PM_OK) {
    std::fprintf(stderr, "pixmask: error: %s\n", pm_last_error());
    throw Exit{kExitFailure};
  }
}

[[noreturn]] void usage_error(const std::string& message) {
  std::fprintf(stderr, "pixmask: usage error: %s\n", message.c_str());
  throw Exit{kExitUsage};
}

pm_region parse_region_flag(const std::string& text) {
  pm_region region{};
  if (pm_region_parse(text.c_str(), &region) != PM_OK) {
    usage_error(std::string("--region: ") + pm_last_error());
  }
  return region;
}

pm_channel_perm parse_perm_flag(const std::string& text) {
  pm_channel_perm perm = PM_PERM_IDENTITY;
  if (pm_channel_perm_parse(text.c_str(), &perm) != PM_OK) {
    usage_error(std::string("--channel-perm: ") + pm_last_error());
  }
  return perm;
}

ImagePtr load(const std::string& path) {
  pm_image* image = nullptr;
  check(pm_image_load_ppm(path.c_str(), &image));
  return ImagePtr(image);
}

// Region and permutation from flags, falling back to a sidecar. Flags win.
struct Parameters {
  pm_region region{};
  pm_channel_perm perm = PM_PERM_IDENTITY;
};

Parameters resolve(const std::string& region_flag, const std::string& perm_flag,
                   const std::string& meta_path) {
  Parameters params;
  bool have_region = false;
  if (!meta_path.empty()) {
    check(pm_metadata_load(meta_path.c_str(), &params.region, &params.perm));
    have_region = true;
  }
  if (!region_flag.empty()) {
    params.region = parse_region_flag(region_flag);
    have_region = true;
  }
  if (!perm_flag.empty()) params.perm = parse_perm_flag(perm_flag);
  if (!have_region) usage_error("one of --region or --meta is required");
  return params;
}

struct EncryptArgs {
  std::string in, out, region, perm = "identity", meta_out;
};

void run_encrypt(const EncryptArgs& a) {
  const pm_region region = parse_region_flag(a.region);
  const pm_channel_perm perm = parse_perm_flag(a.perm);
  ImagePtr plain = load(a.in);
  pm_image* raw = nullptr;
  check(pm_encrypt_image(plain.get(), &region, perm, &raw));
  ImagePtr cipher(raw);
  check(pm_image_save_ppm(cipher.get(), a.out.c_str()));
  if (!a.meta_out.empty()) {
    check(pm_metadata_save(a.meta_out.c_str(), &region, perm));
  }
}

struct DecryptArgs {
  std::string in, out, region, perm, meta;
};

void run_decrypt(const DecryptArgs& a) {
  const Parameters params = resolve(a.region, a.perm, a.meta);
  ImagePtr cipher = load(a.in);
  pm_image* raw = nullptr;
  check(pm_decrypt_image(cipher.get(), &params.region, params.perm, &raw));
  ImagePtr plain(raw);
  check(pm_image_save_ppm(plain.get(), a.out.c_str()));
}

struct AnalyzeArgs {
  std::string plain, cipher, region, meta, out;
};

void run_analyze(const AnalyzeArgs& a) {
  const Parameters params = resolve(a.region, "", a.meta);
  ImagePtr plain = load(a.plain);
  ImagePtr cipher = load(a.cipher);
  pm_report* raw = nullptr;
  check(pm_report_create(plain.get(), cipher.get(), &params.region, &raw));
  ReportPtr report(raw);
  check(pm_report_save_csv(report.get(), a.out.c_str()));
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{
      "Reversible transpose-reshape scrambling of a rectangular region in a "
      "binary PPM (P6) image.\nRegions use R0:R1,C0:C1: 0-based half-open "
      "row then column ranges."};
  app.require_subcommand(1);
  app.set_version_flag("--version", pm_version());

  EncryptArgs enc;
  auto* encrypt = app.add_subcommand("encrypt", "Scramble a region");
  encrypt->add_option("--in", enc.in, "Plain PPM image")->required();
  encrypt->add_option("--out", enc.out, "Cipher PPM output")->required();
  encrypt->add_option("--region", enc.region, "R0:R1,C0:C1")->required();
  encrypt->add_option("--channel-perm", enc.perm,
                      "identity, rgb2gbr, rgb2brg, rgb2rbg, rgb2grb, rgb2bgr")
      ->capture_default_str();
  encrypt->add_option("--meta-out", enc.meta_out, "Write sidecar metadata");

  DecryptArgs dec;
  auto* decrypt = app.add_subcommand("decrypt", "Restore a scrambled region");
  decrypt->add_option("--in", dec.in, "Cipher PPM image")->required();
  decrypt->add_option("--out", dec.out, "Plain PPM output")->required();
  decrypt->add_option("--region", dec.region, "R0:R1,C0:C1");
  decrypt->add_option("--meta", dec.meta, "Sidecar written by encrypt");
  decrypt->add_option("--channel-perm", dec.perm,
                      "Channel permutation used at encryption");

  AnalyzeArgs ana;
  auto* analyze =
      app.add_subcommand("analyze", "Write a plain-vs-cipher CSV report");
  analyze->add_option("--plain", ana.plain, "Plain PPM image")->required();
  analyze->add_option("--cipher", ana.cipher, "Cipher PPM image")->required();
  analyze->add_option("--region", ana.region, "R0:R1,C0:C1");
  analyze->add_option("--meta", ana.meta, "Sidecar supplying the region");
  analyze->add_option("--out", ana.out, "CSV report output")->required();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : kExitUsage;
  }

  try {
    if (*encrypt) run_encrypt(enc);
    if (*decrypt) run_decrypt(dec);
    if (*analyze) run_analyze(ana);
  } catch (const Exit& e) {
    return e.code;
  }
  return 0;
}
