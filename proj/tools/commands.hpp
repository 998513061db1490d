#pragma once

#include <cstdint>
#include <map>
#include <ostream>
#include <string>

namespace slocc::cli {

enum ExitCode : int { kOk = 0, kUsage = 1, kParse = 2, kDomain = 3, kIo = 4 };

enum class Format { Json, Csv };

struct Tolerances {
  double psd = 1e-10;
  double membership = 1e-9;
  double witness = 1e-9;
  double hull = 1e-6;
  double inplane = 1e-3;

  /// Applies KEY=VAL; returns false for an unknown key or bad value.
  bool apply(const std::string& assignment);
};

struct RunConfig {
  Format format = Format::Json;
  Tolerances tol;
  std::uint64_t seed = 0;
  std::uint64_t n = 0;
  unsigned threads = 0;
};

int cmd_classify(const std::string& input, const RunConfig& cfg, std::ostream& out, std::ostream& err);
int cmd_chsh(const std::string& input, const RunConfig& cfg, std::ostream& out, std::ostream& err);
int cmd_duality(const std::string& first, const std::string& second, const RunConfig& cfg, std::ostream& out,
                std::ostream& err);
int cmd_i3322_scan(const std::string& out_dir, const RunConfig& cfg, std::ostream& out, std::ostream& err);
int cmd_geometry(const std::string& out_dir, const RunConfig& cfg, std::ostream& out, std::ostream& err);

}  // namespace slocc::cli
