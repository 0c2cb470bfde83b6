#pragma once

#include <array>
#include <optional>
#include <ostream>
#include <string>
#include <vector>

#include "mordell/family.hpp"
#include "mordell/heights.hpp"
#include "mordell/scan.hpp"

namespace mordell::cli {

enum ExitCode : int {
  kSuccess = 0,
  kUsage = 1,
  kDegenerate = 2,
  kVerificationFailure = 3,
};

struct GenOptions {
  std::string a, b, c;
  bool with_heights = false;
  Precision precision;
  OutputFormat format = OutputFormat::Json;
};

struct VerifyOptions {
  bool print_poly = false;
  std::optional<std::string> perturb;
  /// Specialize a, b, c instead of checking symbolically.
  std::optional<std::array<std::string, 3>> params;
  /// Extra identities `lhs = rhs` (or a bare expression, read as `= 0`).
  std::vector<std::string> checks;
};

struct RegulatorOptions {
  std::string d;
  std::vector<std::string> points;
  Precision precision;
  OutputFormat format = OutputFormat::Json;
};

int cmd_gen(const GenOptions& options, std::ostream& out, std::ostream& err);
int cmd_verify_identities(const VerifyOptions& options, std::ostream& out, std::ostream& err);
int cmd_scan(const ScanConfig& config, std::ostream& out, std::ostream& err);
int cmd_torsion(const std::string& d, OutputFormat format, std::ostream& out, std::ostream& err);
int cmd_regulator(const RegulatorOptions& options, std::ostream& out, std::ostream& err);

/// `lo:hi` or a single integer.
IntRange parse_range(const std::string& text);

}  // namespace mordell::cli
