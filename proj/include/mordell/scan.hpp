#pragma once

#include <optional>
#include <ostream>
#include <string>
#include <vector>

#include "mordell/family.hpp"
#include "mordell/heights.hpp"

namespace mordell {

/// Inclusive bounds; lo > hi denotes an empty range.
struct IntRange {
  Integer lo;
  Integer hi;
};

enum class Ordering {
  None,
  NonDecreasing,  // a <= b <= c
  Increasing,     // a < b < c
};

enum class OutputFormat { Json, Csv };

struct ScanConfig {
  IntRange a{1, 1};
  IntRange b{1, 1};
  IntRange c{1, 1};
  Ordering ordering = Ordering::None;
  Precision precision;
  OutputFormat format = OutputFormat::Json;
  std::optional<std::string> out_path;
  /// 0 picks std::thread::hardware_concurrency().
  unsigned threads = 0;
};

struct ScanRow {
  FamilyInstance instance;
  std::optional<HeightReport> heights;
  /// Height computation failure, recorded instead of aborting the scan.
  std::optional<std::string> error;
};

struct ScanResult {
  std::vector<ScanRow> rows;
  std::vector<ScanRow> degenerate;
};

/// Builds every instance in the grid (skipping (0, 0, 0)) and computes height
/// reports for the non-degenerate ones on a worker pool. Rows come back in
/// lexicographic (a, b, c) order whatever the completion order.
ScanResult run_scan(const ScanConfig& config);

void write_scan(const ScanResult& result, OutputFormat format, unsigned digits, std::ostream& out);

}  // namespace mordell
