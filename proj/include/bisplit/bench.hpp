#pragma once

#include <filesystem>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "bisplit/layout.hpp"

namespace bisplit {

struct BenchSetting {
  std::string name;
  RunConfig config;
};

/// The four experimental settings (cell types = top fixed or genes = bottom
/// fixed, alphabetical or `sweeps`-round barycenter) times {crs, crsv}.
/// Names look like "top-alphabetical-crs" and "bottom-barycenter10-crsv".
std::vector<BenchSetting> standard_settings(std::size_t sweeps = 10);

/// One table row. crossings is the initial count; nt / nb are the sizes of
/// the fixed and the free layer; time_ms covers the split run only.
struct BenchRow {
  std::string dataset;
  std::string config;
  std::uint64_t crossings = 0;
  std::size_t nt = 0;
  std::size_t nb = 0;
  std::size_t splits = 0;
  std::size_t split_vertices = 0;
  std::size_t max_splits = 0;
  double time_ms = 0.0;

  friend bool operator==(const BenchRow&, const BenchRow&) = default;
};

struct BenchTable {
  std::vector<BenchRow> rows;
  /// (file, reason) for every dataset that could not be read.
  std::vector<std::pair<std::string, std::string>> skipped;
};

BenchRow bench_one(const std::string& dataset, const BipartiteGraph& g, const BenchSetting& setting);

/// Every *.json file in `dir` (dataset name = file stem, sorted) under every setting.
BenchTable run_benchmark(const std::filesystem::path& dir, const std::vector<BenchSetting>& settings);

std::string bench_csv(const std::vector<BenchRow>& rows);
std::vector<BenchRow> parse_bench_csv(std::string_view csv);

struct CurvePoint {
  std::size_t k = 0;
  std::uint64_t crossings = 0;
  double cum_time_ms = 0.0;

  friend bool operator==(const CurvePoint&, const CurvePoint&) = default;
};

/// Crossings after each heuristic split (cfg.method, max_span or cr_count),
/// starting with the initial drawing at k = 0.
std::vector<CurvePoint> run_heuristic_curve(const BipartiteGraph& g, const RunConfig& cfg, std::size_t k_max);

std::string curve_csv(const std::vector<CurvePoint>& curve);
std::vector<CurvePoint> parse_curve_csv(std::string_view csv);

}  // namespace bisplit
