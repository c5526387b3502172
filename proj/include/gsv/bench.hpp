#pragma once

#include <array>
#include <cstdint>
#include <string>
#include <vector>

#include "gsv/matrix.hpp"

namespace gsv {

struct BenchConfig {
  std::vector<std::array<int, 3>> shapes;  // (m, p, n)
  std::vector<double> conditions;
  int trials = 1;
  uint64_t seed = 0;
  std::vector<std::string> modes;  // conversion-independent | conversion-complementary | oracle
  ScalarKind scalar_kind = ScalarKind::Real;
};

/// Key = value text config; shapes are written as MxPxN and lists are
/// comma separated, e.g.
///   shapes = 3x3x3, 5x4x4
///   conditions = 1e2, 1e8
///   trials = 5
///   seed = 42
///   modes = conversion-complementary, oracle
BenchConfig parse_bench_config(const std::string& path);

struct BenchRow {
  int m = 0, p = 0, n = 0;
  double condition = 0.0;
  std::string mode;
  int trial = 0;
  double max_err = 0.0;
  double median_err = 0.0;
  double ms = 0.0;
  bool failed = false;
  std::string failure;
};

/// One row per (cell, mode, trial). Errors are measured against the
/// generator's planted truth, never one method against another. Trials run
/// in parallel; each derives its own seed from (seed, cell, trial), so the
/// report is schedule independent.
std::vector<BenchRow> run_bench(const BenchConfig& config);

/// Writes the per-cell summary to `path` and the per-trial long-format table
/// (columns m,p,n,cond,mode,trial,max_err,median_err,ms) to `path` with a
/// ".long.csv" suffix appended.
void write_bench_report(const std::vector<BenchRow>& rows, const BenchConfig& config,
                        const std::string& path);

}  // namespace gsv
