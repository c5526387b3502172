#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "gsv/conversion.hpp"

namespace gsv {

enum class ResultFormat { Csv, Json };

struct StageTimings {
  double stacked_svd_ms = 0.0;
  double block_sv_ms = 0.0;
  double diagnostics_ms = 0.0;
};

struct ResultRecord {
  int m = 0, p = 0, n = 0;
  Mode mode = Mode::Complementary;
  std::vector<GsvPair> pairs;
  std::vector<double> pair_sum_residuals;
  std::vector<double> det_residuals;
  double stacked_condition = 0.0;
  uint64_t seed = 0;
  StageTimings timings;
};

/// CSV columns: index, alpha, beta, pair_sum_residual, det_residual.
/// JSON mirrors the record's field names. Numbers render in shortest
/// round-trip decimal form.
void write_result(const ResultRecord& record, const std::string& path, ResultFormat format);

std::string mode_name(Mode mode);
Mode mode_from_name(const std::string& name);

/// Shortest decimal string that round-trips to the same double.
std::string format_double(double v);

}  // namespace gsv
